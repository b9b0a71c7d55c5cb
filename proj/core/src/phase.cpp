#include "msg/phase.hpp"

#include "msg/lie.hpp"

#include <set>

namespace msg
{

int PhaseSpace::fiber_index(IndexSet const &I) const
{
	for (size_t i = 0; i < fiber_sets.size(); ++i)
		if (fiber_sets[i] == I)
			return base->dim() + (int)i;
	throw std::invalid_argument("phase: unknown fiber index set");
}

static Poly inject(Poly const &p, ChartPtr const &total)
{
	Poly r(total);
	for (auto const &[m, c] : p.terms())
	{
		Mono mm = m;
		mm.e.resize(total->dim(), 0);
		r.add_term(mm, c);
	}
	return r;
}

PhaseSpace build_phase_space(ChartPtr const &base, int k)
{
	if (k < 1 || k > base->dim())
		throw std::invalid_argument("phase: k out of range");
	PhaseSpace ps;
	ps.base = base;
	ps.k = k;
	ps.fiber_sets = index_sets(base->dim(), k);
	std::vector<std::string> names = base->names;
	for (auto const &I : ps.fiber_sets)
	{
		std::string n = "p";
		for (int i : I.idx)
			n += std::to_string(i + 1);
		names.push_back(n);
	}
	ps.total = make_chart(std::move(names));
	ps.theta = Form(ps.total, k);
	for (size_t i = 0; i < ps.fiber_sets.size(); ++i)
		ps.theta.add_term(ps.fiber_sets[i],
		                  Poly::var(ps.total, base->dim() + (int)i));
	ps.omega = -ext_d(ps.theta);
	return ps;
}

Form position_form(Form const &alpha, PhaseSpace const &ps)
{
	require_same_chart(alpha.chart(), ps.base);
	if (alpha.degree() > ps.k)
		throw std::invalid_argument("position_form: degree exceeds k");
	Form r(ps.total, alpha.degree());
	for (auto const &[I, p] : alpha.terms())
		r.add_term(I, inject(p, ps.total));
	return r;
}

// sort v, returning the permutation sign; nullopt on a repeated entry
static std::optional<std::pair<IndexSet, int>> sort_signed(std::vector<int> v)
{
	int s = 1;
	for (size_t i = 1; i < v.size(); ++i)
		for (size_t j = i; j > 0 && v[j - 1] > v[j]; --j)
		{
			std::swap(v[j - 1], v[j]);
			s = -s;
		}
	for (size_t i = 0; i + 1 < v.size(); ++i)
		if (v[i] == v[i + 1])
			return std::nullopt;
	return std::make_pair(IndexSet{std::move(v)}, s);
}

MVF pushforward(MVF const &X, PhaseSpace const &ps)
{
	require_same_chart(X.chart(), ps.total);
	if (X.degree() != 1)
		throw std::invalid_argument("pushforward: degree-1 fields only");
	int n = ps.base->dim();
	MVF r(ps.base, 1);
	for (auto const &[I, p] : X.terms())
	{
		if (I.idx[0] >= n)
			continue;
		Poly q(ps.base);
		for (auto const &[m, c] : p.terms())
		{
			for (size_t i = n; i < m.e.size(); ++i)
				if (m.e[i] != 0)
					throw std::invalid_argument(
					    "pushforward: base component depends on fiber");
			Mono mm = m;
			mm.e.resize(n);
			q.add_term(mm, c);
		}
		r.add_term(I, q);
	}
	return r;
}

MVF complete_lift(MVF const &Y, PhaseSpace const &ps)
{
	require_same_chart(Y.chart(), ps.base);
	if (Y.degree() != 1)
		throw std::invalid_argument("complete_lift: degree-1 fields only");
	int n = ps.base->dim();
	MVF lift(ps.total, 1);
	for (auto const &[I, p] : Y.terms())
		lift.add_term(I, inject(p, ps.total));
	for (size_t fi = 0; fi < ps.fiber_sets.size(); ++fi)
	{
		IndexSet const &I = ps.fiber_sets[fi];
		Poly coeff(ps.total);
		for (int r = 0; r < ps.k; ++r)
			for (int b = 0; b < n; ++b)
			{
				Poly dYb = Y.coeff(IndexSet{{b}}).partial(I.idx[r]);
				if (dYb.is_zero())
					continue;
				std::vector<int> J = I.idx;
				J[r] = b;
				auto sj = sort_signed(std::move(J));
				if (!sj)
					continue;
				Poly pJ = Poly::var(ps.total, ps.fiber_index(sj->first));
				coeff = coeff - pJ * inject(dYb, ps.total) * Rat(sj->second);
			}
		lift.add_term(IndexSet{{n + (int)fi}}, coeff);
	}
	if (!(pushforward(lift, ps) == Y) ||
	    !lie_derivative(lift, ps.theta).is_zero())
		throw std::logic_error("complete_lift: defining invariants violated");
	return lift;
}

MVF complete_lift_multi(DecomposableMVF const &Y, PhaseSpace const &ps)
{
	MVF r = MVF::scalar(ps.total, Poly::constant(ps.total, Y.scale));
	for (auto const &f : Y.factors)
		r = wedge(r, complete_lift(f, ps));
	return r;
}

Form momentum_form(DecomposableMVF const &Y, PhaseSpace const &ps)
{
	int l = Y.degree();
	if (l < 1 || l > ps.k)
		throw std::invalid_argument("momentum_form: degree out of range");
	return contract(complete_lift_multi(Y, ps), ps.theta) * Rat(-zeta(l + 1));
}

Form momentum_form_general(MVF const &Y, PhaseSpace const &ps)
{
	require_same_chart(Y.chart(), ps.base);
	int l = Y.degree();
	if (l < 1 || l > ps.k)
		throw std::invalid_argument("momentum_form: degree out of range");
	Form r(ps.total, ps.k - l);
	for (auto const &[I, p] : Y.terms())
	{
		DecomposableMVF d;
		for (size_t i = 0; i < I.idx.size(); ++i)
		{
			MVF f = MVF::basis(ps.base, IndexSet{{I.idx[i]}});
			if (i == 0)
				f = f * p;
			d.factors.push_back(std::move(f));
		}
		r = r + momentum_form(d, ps);
	}
	return r;
}

MVF position_field(Form const &alpha, PhaseSpace const &ps)
{
	if (alpha.degree() != ps.k - 1)
		throw std::invalid_argument("position_field: need a (k-1)-form");
	Form at = position_form(alpha, ps);
	Form da = ext_d(at);
	int n = ps.base->dim();
	int nf = (int)ps.fiber_sets.size();
	std::vector<Form> cols;
	std::set<IndexSet> rows;
	for (int j = 0; j < nf; ++j)
	{
		cols.push_back(
		    contract(MVF::basis(ps.total, IndexSet{{n + j}}), ps.omega));
		for (auto const &[I, p] : cols.back().terms())
			rows.insert(I);
	}
	for (auto const &[I, p] : da.terms())
		rows.insert(I);
	std::vector<IndexSet> rowv(rows.begin(), rows.end());
	QMat mat(rowv.size(), QVec(nf, Rat(0)));
	for (int j = 0; j < nf; ++j)
		for (size_t i = 0; i < rowv.size(); ++i)
		{
			Poly c = cols[j].coeff(rowv[i]);
			if (!c.is_zero())
				mat[i][j] = c.constant_value();
		}
	std::set<Mono, MonoLess> monos;
	for (auto const &[I, p] : da.terms())
		for (auto const &[m, c] : p.terms())
			monos.insert(m);
	MVF X(ps.total, 1);
	for (auto const &m : monos)
	{
		QVec rhs(rowv.size(), Rat(0));
		for (size_t i = 0; i < rowv.size(); ++i)
		{
			Poly c = da.coeff(rowv[i]);
			auto it = c.terms().find(m);
			if (it != c.terms().end())
				rhs[i] = -it->second;
		}
		auto x = solve(mat, rhs);
		if (!x)
			throw std::invalid_argument("position_field: no fiber solution");
		for (int j = 0; j < nf; ++j)
			if ((*x)[j] != 0)
			{
				Poly mono(ps.total);
				mono.add_term(m, (*x)[j]);
				X.add_term(IndexSet{{n + j}}, mono);
			}
	}
	if (!(da + contract(X, ps.omega)).is_zero())
		throw std::logic_error("position_field: verification failed");
	return X;
}

MomentumBracketResiduals momentum_bracket_residuals(DecomposableMVF const &Y1,
                                                    DecomposableMVF const &Y2,
                                                    Form const &alpha,
                                                    Form const &beta,
                                                    PhaseSpace const &ps)
{
	if (!list_boundary(Y1).is_zero() || !list_boundary(Y2).is_zero())
		throw std::invalid_argument(
		    "momentum_bracket_residuals: factors outside the Lie kernel");
	int s = Y1.degree(), t = Y2.degree();
	MVF L1 = complete_lift_multi(Y1, ps);
	MVF L2 = complete_lift_multi(Y2, ps);
	HamPair h1{momentum_form(Y1, ps), L1 * Rat(zeta(s))};
	HamPair h2{momentum_form(Y2, ps), L2 * Rat(zeta(t))};
	MVF br12 = schouten(Y1.value(), Y2.value());
	Form pbr = br12.is_zero()
	               ? Form(ps.total, ps.k - (s + t - 1))
	               : momentum_form_general(br12, ps);
	Form corr = ext_d(contract(L1, contract(L2, ps.theta))) *
	            Rat(sign_pow(1 + t + s * t) * zeta(s + 1) * zeta(t + 1));
	MomentumBracketResiduals out;
	out.momentum_momentum = poisson(h1, h2, ps.omega) +
	                        pbr * Rat(sign_pow(t * s + s + t)) + corr;
	HamPair pa{position_form(alpha, ps), position_field(alpha, ps)};
	HamPair pb{position_form(beta, ps), position_field(beta, ps)};
	out.position_position = poisson(pa, pb, ps.omega);
	out.position_momentum =
	    poisson(pa, h1, ps.omega) +
	    position_form(contract(Y1.value(), ext_d(alpha)), ps) * Rat(zeta(s));
	return out;
}

} // namespace msg
