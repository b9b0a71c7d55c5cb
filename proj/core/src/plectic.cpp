#include "msg/plectic.hpp"
#include "msg/lie.hpp"

#include <set>

namespace msg
{

int zeta(int k)
{
	if (k < 1)
		throw std::invalid_argument("zeta: k must be positive");
	return -sign_pow((long)k * (k + 1) / 2);
}

static bool form_constant(Form const &t)
{
	for (auto const &[I, p] : t.terms())
		if (!p.is_constant())
			return false;
	return true;
}

// columns: degree-k basis multivectors; rows: coefficients of their
// contraction into omega, evaluated at pt when non-constant
static QMat pairing_matrix(Form const &omega, int k,
                           std::vector<Rat> const *pt)
{
	auto c = omega.chart();
	auto cols = index_sets(c->dim(), k);
	auto rows = index_sets(c->dim(), omega.degree() - k);
	QMat m(rows.size(), QVec(cols.size(), Rat(0)));
	for (size_t j = 0; j < cols.size(); ++j)
	{
		Form ct = contract(MVF::basis(c, cols[j]), omega);
		for (size_t i = 0; i < rows.size(); ++i)
		{
			Poly p = ct.coeff(rows[i]);
			if (p.is_zero())
				continue;
			m[i][j] = pt ? p.eval(*pt) : p.constant_value();
		}
	}
	return m;
}

NplecticReport check_nplectic(Form const &omega, std::vector<Rat> const *sample)
{
	if (omega.degree() < 2)
		throw std::invalid_argument("check_nplectic: degree must be >= 2");
	NplecticReport rep;
	rep.closed = ext_d(omega).is_zero();
	bool constant = form_constant(omega);
	std::vector<Rat> origin(omega.chart()->dim(), Rat(0));
	std::vector<Rat> const *pt =
	    constant ? nullptr : (sample ? sample : &origin);
	QMat m = pairing_matrix(omega, 1, pt);
	bool full = rank(m) == omega.chart()->dim();
	if (!full)
		rep.nondeg = NplecticReport::Nondeg::No;
	else
		rep.nondeg = constant ? NplecticReport::Nondeg::Yes
		                      : NplecticReport::Nondeg::GenericAtSample;
	return rep;
}

std::vector<MVF> omega_kernel_basis(Form const &omega, int k)
{
	if (!form_constant(omega))
		throw std::invalid_argument("omega_kernel_basis: omega must be constant");
	auto c = omega.chart();
	auto cols = index_sets(c->dim(), k);
	QMat m = pairing_matrix(omega, k, nullptr);
	std::vector<MVF> out;
	for (auto const &v : nullspace(m, (int)cols.size()))
	{
		MVF x(c, k);
		for (size_t j = 0; j < cols.size(); ++j)
			if (v[j] != 0)
				x.add_term(cols[j], Poly::constant(c, v[j]));
		out.push_back(std::move(x));
	}
	return out;
}

HamVerify hamiltonian_verify(Form const &alpha, MVF const &X, Form const &omega)
{
	require_same_chart(alpha.chart(), omega.chart());
	if (alpha.degree() + 1 != omega.degree() - X.degree())
		throw std::invalid_argument("hamiltonian_verify: degree mismatch");
	Form da = ext_d(alpha);
	Form hook = contract(X, omega);
	HamVerify rep{da + hook, 0};
	if (rep.residual.is_zero())
		rep.matched_sign = 1;
	else if ((da - hook).is_zero())
		rep.matched_sign = -1;
	return rep;
}

std::pair<HamPair, int> make_ham_pair(Form const &alpha, MVF const &X,
                                      Form const &omega)
{
	auto rep = hamiltonian_verify(alpha, X, omega);
	if (rep.matched_sign == 0)
		throw std::invalid_argument("make_ham_pair: pair is not Hamiltonian");
	MVF f = rep.matched_sign == 1 ? X : -X;
	return {HamPair{alpha, f}, rep.matched_sign};
}

HamSolveResult hamiltonian_solve(Form const &alpha, Form const &omega)
{
	if (!form_constant(omega))
		throw std::invalid_argument("hamiltonian_solve: omega must be constant");
	auto c = alpha.chart();
	require_same_chart(c, omega.chart());
	int k = omega.degree() - 1 - alpha.degree();
	if (k < 1 || k > c->dim())
		throw std::invalid_argument("hamiltonian_solve: degree bookkeeping");
	Form da = ext_d(alpha);
	auto cols = index_sets(c->dim(), k);
	auto rows = index_sets(c->dim(), alpha.degree() + 1);
	QMat m = pairing_matrix(omega, k, nullptr);

	// collect every coefficient monomial of d(alpha)
	std::set<Mono, MonoLess> monos;
	for (auto const &[J, p] : da.terms())
		for (auto const &[mo, coef] : p.terms())
			monos.insert(mo);

	HamSolveResult res;
	MVF X(c, k);
	for (auto const &mo : monos)
	{
		QVec rhs(rows.size(), Rat(0));
		for (size_t i = 0; i < rows.size(); ++i)
		{
			auto const &p = da.coeff(rows[i]);
			auto it = p.terms().find(mo);
			if (it != p.terms().end())
				rhs[i] = -it->second;
		}
		auto x = solve(m, rhs);
		if (!x)
		{
			res.kernel = omega_kernel_basis(omega, k);
			return res;
		}
		for (size_t j = 0; j < cols.size(); ++j)
			if ((*x)[j] != 0)
			{
				Poly p(c);
				p.add_term(mo, (*x)[j]);
				X.add_term(cols[j], p);
			}
	}
	res.pair = HamPair{alpha, X};
	res.kernel = omega_kernel_basis(omega, k);
	return res;
}

PlecticSystem make_system(Form const &omega, std::vector<Rat> const *sample)
{
	auto rep = check_nplectic(omega, sample);
	if (!rep.closed)
		throw std::invalid_argument("make_system: omega is not closed");
	if (rep.nondeg == NplecticReport::Nondeg::No)
		throw std::invalid_argument("make_system: omega is degenerate");
	PlecticSystem sys;
	sys.chart = omega.chart();
	sys.omega = omega;
	sys.n = omega.degree() - 1;
	return sys;
}

void set_hamiltonian(PlecticSystem &sys, Form const &H, MVF const &XH)
{
	if (H.degree() != sys.n - 1 || XH.degree() != 1)
		throw std::invalid_argument("set_hamiltonian: degree mismatch");
	auto [pair, sign] = make_ham_pair(H, XH, sys.omega);
	sys.ham = pair;
	sys.ham_sign = sign;
}

Form poisson(HamPair const &a, HamPair const &b, Form const &omega)
{
	require_same_chart(a.form.chart(), omega.chart());
	int l = b.field.degree();
	return contract(b.field, contract(a.field, omega)) * Rat(sign_pow(l + 1));
}

Form jacobi_residual(HamPair const &a, HamPair const &b, HamPair const &c,
                     Form const &omega)
{
	int A = a.field.degree() + 1;
	int B = b.field.degree() + 1;
	int C = c.field.degree() + 1;
	// brackets are Hamiltonian with field the Schouten bracket of the fields
	HamPair bc{poisson(b, c, omega), schouten(b.field, c.field)};
	HamPair ca{poisson(c, a, omega), schouten(c.field, a.field)};
	HamPair ab{poisson(a, b, omega), schouten(a.field, b.field)};
	Form lhs = poisson(a, bc, omega) * Rat(sign_pow(A * C)) +
	           poisson(b, ca, omega) * Rat(sign_pow(B * A)) +
	           poisson(c, ab, omega) * Rat(sign_pow(C * B));
	Form inner =
	    contract(a.field, contract(b.field, contract(c.field, omega)));
	Form rhs = ext_d(inner) * Rat(sign_pow(B * C + B * A + B));
	return lhs - rhs;
}

Form lie_n_bracket(std::vector<HamPair> const &pairs, Form const &omega)
{
	if (pairs.empty())
		throw std::invalid_argument("lie_n_bracket: empty argument list");
	int n = omega.degree() - 1;
	Form acc = omega;
	for (auto const &p : pairs)
	{
		if (p.form.degree() != n - 1 || p.field.degree() != 1)
			throw std::invalid_argument("lie_n_bracket: degree violation");
		acc = contract(p.field, acc);
	}
	return acc * Rat(zeta((int)pairs.size()));
}

Form rogers_residual(std::vector<HamPair> const &pairs, Form const &omega)
{
	int m = (int)pairs.size();
	if (m < 2)
		throw std::invalid_argument("rogers_residual: need at least two pairs");
	int n = omega.degree() - 1;
	Form acc = omega;
	for (auto const &p : pairs)
	{
		if (p.form.degree() != n - 1 || p.field.degree() != 1)
			throw std::invalid_argument("rogers_residual: degree violation");
		acc = contract(p.field, acc);
	}
	Form lhs = ext_d(acc);
	Form rhs(omega.chart(), lhs.degree());
	for (int i = 0; i < m; ++i)
		for (int j = i + 1; j < m; ++j)
		{
			Form term =
			    contract(vf_bracket(pairs[i].field, pairs[j].field), omega);
			for (int t = 0; t < m; ++t)
				if (t != i && t != j)
					term = contract(pairs[t].field, term);
			rhs = rhs + term * Rat(sign_pow(i + j));
		}
	rhs = rhs * Rat(sign_pow(m));
	return lhs - rhs;
}

} // namespace msg
