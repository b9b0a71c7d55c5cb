#include "msg/lie.hpp"

#include <functional>
#include <stdexcept>

namespace msg
{

QVec LieAlg::bracket(QVec const &a, QVec const &b) const
{
	int n = dim();
	QVec r(n, Rat(0));
	for (int i = 0; i < n; ++i)
	{
		if (a[i] == 0)
			continue;
		for (int j = 0; j < n; ++j)
		{
			if (b[j] == 0)
				continue;
			for (int m = 0; m < n; ++m)
				r[m] += a[i] * b[j] * table[i][j][m];
		}
	}
	return r;
}

static bool vec_zero(QVec const &v)
{
	for (auto const &x : v)
		if (x != 0)
			return false;
	return true;
}

LieAlgPtr make_lie_alg(std::vector<std::string> names,
                       std::vector<std::vector<QVec>> table)
{
	auto g = std::make_shared<LieAlg>();
	g->names = std::move(names);
	g->table = std::move(table);
	int n = g->dim();
	if ((int)g->table.size() != n)
		throw std::invalid_argument("lie: bracket table size mismatch");
	for (auto const &row : g->table)
	{
		if ((int)row.size() != n)
			throw std::invalid_argument("lie: bracket table size mismatch");
		for (auto const &v : row)
			if ((int)v.size() != n)
				throw std::invalid_argument("lie: bracket table size mismatch");
	}
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int m = 0; m < n; ++m)
				if (g->table[i][j][m] != -g->table[j][i][m])
					throw std::invalid_argument("lie: bracket not antisymmetric");
	auto e = [&](int i) {
		QVec v(n, Rat(0));
		v[i] = 1;
		return v;
	};
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = j + 1; k < n; ++k)
			{
				QVec s = g->bracket(g->bracket(e(i), e(j)), e(k));
				QVec t = g->bracket(g->bracket(e(j), e(k)), e(i));
				QVec u = g->bracket(g->bracket(e(k), e(i)), e(j));
				for (int m = 0; m < n; ++m)
					if (s[m] + t[m] + u[m] != 0)
						throw std::invalid_argument("lie: Jacobi identity fails");
			}
	return g;
}

GMulti GMulti::basis(LieAlgPtr a, IndexSet const &I)
{
	GMulti r(std::move(a), I.degree());
	r.add_term(I, 1);
	return r;
}

void GMulti::add_term(IndexSet const &I, Rat const &r)
{
	if (r == 0)
		return;
	if (I.degree() != deg)
		throw std::invalid_argument("gmulti: index degree mismatch");
	for (size_t i = 0; i + 1 < I.idx.size(); ++i)
		if (I.idx[i] >= I.idx[i + 1])
			throw std::invalid_argument("gmulti: index set not sorted");
	if (!I.idx.empty() && (I.idx.front() < 0 || I.idx.back() >= alg->dim()))
		throw std::out_of_range("gmulti: index out of range");
	auto it = coords.find(I);
	if (it == coords.end())
		coords.emplace(I, r);
	else
	{
		it->second += r;
		if (it->second == 0)
			coords.erase(it);
	}
}

Rat GMulti::coord(IndexSet const &I) const
{
	auto it = coords.find(I);
	return it == coords.end() ? Rat(0) : it->second;
}

GMulti GMulti::operator+(GMulti const &o) const
{
	if (is_zero())
		return o;
	if (o.is_zero())
		return *this;
	if (alg != o.alg)
		throw std::invalid_argument("gmulti: algebra mismatch");
	if (deg != o.deg)
		throw std::invalid_argument("gmulti: degree mismatch in sum");
	GMulti r = *this;
	for (auto const &[I, x] : o.coords)
		r.add_term(I, x);
	return r;
}

GMulti GMulti::operator-() const
{
	GMulti r(alg, deg);
	for (auto const &[I, x] : coords)
		r.coords.emplace(I, -x);
	return r;
}

GMulti GMulti::operator*(Rat const &k) const
{
	GMulti r(alg, deg);
	if (k == 0)
		return r;
	for (auto const &[I, x] : coords)
		r.coords.emplace(I, x * k);
	return r;
}

bool GMulti::operator==(GMulti const &o) const
{
	if (is_zero() || o.is_zero())
		return is_zero() && o.is_zero();
	return alg == o.alg && deg == o.deg && coords == o.coords;
}

std::string GMulti::str() const
{
	if (is_zero())
		return "0";
	std::string out;
	for (auto const &[I, x] : coords)
	{
		if (!out.empty())
			out += " + ";
		std::string basis;
		for (int i : I.idx)
		{
			if (!basis.empty())
				basis += "^";
			basis += alg->names[i];
		}
		if (basis.empty())
			out += rat_str(x);
		else if (x == 1)
			out += basis;
		else
			out += rat_str(x) + "*" + basis;
	}
	return out;
}

GMulti wedge_g(GMulti const &a, GMulti const &b)
{
	if (!a.alg || a.alg != b.alg)
		throw std::invalid_argument("gmulti: algebra mismatch");
	int deg = std::min(a.deg + b.deg, a.alg->dim());
	GMulti r(a.alg, deg);
	if (a.deg + b.deg > a.alg->dim())
		return r;
	for (auto const &[I, x] : a.coords)
		for (auto const &[J, y] : b.coords)
			if (auto m = merge_indices(I, J))
				r.add_term(m->first, x * y * Rat(m->second));
	return r;
}

std::vector<IndexSet> index_sets(int n, int k)
{
	std::vector<IndexSet> out;
	if (k < 0 || k > n)
		return out;
	IndexSet cur;
	std::function<void(int)> rec = [&](int from) {
		if (cur.degree() == k)
		{
			out.push_back(cur);
			return;
		}
		for (int i = from; i < n; ++i)
		{
			cur.idx.push_back(i);
			rec(i + 1);
			cur.idx.pop_back();
		}
	};
	rec(0);
	return out;
}

GMulti ce_boundary(GMulti const &p)
{
	GMulti r(p.alg, p.deg >= 2 ? p.deg - 2 + 1 : 0);
	if (p.deg < 2)
		return r;
	int n = p.alg->dim();
	for (auto const &[I, x] : p.coords)
		for (int a = 0; a < p.deg; ++a)
			for (int b = a + 1; b < p.deg; ++b)
			{
				IndexSet rest;
				for (int m = 0; m < p.deg; ++m)
					if (m != a && m != b)
						rest.idx.push_back(I.idx[m]);
				QVec br = p.alg->table[I.idx[a]][I.idx[b]];
				for (int m = 0; m < n; ++m)
				{
					if (br[m] == 0)
						continue;
					if (auto mg = merge_indices(IndexSet{{m}}, rest))
						r.add_term(mg->first,
						           x * br[m] * Rat(mg->second * sign_pow(a + b)));
				}
			}
	return r;
}

static QVec gmulti_coords(GMulti const &p, std::vector<IndexSet> const &sets)
{
	QVec v;
	v.reserve(sets.size());
	for (auto const &I : sets)
		v.push_back(p.coord(I));
	return v;
}

std::vector<GMulti> lie_kernel_basis(LieAlgPtr const &g, int k)
{
	auto dom = index_sets(g->dim(), k);
	auto cod = index_sets(g->dim(), k >= 2 ? k - 1 : 0);
	QMat m(cod.size(), QVec(dom.size(), Rat(0)));
	for (size_t j = 0; j < dom.size(); ++j)
	{
		GMulti b = ce_boundary(GMulti::basis(g, dom[j]));
		QVec col = gmulti_coords(b, cod);
		for (size_t i = 0; i < cod.size(); ++i)
			m[i][j] = col[i];
	}
	std::vector<GMulti> out;
	for (auto const &v : nullspace(m, (int)dom.size()))
	{
		GMulti p(g, k);
		for (size_t j = 0; j < dom.size(); ++j)
			p.add_term(dom[j], v[j]);
		out.push_back(std::move(p));
	}
	return out;
}

GMulti schouten_g(GMulti const &p, GMulti const &q)
{
	if (!p.alg || p.alg != q.alg)
		throw std::invalid_argument("gmulti: algebra mismatch");
	if (p.deg < 1 || q.deg < 1)
		throw std::invalid_argument("schouten_g: degrees must be >= 1");
	int k = p.deg;
	// [p,q] = (-1)^k ( d(p^q) - d(p)^q - (-1)^k p^d(q) )
	GMulti a = ce_boundary(wedge_g(p, q));
	GMulti b = wedge_g(ce_boundary(p), q);
	GMulti c = wedge_g(p, ce_boundary(q)) * Rat(sign_pow(k));
	GMulti r = (a - b - c) * Rat(sign_pow(k));
	r.deg = std::min(k + q.deg - 1, p.alg->dim());
	if (!r.is_zero() && r.coords.begin()->first.degree() != r.deg)
		throw std::logic_error("schouten_g: degree bookkeeping failed");
	return r;
}

GMulti ad_action(GMulti const &xi, GMulti const &p)
{
	if (xi.deg != 1)
		throw std::invalid_argument("ad_action: first argument must have degree 1");
	return schouten_g(xi, p);
}

H0Report h0_bracket_span_check(LieAlgPtr const &g, int k)
{
	H0Report rep;
	auto kernel = lie_kernel_basis(g, k);
	rep.kernel_dim = (int)kernel.size();
	auto sets = index_sets(g->dim(), k);
	QMat span_rows;
	for (auto const &p : kernel)
		for (int i = 0; i < g->dim(); ++i)
		{
			GMulti br = schouten_g(p, GMulti::basis(g, IndexSet{{i}}));
			if (!br.is_zero())
				span_rows.push_back(gmulti_coords(br, sets));
		}
	rep.span_dim = span_rows.empty() ? 0 : rank(span_rows);
	QMat combined = span_rows;
	for (auto const &p : kernel)
		combined.push_back(gmulti_coords(p, sets));
	int comb = combined.empty() ? 0 : rank(combined);
	rep.equals_kernel = rep.span_dim == rep.kernel_dim && comb == rep.kernel_dim;
	return rep;
}

ActionModel make_action(LieAlgPtr alg, ChartPtr chart, std::vector<MVF> gens)
{
	ActionModel a{std::move(alg), std::move(chart), std::move(gens)};
	int n = a.alg->dim();
	if ((int)a.gens.size() != n)
		throw std::invalid_argument("action: one generator per basis element");
	for (auto const &v : a.gens)
		if (v.degree() != 1)
			throw std::invalid_argument("action: generators must be vector fields");
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			MVF lhs = vf_bracket(a.gens[i], a.gens[j]);
			MVF vbr(a.chart, 1);
			for (int m = 0; m < n; ++m)
				vbr = vbr + a.gens[m] * a.alg->table[i][j][m];
			if (!(lhs + vbr).is_zero())
				throw std::invalid_argument(
				    "action: generators are not an anti-homomorphism");
		}
	return a;
}

MVF generator_mvf(ActionModel const &a, GMulti const &p)
{
	MVF r(a.chart, std::min(p.deg, a.chart->dim()));
	for (auto const &[I, x] : p.coords)
	{
		MVF acc = MVF::scalar(a.chart, Poly::constant(a.chart, x));
		for (int i : I.idx)
			acc = wedge(acc, a.gens[i]);
		r = r + acc;
	}
	return r;
}

bool action_preserves(ActionModel const &a, Form const &t)
{
	for (auto const &v : a.gens)
		if (!lie_derivative(v, t).is_zero())
			return false;
	return true;
}

static std::vector<std::string> enames(int n)
{
	std::vector<std::string> out;
	for (int i = 1; i <= n; ++i)
		out.push_back("e" + std::to_string(i));
	return out;
}

static std::vector<std::vector<QVec>> zero_table(int n)
{
	return std::vector<std::vector<QVec>>(
	    n, std::vector<QVec>(n, QVec(n, Rat(0))));
}

// set [e_i,e_j] = sum c_m e_m and the antisymmetric counterpart
static void set_bracket(std::vector<std::vector<QVec>> &t, int i, int j,
                        QVec const &c)
{
	t[i][j] = c;
	QVec neg = c;
	for (auto &x : neg)
		x = -x;
	t[j][i] = neg;
}

LieAlgPtr abelian_alg(int n) { return make_lie_alg(enames(n), zero_table(n)); }

LieAlgPtr heisenberg3()
{
	auto t = zero_table(3);
	set_bracket(t, 0, 1, {Rat(0), Rat(0), Rat(1)});
	return make_lie_alg(enames(3), t);
}

LieAlgPtr so3()
{
	auto t = zero_table(3);
	set_bracket(t, 0, 1, {Rat(0), Rat(0), Rat(1)});
	set_bracket(t, 1, 2, {Rat(1), Rat(0), Rat(0)});
	set_bracket(t, 2, 0, {Rat(0), Rat(1), Rat(0)});
	return make_lie_alg(enames(3), t);
}

LieAlgPtr se2()
{
	// e1 rotation, e2/e3 translations
	auto t = zero_table(3);
	set_bracket(t, 0, 1, {Rat(0), Rat(0), Rat(1)});
	set_bracket(t, 0, 2, {Rat(0), Rat(-1), Rat(0)});
	return make_lie_alg(enames(3), t);
}

LieAlgPtr solvable_rr2()
{
	// e1 scaling both translation directions
	auto t = zero_table(3);
	set_bracket(t, 0, 1, {Rat(0), Rat(1), Rat(0)});
	set_bracket(t, 0, 2, {Rat(0), Rat(0), Rat(1)});
	return make_lie_alg(enames(3), t);
}

std::vector<LieAlgPtr> algebra_library()
{
	return {abelian_alg(3), abelian_alg(4), heisenberg3(), so3(), se2(),
	        solvable_rr2()};
}

} // namespace msg
