#include "msg/fuzz.hpp"

#include "msg/bracket.hpp"
#include "msg/noether.hpp"

#include <algorithm>

namespace msg
{

Poly random_poly(ChartPtr const &c, Rng &rng, int maxdeg, int nterms)
{
	Poly p(c);
	for (int t = 0; t < nterms; ++t)
	{
		Mono m{std::vector<int>(c->dim(), 0)};
		int deg = rng.below(maxdeg + 1);
		for (int d = 0; d < deg; ++d)
			m.e[rng.below(c->dim())] += 1;
		p.add_term(m, rng.coeff());
	}
	return p;
}

static IndexSet random_set(ChartPtr const &c, Rng &rng, int deg)
{
	std::vector<int> pool;
	for (int i = 0; i < c->dim(); ++i)
		pool.push_back(i);
	IndexSet I;
	for (int d = 0; d < deg; ++d)
	{
		int j = rng.below((int)pool.size());
		I.idx.push_back(pool[j]);
		pool.erase(pool.begin() + j);
	}
	std::sort(I.idx.begin(), I.idx.end());
	return I;
}

Form random_form(ChartPtr const &c, Rng &rng, int deg, int maxcoeffdeg,
                 int nterms)
{
	Form f(c, deg);
	for (int t = 0; t < nterms; ++t)
		f.add_term(random_set(c, rng, deg), random_poly(c, rng, maxcoeffdeg, 2));
	return f;
}

MVF random_mvf(ChartPtr const &c, Rng &rng, int deg, int maxcoeffdeg,
               int nterms)
{
	MVF f(c, deg);
	for (int t = 0; t < nterms; ++t)
		f.add_term(random_set(c, rng, deg), random_poly(c, rng, maxcoeffdeg, 2));
	return f;
}

std::vector<std::string> fuzz_suites()
{
	return {"dl",     "l-wedge", "bracket-hook", "l-bracket", "interior",
	        "cartan", "jacobi",  "rogers",       "noether",   "poincare"};
}

static ChartPtr random_chart(Rng &rng, int mindim, int maxdim)
{
	static std::vector<std::string> const pool{"x", "y", "z", "w", "u", "v"};
	int d = mindim + rng.below(maxdim - mindim + 1);
	return make_chart(
	    std::vector<std::string>(pool.begin(), pool.begin() + d));
}

// on a volume form every closed form is a contraction, so solving never fails
static HamPair random_pair(ChartPtr const &c, Rng &rng, Form const &omega,
                           int formdeg, int maxdeg)
{
	for (;;)
	{
		Form a = random_form(c, rng, formdeg, maxdeg);
		auto res = hamiltonian_solve(a, omega);
		if (res.pair && !res.pair->field.is_zero())
			return *res.pair;
	}
}

Report run_fuzz(std::string const &suite, int count, uint64_t seed, int maxdim,
                int maxdeg)
{
	if (count < 1)
		throw std::invalid_argument("fuzz: count must be at least 1");
	if (maxdim < 2 || maxdim > 6)
		throw std::invalid_argument("fuzz: max-dim must lie in [2,6]");
	if (maxdeg < 0)
		throw std::invalid_argument("fuzz: max-deg must be nonnegative");
	auto suites = fuzz_suites();
	if (std::find(suites.begin(), suites.end(), suite) == suites.end())
		throw std::invalid_argument("fuzz: unknown suite " + suite);

	Report rep;
	rep.command = "fuzz " + suite;
	Rng rng(seed);
	for (int it = 0; it < count; ++it)
	{
		std::string id = suite + "[" + std::to_string(it) + "]";
		if (suite == "dl")
		{
			auto c = random_chart(rng, 2, maxdim);
			int k = 1 + rng.below(std::min(3, c->dim()));
			MVF X = random_mvf(c, rng, k, maxdeg);
			Form t = random_form(c, rng, rng.below(c->dim() + 1), maxdeg);
			Form res = ext_d(lie_derivative(X, t)) -
			           lie_derivative(X, ext_d(t)) * Rat(sign_pow(k + 1));
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "l-wedge")
		{
			auto c = random_chart(rng, 2, maxdim);
			int k = 1 + rng.below(std::min(2, c->dim() - 1));
			int l = 1 + rng.below(std::min(2, c->dim() - k));
			MVF X = random_mvf(c, rng, k, maxdeg);
			MVF Y = random_mvf(c, rng, l, maxdeg);
			Form t = random_form(c, rng, rng.below(c->dim() + 1), maxdeg);
			Form res = lie_derivative(wedge(X, Y), t) -
			           contract(Y, lie_derivative(X, t)) * Rat(sign_pow(l)) -
			           lie_derivative(Y, contract(X, t));
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "bracket-hook" || suite == "l-bracket" ||
		         suite == "interior")
		{
			auto c = random_chart(rng, 2, maxdim);
			int k = 1 + rng.below(std::min(3, c->dim()));
			int l = 1 + rng.below(std::min(3, c->dim()));
			MVF X = random_mvf(c, rng, k, maxdeg);
			MVF Y = random_mvf(c, rng, l, maxdeg);
			Form t = random_form(c, rng, rng.below(c->dim() + 1), maxdeg);
			Form res = suite == "bracket-hook"
			               ? bracket_hook_residual(X, Y, t)
			               : suite == "l-bracket"
			                     ? lie_bracket_residual(X, Y, t)
			                     : interior_bracket_residual(X, Y, t);
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "cartan")
		{
			auto c = random_chart(rng, 2, maxdim);
			int k = 1 + rng.below(std::min(3, c->dim()));
			DecomposableMVF p;
			for (int i = 0; i < k; ++i)
				p.factors.push_back(random_mvf(c, rng, 1, maxdeg));
			p.scale = rng.coeff();
			Form t = random_form(c, rng, rng.below(c->dim() + 1), maxdeg);
			Form res = cartan_residual(p, list_boundary(p), t);
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "jacobi")
		{
			auto c = random_chart(rng, 3, std::max(3, maxdim));
			IndexSet full;
			for (int i = 0; i < c->dim(); ++i)
				full.idx.push_back(i);
			Form vol = Form::basis(c, full);
			HamPair a = random_pair(c, rng, vol, c->dim() - 2, maxdeg);
			HamPair b = random_pair(c, rng, vol, c->dim() - 2, maxdeg);
			HamPair d = random_pair(c, rng, vol, c->dim() - 2, maxdeg);
			Form res = jacobi_residual(a, b, d, vol);
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "rogers")
		{
			auto c = random_chart(rng, 3, std::max(3, maxdim));
			IndexSet full;
			for (int i = 0; i < c->dim(); ++i)
				full.idx.push_back(i);
			Form vol = Form::basis(c, full);
			int m = 2 + rng.below(2);
			std::vector<HamPair> pairs;
			for (int i = 0; i < m; ++i)
				pairs.push_back(random_pair(c, rng, vol, c->dim() - 2, maxdeg));
			Form res = rogers_residual(pairs, vol);
			rep.check(id, res.is_zero(), res.str());
		}
		else if (suite == "noether")
		{
			auto c = random_chart(rng, 3, std::max(3, maxdim));
			IndexSet full;
			for (int i = 0; i < c->dim(); ++i)
				full.idx.push_back(i);
			Form vol = Form::basis(c, full);
			int n = c->dim() - 1;
			PlecticSystem sys = make_system(vol);
			HamPair H = random_pair(c, rng, vol, n - 1, maxdeg);
			set_hamiltonian(sys, H.form, H.field);
			int k = 1 + rng.below(std::min(3, n));
			HamPair a = random_pair(c, rng, vol, n - k, maxdeg);
			auto nr = noether_residual(a, sys);
			bool ok = nr.res1.is_zero() && nr.res2.is_zero();
			rep.check(id, ok,
			          ok ? "0" : nr.res1.str() + " ; " + nr.res2.str());
		}
		else // poincare
		{
			auto c = random_chart(rng, 2, maxdim);
			Form t = random_form(c, rng, 1 + rng.below(c->dim()), maxdeg);
			Form res = ext_d(poincare_K(t)) + poincare_K(ext_d(t)) - t;
			rep.check(id, res.is_zero(), res.str());
		}
	}
	return rep;
}

} // namespace msg
