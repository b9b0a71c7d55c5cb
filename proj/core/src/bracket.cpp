#include "msg/bracket.hpp"

namespace msg
{

MVF vf_bracket(MVF const &X, MVF const &Y)
{
	require_same_chart(X.chart(), Y.chart());
	if (X.degree() != 1 || Y.degree() != 1)
		throw std::invalid_argument("vf_bracket: degree 1 fields required");
	auto c = X.chart();
	int n = c->dim();
	MVF r(c, 1);
	for (int j = 0; j < n; ++j)
	{
		Poly acc(c);
		for (int i = 0; i < n; ++i)
		{
			IndexSet bi{{i}};
			acc = acc + X.coeff(bi) * Y.coeff(IndexSet{{j}}).partial(i) -
			      Y.coeff(bi) * X.coeff(IndexSet{{j}}).partial(i);
		}
		r.add_term(IndexSet{{j}}, acc);
	}
	return r;
}

// split a coefficient-times-basis term into degree-1 factors, the polynomial
// riding on the first factor
static DecomposableMVF split_term(ChartPtr const &c, IndexSet const &I,
                                  Poly const &p)
{
	DecomposableMVF d;
	for (size_t a = 0; a < I.idx.size(); ++a)
	{
		MVF f(c, 1);
		f.add_term(IndexSet{{I.idx[a]}},
		           a == 0 ? p : Poly::constant(c, 1));
		d.factors.push_back(f);
	}
	return d;
}

MVF schouten(MVF const &X, MVF const &Y)
{
	require_same_chart(X.chart(), Y.chart());
	int k = X.degree(), l = Y.degree();
	if (k < 1 || l < 1)
		throw std::invalid_argument("schouten: degrees must be >= 1");
	auto c = X.chart();
	int rdeg = std::min(k + l - 1, c->dim());
	MVF r(c, rdeg);
	if (k + l - 1 > c->dim())
		return r;
	for (auto const &[I, p] : X.terms())
	{
		DecomposableMVF a = split_term(c, I, p);
		for (auto const &[J, q] : Y.terms())
		{
			DecomposableMVF b = split_term(c, J, q);
			for (int i = 0; i < k; ++i)
				for (int j = 0; j < l; ++j)
				{
					MVF br = vf_bracket(a.factors[i], b.factors[j]);
					if (br.is_zero())
						continue;
					MVF term = wedge(wedge(br, a.hat(i)), b.hat(j));
					r = r + term * Rat(sign_pow(i + j));
				}
		}
	}
	return r;
}

MVF list_boundary(DecomposableMVF const &p)
{
	int k = p.degree();
	auto c = p.factors.at(0).chart();
	MVF r(c, k >= 2 ? k - 1 : 0);
	for (int i = 0; i < k; ++i)
		for (int j = i + 1; j < k; ++j)
		{
			MVF acc = vf_bracket(p.factors[i], p.factors[j]);
			for (int m = 0; m < k; ++m)
				if (m != i && m != j)
					acc = wedge(acc, p.factors[m]);
			r = r + acc * Rat(sign_pow(i + j));
		}
	return r * p.scale;
}

Form interior_bracket_residual(MVF const &X, MVF const &Y, Form const &t)
{
	require_same_chart(X.chart(), t.chart());
	int k = X.degree(), l = Y.degree();
	Form r = contract(schouten(X, Y), t);
	r = r + contract(Y, ext_d(contract(X, t)));
	r = r - ext_d(contract(Y, contract(X, t))) * Rat(sign_pow(l));
	r = r - contract(X, contract(Y, ext_d(t))) * Rat(sign_pow(k * l + k));
	r = r + contract(X, ext_d(contract(Y, t))) * Rat(sign_pow(k * l + k + l));
	return r;
}

Form cartan_residual(DecomposableMVF const &p, MVF const &dp, Form const &t)
{
	int k = p.degree();
	if (k < 1)
		throw std::invalid_argument("cartan_residual: empty factor list");
	if (!dp.is_zero() && dp.degree() != k - 1)
		throw std::invalid_argument("cartan_residual: boundary degree mismatch");
	for (auto const &f : p.factors)
		if (f.degree() != 1)
			throw std::invalid_argument("cartan_residual: factors must be fields");
	MVF Vp = p.value();
	Form lhs = ext_d(contract(Vp, t)) * Rat(sign_pow(k));
	Form rhs = contract(dp, t) + contract(Vp, ext_d(t));
	for (int i = 0; i < k; ++i)
	{
		Form L = lie_derivative(p.factors[i], t);
		rhs = rhs + contract(p.hat(i), L) * (p.scale * Rat(sign_pow(i + 1)));
	}
	return lhs - rhs;
}

Form lie_bracket_residual(MVF const &X, MVF const &Y, Form const &t)
{
	int k = X.degree(), l = Y.degree();
	Form lhs = lie_derivative(schouten(X, Y), t);
	Form rhs =
	    lie_derivative(X, lie_derivative(Y, t)) *
	        Rat(sign_pow((k + 1) * (l + 1))) -
	    lie_derivative(Y, lie_derivative(X, t));
	return lhs - rhs;
}

Form bracket_hook_residual(MVF const &X, MVF const &Y, Form const &t)
{
	int k = X.degree(), l = Y.degree();
	Form lhs = contract(schouten(X, Y), t);
	Form rhs = lie_derivative(X, contract(Y, t)) * Rat(sign_pow((k + 1) * l)) -
	           contract(Y, lie_derivative(X, t));
	return lhs - rhs;
}

} // namespace msg
