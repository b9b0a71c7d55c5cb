#include "msg/exterior.hpp"

namespace msg
{

std::optional<std::pair<IndexSet, int>> merge_indices(IndexSet const &a,
                                                      IndexSet const &b)
{
	IndexSet out;
	out.idx.reserve(a.idx.size() + b.idx.size());
	size_t i = 0, j = 0;
	int swaps = 0;
	while (i < a.idx.size() && j < b.idx.size())
	{
		if (a.idx[i] == b.idx[j])
			return std::nullopt;
		if (a.idx[i] < b.idx[j])
			out.idx.push_back(a.idx[i++]);
		else
		{
			// b element jumps over the remaining a elements
			swaps += (int)(a.idx.size() - i);
			out.idx.push_back(b.idx[j++]);
		}
	}
	while (i < a.idx.size())
		out.idx.push_back(a.idx[i++]);
	while (j < b.idx.size())
		out.idx.push_back(b.idx[j++]);
	return std::make_pair(out, sign_pow(swaps));
}

Form ext_d(Form const &a)
{
	if (a.degree() >= a.chart()->dim())
		return Form(a.chart(), a.chart()->dim()); // top degree: d = 0
	Form r(a.chart(), a.degree() + 1);
	for (auto const &[J, f] : a.terms())
		for (int i = 0; i < a.chart()->dim(); ++i)
		{
			Poly df = f.partial(i);
			if (df.is_zero())
				continue;
			IndexSet di{{i}};
			if (auto m = merge_indices(di, J))
				r.add_term(m->first, df * Rat(m->second));
		}
	return r;
}

// interior product by the coordinate field d/dx_i
static Form contract_one(int i, Form const &t)
{
	Form r(t.chart(), t.degree() - 1);
	for (auto const &[J, f] : t.terms())
	{
		auto pos = std::find(J.idx.begin(), J.idx.end(), i);
		if (pos == J.idx.end())
			continue;
		int r1 = (int)(pos - J.idx.begin()); // 0-based position
		IndexSet K = J;
		K.idx.erase(K.idx.begin() + r1);
		r.add_term(K, f * Rat(sign_pow(r1)));
	}
	return r;
}

// X |- t with the first wedge factor contracted innermost:
// (X1 ^ ... ^ Xk) |- t = i_{Xk} ... i_{X1} t
Form contract(MVF const &X, Form const &t)
{
	require_same_chart(X.chart(), t.chart());
	if (X.degree() > t.degree())
		return Form(t.chart(), 0);
	Form out(t.chart(), t.degree() - X.degree());
	for (auto const &[I, g] : X.terms())
	{
		Form acc = t;
		for (int i : I.idx)
			acc = contract_one(i, acc);
		out = out + acc * g;
	}
	return out;
}

Form lie_derivative(MVF const &X, Form const &t)
{
	int k = X.degree();
	Form a = ext_d(contract(X, t));
	Form b = contract(X, ext_d(t));
	return a - b * Rat(sign_pow(k));
}

Form poincare_K(Form const &t)
{
	if (t.degree() < 1)
		throw std::invalid_argument("poincare_K: degree 0 input");
	int k = t.degree();
	Form r(t.chart(), k - 1);
	for (auto const &[J, f] : t.terms())
	{
		Poly g = f.ray_integral(k - 1);
		for (size_t r1 = 0; r1 < J.idx.size(); ++r1)
		{
			IndexSet K = J;
			K.idx.erase(K.idx.begin() + r1);
			Poly coeff =
			    g * Poly::var(t.chart(), J.idx[r1]) * Rat(sign_pow((long)r1));
			r.add_term(K, coeff);
		}
	}
	return r;
}

ExactnessReport classify_closed_exact(Form const &t)
{
	if (t.is_zero())
		return {ExactnessReport::Status::Zero, {}, {}};
	if (!ext_d(t).is_zero())
		return {ExactnessReport::Status::NotClosed, {}, {}};
	if (t.degree() == 0)
	{
		// closed polynomial 0-form on a chart is a constant
		Poly p = t.coeff(IndexSet{});
		return {ExactnessReport::Status::ClosedDeg0Constant, {},
		        p.constant_value()};
	}
	Form prim = poincare_K(t);
	if (!(ext_d(prim) == t))
		throw std::logic_error("poincare_K: homotopy identity failed");
	return {ExactnessReport::Status::ClosedExact, prim, {}};
}

MVF DecomposableMVF::value() const
{
	if (factors.empty())
		throw std::invalid_argument("decomposable: no factors");
	MVF acc = factors[0];
	for (size_t i = 1; i < factors.size(); ++i)
		acc = wedge(acc, factors[i]);
	return acc * scale;
}

MVF DecomposableMVF::hat(int i) const
{
	MVF acc;
	bool first = true;
	for (int j = 0; j < (int)factors.size(); ++j)
	{
		if (j == i)
			continue;
		acc = first ? factors[j] : wedge(acc, factors[j]);
		first = false;
	}
	if (first)
		return MVF::scalar(factors[0].chart(),
		                   Poly::constant(factors[0].chart(), 1));
	return acc;
}

template <Kind K> std::string Ext<K>::str() const
{
	if (c_.empty())
		return "0";
	std::string const prefix = (K == Kind::FormK) ? "d" : "d/d";
	std::string out;
	for (auto const &[I, p] : c_)
	{
		if (!out.empty())
			out += " + ";
		std::string basis;
		for (int i : I.idx)
		{
			if (!basis.empty())
				basis += "^";
			basis += prefix + chart_->names[i];
		}
		if (basis.empty())
		{
			out += p.str();
			continue;
		}
		if (p.is_constant() && p.constant_value() == 1)
			out += basis;
		else if (p.terms().size() == 1)
			out += p.str() + "*" + basis;
		else
			out += "(" + p.str() + ")*" + basis;
	}
	return out;
}

template std::string Ext<Kind::FormK>::str() const;
template std::string Ext<Kind::FieldK>::str() const;

} // namespace msg
