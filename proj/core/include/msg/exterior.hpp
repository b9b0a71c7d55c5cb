#pragma once

#include "msg/poly.hpp"

#include <map>
#include <optional>

namespace msg
{

// sorted basis label i1 < i2 < ... < ik for dx^I or d/dx^I
struct IndexSet
{
	std::vector<int> idx;

	int degree() const { return (int)idx.size(); }
	bool operator==(IndexSet const &o) const { return idx == o.idx; }
	bool operator<(IndexSet const &o) const { return idx < o.idx; }
};

// merge two strictly increasing disjoint sets; nullopt if they intersect,
// sign = parity of the shuffle moving a++b into sorted order
std::optional<std::pair<IndexSet, int>> merge_indices(IndexSet const &a,
                                                      IndexSet const &b);

enum class Kind
{
	FormK,
	FieldK
};

template <Kind K> class Ext
{
  public:
	using TermMap = std::map<IndexSet, Poly>;

	Ext() = default;
	Ext(ChartPtr chart, int deg) : chart_(std::move(chart)), deg_(deg)
	{
		if (deg_ < 0 || deg_ > chart_->dim())
			throw std::invalid_argument("exterior: degree out of range");
	}

	static Ext basis(ChartPtr chart, IndexSet const &I)
	{
		Ext r(chart, I.degree());
		r.add_term(I, Poly::constant(chart, 1));
		return r;
	}

	static Ext scalar(ChartPtr chart, Poly const &p)
	{
		Ext r(chart, 0);
		r.add_term(IndexSet{}, p);
		return r;
	}

	ChartPtr const &chart() const { return chart_; }
	int degree() const { return deg_; }
	TermMap const &terms() const { return c_; }
	bool is_zero() const { return c_.empty(); }

	void add_term(IndexSet const &I, Poly const &p)
	{
		if (p.is_zero())
			return;
		if (I.degree() != deg_)
			throw std::invalid_argument("exterior: index degree mismatch");
		for (size_t i = 0; i + 1 < I.idx.size(); ++i)
			if (I.idx[i] >= I.idx[i + 1])
				throw std::invalid_argument("exterior: index set not sorted");
		if (!I.idx.empty() &&
		    (I.idx.front() < 0 || I.idx.back() >= chart_->dim()))
			throw std::out_of_range("exterior: index out of range");
		auto it = c_.find(I);
		if (it == c_.end())
			c_.emplace(I, p);
		else
		{
			it->second = it->second + p;
			if (it->second.is_zero())
				c_.erase(it);
		}
	}

	Poly coeff(IndexSet const &I) const
	{
		auto it = c_.find(I);
		return it == c_.end() ? Poly(chart_) : it->second;
	}

	Ext operator+(Ext const &o) const
	{
		require_same_chart(chart_, o.chart_);
		if (is_zero())
			return o;
		if (o.is_zero())
			return *this;
		if (deg_ != o.deg_)
			throw std::invalid_argument("exterior: degree mismatch in sum");
		Ext r = *this;
		for (auto const &[I, p] : o.c_)
			r.add_term(I, p);
		return r;
	}

	Ext operator-() const
	{
		Ext r(chart_, deg_);
		for (auto const &[I, p] : c_)
			r.c_.emplace(I, -p);
		return r;
	}

	Ext operator-(Ext const &o) const { return *this + (-o); }

	Ext operator*(Rat const &k) const
	{
		Ext r(chart_, deg_);
		if (k == 0)
			return r;
		for (auto const &[I, p] : c_)
			r.c_.emplace(I, p * k);
		return r;
	}

	Ext operator*(Poly const &q) const
	{
		Ext r(chart_, deg_);
		for (auto const &[I, p] : c_)
			r.add_term(I, p * q);
		return r;
	}

	bool operator==(Ext const &o) const
	{
		return same_chart(chart_, o.chart_) &&
		       (is_zero() ? o.is_zero() : (deg_ == o.deg_ && c_ == o.c_));
	}

	std::string str() const;

  private:
	ChartPtr chart_;
	int deg_ = 0;
	TermMap c_;
};

using Form = Ext<Kind::FormK>;
using MVF = Ext<Kind::FieldK>;

template <Kind K> Ext<K> wedge(Ext<K> const &a, Ext<K> const &b)
{
	require_same_chart(a.chart(), b.chart());
	int deg = a.degree() + b.degree();
	if (deg > a.chart()->dim())
		return Ext<K>(a.chart(), a.chart()->dim());
	Ext<K> r(a.chart(), deg);
	for (auto const &[I, p] : a.terms())
		for (auto const &[J, q] : b.terms())
			if (auto m = merge_indices(I, J))
				r.add_term(m->first, p * q * Rat(m->second));
	return r;
}

Form ext_d(Form const &a);
Form contract(MVF const &X, Form const &t);
Form lie_derivative(MVF const &X, Form const &t);
Form poincare_K(Form const &t);

struct ExactnessReport
{
	enum class Status
	{
		Zero,
		ClosedExact,
		ClosedDeg0Constant,
		NotClosed
	};

	Status status;
	std::optional<Form> primitive; // for ClosedExact, d(primitive) = input
	std::optional<Rat> value;      // for ClosedDeg0Constant
};

ExactnessReport classify_closed_exact(Form const &t);

// scale * X1 ^ ... ^ Xk with explicit degree-1 factors
struct DecomposableMVF
{
	std::vector<MVF> factors;
	Rat scale = 1;

	int degree() const { return (int)factors.size(); }
	MVF value() const;      // the wedge, including scale
	MVF hat(int i) const;   // wedge omitting factor i (0-based), without scale
};

} // namespace msg
