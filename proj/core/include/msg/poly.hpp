#pragma once

#include "msg/chart.hpp"
#include "msg/rat.hpp"

#include <map>
#include <vector>

namespace msg
{

// exponent vector, one entry per chart coordinate
struct Mono
{
	std::vector<int> e;

	int total() const
	{
		int t = 0;
		for (int x : e)
			t += x;
		return t;
	}

	bool operator==(Mono const &o) const { return e == o.e; }
};

// graded lexicographic: compare total degree first, then exponents
struct MonoLess
{
	bool operator()(Mono const &a, Mono const &b) const
	{
		int ta = a.total(), tb = b.total();
		if (ta != tb)
			return ta < tb;
		return a.e < b.e;
	}
};

class Poly
{
  public:
	using TermMap = std::map<Mono, Rat, MonoLess>;

	Poly() = default;
	explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}

	static Poly constant(ChartPtr chart, Rat const &c)
	{
		Poly p(chart);
		p.add_term(Mono{std::vector<int>(chart ? p.chart_->dim() : 0, 0)}, c);
		return p;
	}

	static Poly var(ChartPtr chart, int i, int power = 1);

	ChartPtr const &chart() const { return chart_; }
	TermMap const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	Rat constant_value() const; // requires is_constant()
	int total_degree() const;   // -1 for the zero polynomial

	void add_term(Mono const &m, Rat const &c);

	Poly operator+(Poly const &o) const;
	Poly operator-(Poly const &o) const;
	Poly operator-() const;
	Poly operator*(Poly const &o) const;
	Poly operator*(Rat const &c) const;
	bool operator==(Poly const &o) const;

	Poly partial(int i) const;
	Rat eval(std::vector<Rat> const &pt) const;

	// q(x) = integral_0^1 t^a p(t x) dt, exactly
	Poly ray_integral(int a) const;

	std::string str() const;

  private:
	ChartPtr chart_;
	TermMap terms_;
};

inline Poly operator*(Rat const &c, Poly const &p) { return p * c; }

} // namespace msg
