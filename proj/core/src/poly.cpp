#include "msg/poly.hpp"

#include <cassert>
#include <stdexcept>

namespace msg
{

Poly Poly::var(ChartPtr chart, int i, int power)
{
	if (!chart || i < 0 || i >= chart->dim())
		throw std::out_of_range("poly: coordinate index out of range");
	if (power < 0)
		throw std::invalid_argument("poly: negative power");
	Poly p(chart);
	Mono m{std::vector<int>(chart->dim(), 0)};
	m.e[i] = power;
	p.add_term(m, 1);
	return p;
}

bool Poly::is_constant() const
{
	return terms_.empty() ||
	       (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rat Poly::constant_value() const
{
	if (terms_.empty())
		return 0;
	assert(is_constant());
	return terms_.begin()->second;
}

int Poly::total_degree() const
{
	if (terms_.empty())
		return -1;
	return terms_.rbegin()->first.total();
}

void Poly::add_term(Mono const &m, Rat const &c)
{
	if (c == 0)
		return;
	if ((int)m.e.size() != chart_->dim())
		throw std::invalid_argument("poly: monomial length mismatch");
	auto [it, fresh] = terms_.try_emplace(m, c);
	if (!fresh)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

Poly Poly::operator+(Poly const &o) const
{
	require_same_chart(chart_, o.chart_);
	Poly r(chart_);
	r.terms_ = terms_;
	for (auto const &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

Poly Poly::operator-(Poly const &o) const { return *this + (-o); }

Poly Poly::operator-() const
{
	Poly r(chart_);
	for (auto const &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

Poly Poly::operator*(Poly const &o) const
{
	require_same_chart(chart_, o.chart_);
	Poly r(chart_);
	for (auto const &[ma, ca] : terms_)
		for (auto const &[mb, cb] : o.terms_)
		{
			Mono m = ma;
			for (size_t i = 0; i < m.e.size(); ++i)
				m.e[i] += mb.e[i];
			r.add_term(m, ca * cb);
		}
	return r;
}

Poly Poly::operator*(Rat const &c) const
{
	Poly r(chart_);
	if (c == 0)
		return r;
	for (auto const &[m, k] : terms_)
		r.terms_.emplace(m, k * c);
	return r;
}

bool Poly::operator==(Poly const &o) const
{
	return same_chart(chart_, o.chart_) && terms_ == o.terms_;
}

Poly Poly::partial(int i) const
{
	if (i < 0 || i >= chart_->dim())
		throw std::out_of_range("poly: coordinate index out of range");
	Poly r(chart_);
	for (auto const &[m, c] : terms_)
	{
		if (m.e[i] == 0)
			continue;
		Mono n = m;
		n.e[i] -= 1;
		r.add_term(n, c * m.e[i]);
	}
	return r;
}

Rat Poly::eval(std::vector<Rat> const &pt) const
{
	if ((int)pt.size() != chart_->dim())
		throw std::invalid_argument("poly: evaluation point length mismatch");
	Rat acc = 0;
	for (auto const &[m, c] : terms_)
	{
		Rat v = c;
		for (size_t i = 0; i < m.e.size(); ++i)
			for (int k = 0; k < m.e[i]; ++k)
				v *= pt[i];
		acc += v;
	}
	return acc;
}

Poly Poly::ray_integral(int a) const
{
	if (a < 0)
		throw std::invalid_argument("poly: negative ray exponent");
	Poly r(chart_);
	for (auto const &[m, c] : terms_)
		r.add_term(m, c / Rat(a + m.total() + 1));
	return r;
}

std::string Poly::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	// highest degree first reads naturally
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		auto const &[m, c] = *it;
		Rat a = c;
		if (out.empty())
		{
			if (a < 0)
			{
				out += "-";
				a = -a;
			}
		}
		else
		{
			if (a < 0)
			{
				out += " - ";
				a = -a;
			}
			else
				out += " + ";
		}
		std::string vars;
		for (size_t i = 0; i < m.e.size(); ++i)
		{
			if (m.e[i] == 0)
				continue;
			if (!vars.empty())
				vars += "*";
			vars += chart_->names[i];
			if (m.e[i] > 1)
				vars += "^" + std::to_string(m.e[i]);
		}
		if (vars.empty())
			out += rat_str(a);
		else if (a == 1)
			out += vars;
		else
			out += rat_str(a) + "*" + vars;
	}
	return out;
}

} // namespace msg
