#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msg/parse.hpp"
#include "test_util.hpp"

using namespace msg;

static ChartPtr xy() { return make_chart({"x", "y"}); }

TEST_CASE("poly add")
{
	auto c = xy();
	Poly x = Poly::var(c, 0);
	Poly one = Poly::constant(c, 1);
	CHECK((x + one) + (-x) == one);
	Poly p = parse_poly("x^2*y - 3", c);
	CHECK(Poly(c) + p == p);
	Poly x2y = parse_poly("x^2*y", c);
	CHECK(x2y + x2y == parse_poly("2*x^2*y", c));
}

TEST_CASE("poly mul")
{
	auto c = xy();
	CHECK(parse_poly("(x+y)*(x-y)", c) == parse_poly("x^2-y^2", c));
	Poly p = parse_poly("x^2*y - 3", c);
	CHECK(Poly::constant(c, 1) * p == p);
	CHECK(parse_poly("(1/2*x)*(1/3*y)", c) == parse_poly("1/6*x*y", c));
}

TEST_CASE("poly partial")
{
	auto c = xy();
	CHECK(parse_poly("x^2*y", c).partial(0) == parse_poly("2*x*y", c));
	CHECK(parse_poly("7", c).partial(0).is_zero());
	CHECK(parse_poly("x^2*y", c).partial(1) == parse_poly("x^2", c));
	CHECK_THROWS(parse_poly("x", c).partial(5));
}

TEST_CASE("poly eval")
{
	auto c = xy();
	CHECK(parse_poly("x^2+y", c).eval({rat(2), rat(3)}) == rat(7));
	CHECK(Poly(c).eval({rat(5), rat(1)}) == 0);
	auto c1 = make_chart({"x"});
	CHECK(parse_poly("1/2*x", c1).eval({rat(1, 3)}) == rat(1, 6));
	CHECK_THROWS(parse_poly("x", c).eval({rat(1)}));
}

TEST_CASE("poly ray integral")
{
	auto c = xy();
	CHECK(parse_poly("1", c).ray_integral(0) == parse_poly("1", c));
	CHECK(parse_poly("x", c).ray_integral(0) == parse_poly("1/2*x", c));
	CHECK(parse_poly("x^2*y", c).ray_integral(1) == parse_poly("1/5*x^2*y", c));
	// termwise oracle: int_0^1 t^a t^d dt = 1/(a+d+1), per monomial
	msgtest::Rng rng(7);
	for (int it = 0; it < 50; ++it)
	{
		Poly p = msgtest::random_poly(c, rng, 4);
		int a = rng.below(3);
		Poly q = p.ray_integral(a);
		Poly expect(c);
		for (auto const &[m, k] : p.terms())
			expect.add_term(m, k / Rat(a + m.total() + 1));
		CHECK(q == expect);
	}
}

TEST_CASE("poly ring axioms")
{
	auto c = make_chart({"x", "y", "z"});
	msgtest::Rng rng(11);
	for (int it = 0; it < 60; ++it)
	{
		Poly a = msgtest::random_poly(c, rng, 3);
		Poly b = msgtest::random_poly(c, rng, 3);
		Poly d = msgtest::random_poly(c, rng, 3);
		CHECK(a + b == b + a);
		CHECK((a + b) + d == a + (b + d));
		CHECK(a * b == b * a);
		CHECK((a * b) * d == a * (b * d));
		CHECK(a * (b + d) == a * b + a * d);
		CHECK(a.partial(0).partial(1) == a.partial(1).partial(0));
	}
}

TEST_CASE("parser values")
{
	auto c = make_chart({"x1", "y3", "t"});
	Poly p = parse_poly("x1^2*y3 - 1/2*t", c);
	CHECK(p.terms().size() == 2);

	auto c6 = make_chart({"q1", "q2", "q3", "p1", "p2", "p3"});
	Form f = parse_form("q3 * dp1^dp2^dp3", c6);
	CHECK(f.degree() == 3);
	CHECK(f.coeff(IndexSet{{3, 4, 5}}) == Poly::var(c6, 2));

	auto c2 = xy();
	MVF v = parse_mvf("d/dx ^ d/dy", c2);
	CHECK(v.degree() == 2);
	CHECK(v.coeff(IndexSet{{0, 1}}) == Poly::constant(c2, 1));
}

TEST_CASE("parser wedge normalization")
{
	auto c = make_chart({"x", "y", "z"});
	CHECK(parse_form("dy^dx", c) == -parse_form("dx^dy", c));
	CHECK(parse_form("dx^dx", c).is_zero());
	CHECK(parse_form("(x*dy)*(y*dx)", c) ==
	      parse_form("-x*y*dx^dy", c) * Rat(1));
	CHECK_THROWS_AS((void)parse_expr("dx ^ d/dy", c), ParseError);
	CHECK_THROWS_AS((void)parse_expr("x +", c), ParseError);
	CHECK_THROWS_AS((void)parse_expr("du", c), ParseError);
}

TEST_CASE("print parse round trip")
{
	auto c = make_chart({"x", "y", "z"});
	msgtest::Rng rng(23);
	for (int it = 0; it < 40; ++it)
	{
		Poly p = msgtest::random_poly(c, rng, 3);
		CHECK(parse_poly(p.str(), c) == p);
		Form f = msgtest::random_form(c, rng, rng.below(3), 2);
		Form g = parse_form(f.str(), c);
		if (f.is_zero())
			CHECK(g.is_zero());
		else
			CHECK(g == f);
		CHECK(g.str() == f.str());
	}
}
