#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msg/parse.hpp"
#include "msg/phase.hpp"
#include "test_util.hpp"

using namespace msg;

static ChartPtr base3() { return make_chart({"q1", "q2", "q3"}); }

TEST_CASE("phase space construction")
{
	auto ps1 = build_phase_space(base3(), 1);
	CHECK(ps1.total->names ==
	      std::vector<std::string>{"q1", "q2", "q3", "p1", "p2", "p3"});
	CHECK(ps1.theta ==
	      parse_form("p1*dq1 + p2*dq2 + p3*dq3", ps1.total));
	CHECK(ps1.omega ==
	      parse_form("dq1^dp1 + dq2^dp2 + dq3^dp3", ps1.total));
	auto rep = check_nplectic(ps1.omega);
	CHECK(rep.closed);
	CHECK(rep.nondeg == NplecticReport::Nondeg::Yes);

	auto ps2 = build_phase_space(base3(), 2);
	CHECK(ps2.total->names ==
	      std::vector<std::string>{"q1", "q2", "q3", "p12", "p13", "p23"});
	CHECK(ps2.theta == parse_form("p12*dq1^dq2 + p13*dq1^dq3 + p23*dq2^dq3",
	                              ps2.total));
	auto rep2 = check_nplectic(ps2.omega);
	CHECK(rep2.closed);
	CHECK(rep2.nondeg == NplecticReport::Nondeg::Yes);
	CHECK(ps2.fiber_index(IndexSet{{0, 2}}) == 4);

	auto ps22 = build_phase_space(make_chart({"q1", "q2"}), 2);
	CHECK(ps22.total->dim() == 3);
	CHECK_THROWS(build_phase_space(base3(), 0));
	CHECK_THROWS(build_phase_space(base3(), 4));
}

TEST_CASE("complete lift")
{
	auto b = base3();
	auto ps = build_phase_space(b, 1);
	CHECK(complete_lift(parse_mvf("d/dq1", b), ps) ==
	      parse_mvf("d/dq1", ps.total));
	CHECK(complete_lift(parse_mvf("q1*d/dq2", b), ps) ==
	      parse_mvf("q1*d/dq2 - p2*d/dp1", ps.total));

	auto ps2 = build_phase_space(b, 2);
	msgtest::Rng rng(211);
	for (int it = 0; it < 20; ++it)
	{
		MVF y = msgtest::random_mvf(b, rng, 1, 2);
		MVF lift = complete_lift(y, ps2);
		CHECK(pushforward(lift, ps2) == y);
		CHECK(lie_derivative(lift, ps2.theta).is_zero());
		CHECK(lie_derivative(lift, ps2.omega).is_zero());
	}
}

TEST_CASE("momentum forms")
{
	auto b = base3();
	auto ps = build_phase_space(b, 1);
	DecomposableMVF y1{{parse_mvf("d/dq1", b)}, 1};
	// the paper's normalization negates the classical momentum function
	CHECK(momentum_form(y1, ps) == parse_form("-p1", ps.total));

	auto ps2 = build_phase_space(b, 2);
	CHECK(momentum_form(y1, ps2) ==
	      parse_form("-p12*dq2 - p13*dq3", ps2.total));
	DecomposableMVF y12{{parse_mvf("d/dq1", b), parse_mvf("d/dq2", b)}, 1};
	CHECK(momentum_form_general(parse_mvf("d/dq1^d/dq2", b), ps2) ==
	      momentum_form(y12, ps2));

	// for kernel elements the momentum form is Hamiltonian with field
	// zeta(l) times the lift
	msgtest::Rng rng(223);
	for (int it = 0; it < 10; ++it)
	{
		DecomposableMVF y{{msgtest::random_mvf(b, rng, 1, 2)}, 1};
		Form p = momentum_form(y, ps2);
		CHECK((ext_d(p) +
		       contract(complete_lift_multi(y, ps2), ps2.omega) * Rat(zeta(1)))
		          .is_zero());
	}
	DecomposableMVF cc{{parse_mvf("d/dq2", b), parse_mvf("d/dq3", b)}, 1};
	Form p2 = momentum_form(cc, ps2);
	CHECK((ext_d(p2) +
	       contract(complete_lift_multi(cc, ps2), ps2.omega) * Rat(zeta(2)))
	          .is_zero());
}

TEST_CASE("position forms and fields")
{
	auto b = base3();
	auto ps = build_phase_space(b, 2);
	Form a = parse_form("q1*dq2", b);
	Form at = position_form(a, ps);
	CHECK(at == parse_form("q1*dq2", ps.total));
	MVF x = position_field(a, ps);
	CHECK((ext_d(at) + contract(x, ps.omega)).is_zero());
	CHECK(pushforward(x, ps).is_zero());

	msgtest::Rng rng(227);
	for (int it = 0; it < 10; ++it)
	{
		Form r = msgtest::random_form(b, rng, 1, 2);
		MVF xr = position_field(r, ps);
		CHECK(pushforward(xr, ps).is_zero());
	}
	CHECK_THROWS(position_field(parse_form("dq1^dq2", b), ps));
}

TEST_CASE("momentum bracket relations")
{
	auto b = base3();
	auto ps = build_phase_space(b, 2);
	msgtest::Rng rng(229);
	for (int it = 0; it < 12; ++it)
	{
		DecomposableMVF y1{{msgtest::random_mvf(b, rng, 1, 2)}, 1};
		DecomposableMVF y2{{msgtest::random_mvf(b, rng, 1, 2)}, 1};
		Form alpha = msgtest::random_form(b, rng, 1, 2);
		Form beta = msgtest::random_form(b, rng, 1, 2);
		auto res = momentum_bracket_residuals(y1, y2, alpha, beta, ps);
		CHECK(res.momentum_momentum.is_zero());
		CHECK(res.position_position.is_zero());
		CHECK(res.position_momentum.is_zero());
	}

	// a degree-2 kernel element built from constant commuting factors
	for (int it = 0; it < 6; ++it)
	{
		DecomposableMVF y1{{msgtest::random_mvf(b, rng, 1, 0, 1),
		                    msgtest::random_mvf(b, rng, 1, 0, 1)},
		                   1};
		DecomposableMVF y2{{msgtest::random_mvf(b, rng, 1, 2)}, 1};
		Form alpha = msgtest::random_form(b, rng, 1, 2);
		auto res = momentum_bracket_residuals(y2, y1, alpha, alpha, ps);
		CHECK(res.momentum_momentum.is_zero());
		CHECK(res.position_momentum.is_zero());
	}

	DecomposableMVF noncomm{
	    {parse_mvf("q2*d/dq1", b), parse_mvf("q1*d/dq2", b)}, 1};
	DecomposableMVF ok{{parse_mvf("d/dq3", b)}, 1};
	CHECK_THROWS(momentum_bracket_residuals(noncomm, ok,
	                                        parse_form("dq1", b),
	                                        parse_form("dq1", b), ps));
}
