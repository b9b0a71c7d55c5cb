#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msg/parse.hpp"
#include "msg/plectic.hpp"
#include "test_util.hpp"

using namespace msg;

static ChartPtr r3() { return make_chart({"x", "y", "z"}); }

// on a volume form every closed form is a contraction, so solving never fails
static HamPair random_pair(ChartPtr const &c, msgtest::Rng &rng,
                           Form const &omega, int formdeg)
{
	for (;;)
	{
		Form a = msgtest::random_form(c, rng, formdeg, 2);
		auto res = hamiltonian_solve(a, omega);
		REQUIRE(res.pair.has_value());
		if (!res.pair->field.is_zero())
			return *res.pair;
	}
}

TEST_CASE("zeta signs")
{
	CHECK(zeta(1) == 1);
	CHECK(zeta(2) == 1);
	CHECK(zeta(3) == -1);
	CHECK(zeta(4) == -1);
	CHECK_THROWS(zeta(0));
	for (int k = 1; k <= 8; ++k)
	{
		CHECK(zeta(k) * zeta(k + 1) == sign_pow(k + 1));
		for (int l = 1; l <= 8; ++l)
		{
			CHECK(zeta(k) * zeta(l) * zeta(k + l - 1) ==
			      -sign_pow(k + l + k * l));
			CHECK(zeta(k) * zeta(l) == -sign_pow(l * k) * zeta(k + l));
		}
	}
}

TEST_CASE("nplectic checks")
{
	auto c = r3();
	auto rep = check_nplectic(parse_form("dx^dy^dz", c));
	CHECK(rep.closed);
	CHECK(rep.nondeg == NplecticReport::Nondeg::Yes);
	CHECK(check_nplectic(parse_form("dx^dy", c)).nondeg ==
	      NplecticReport::Nondeg::No);
	auto c2 = make_chart({"x", "y"});
	CHECK(check_nplectic(parse_form("(1 + x^2)*dx^dy", c2)).nondeg ==
	      NplecticReport::Nondeg::GenericAtSample);
}

TEST_CASE("omega kernels")
{
	auto c = r3();
	CHECK(omega_kernel_basis(parse_form("dx^dy^dz", c), 1).empty());
	CHECK(omega_kernel_basis(parse_form("dx^dy^dz", c), 3).empty());
	auto c4 = make_chart({"x", "y", "z", "w"});
	auto ker = omega_kernel_basis(parse_form("dx^dy^dz", c4), 1);
	REQUIRE(ker.size() == 1);
	CHECK(ker[0] == parse_mvf("d/dw", c4));
	CHECK_THROWS(omega_kernel_basis(parse_form("x*dx^dy", c4), 1));
}

TEST_CASE("hamiltonian verify and solve")
{
	auto c = r3();
	Form vol = parse_form("dx^dy^dz", c);
	auto rep =
	    hamiltonian_verify(parse_form("z*dx", c), parse_mvf("d/dy", c), vol);
	CHECK(rep.matched_sign == -1);
	auto [pair, s] = make_ham_pair(parse_form("z*dx", c), parse_mvf("d/dy", c),
	                               vol);
	CHECK(s == -1);
	CHECK(pair.field == parse_mvf("-d/dy", c));
	CHECK(hamiltonian_verify(pair.form, pair.field, vol).matched_sign == 1);

	auto res = hamiltonian_solve(parse_form("-x*dy", c), vol);
	REQUIRE(res.pair.has_value());
	CHECK(res.pair->field == parse_mvf("d/dz", c));
	CHECK(res.kernel.empty());
	CHECK(hamiltonian_solve(parse_form("x*dx", c), vol).pair->field.is_zero());

	// no solution when d(alpha) escapes the pairing image
	auto c4 = make_chart({"x", "y", "z", "w"});
	auto bad = hamiltonian_solve(parse_form("z*dw", c4),
	                             parse_form("dx^dy^dz", c4));
	CHECK(!bad.pair.has_value());

	msgtest::Rng rng(73);
	Form vol4 = parse_form("dx^dy^dz^dw", c4);
	for (int it = 0; it < 30; ++it)
	{
		int k = 1 + rng.below(3);
		Form a = msgtest::random_form(c4, rng, 3 - k, 2);
		auto sol = hamiltonian_solve(a, vol4);
		REQUIRE(sol.pair.has_value());
		CHECK((ext_d(a) + contract(sol.pair->field, vol4)).is_zero());
	}
}

TEST_CASE("poisson bracket")
{
	auto c = r3();
	Form vol = parse_form("dx^dy^dz", c);
	HamPair alpha = make_ham_pair(parse_form("z*dx", c), parse_mvf("d/dy", c),
	                              vol)
	                    .first;
	HamPair H =
	    make_ham_pair(parse_form("-x*dy", c), parse_mvf("d/dz", c), vol).first;
	CHECK(poisson(alpha, H, vol) == parse_form("-dx", c));
	CHECK(poisson(H, alpha, vol) == parse_form("dx", c));
	// closed form in either slot gives zero
	HamPair closed{parse_form("dx", c), MVF(c, 1)};
	CHECK(poisson(closed, H, vol).is_zero());
	CHECK(poisson(H, closed, vol).is_zero());

	auto c4 = make_chart({"x", "y", "z", "w"});
	Form vol4 = parse_form("dx^dy^dz^dw", c4);
	msgtest::Rng rng(79);
	for (int it = 0; it < 30; ++it)
	{
		int k = 1 + rng.below(3), l = 1 + rng.below(3);
		HamPair a = random_pair(c4, rng, vol4, 3 - k);
		HamPair b = random_pair(c4, rng, vol4, 3 - l);
		int A = k + 1, B = l + 1;
		CHECK(poisson(a, b, vol4) ==
		      poisson(b, a, vol4) * Rat(-sign_pow(A * B)));
		// the Schouten bracket of the fields is Hamiltonian for the bracket
		CHECK((ext_d(poisson(a, b, vol4)) +
		       contract(schouten(a.field, b.field), vol4))
		          .is_zero());
	}
}

TEST_CASE("graded jacobi residual")
{
	auto c4 = make_chart({"x", "y", "z", "w"});
	Form vol4 = parse_form("dx^dy^dz^dw", c4);
	msgtest::Rng rng(83);
	for (int it = 0; it < 25; ++it)
	{
		int k = 1 + rng.below(3), l = 1 + rng.below(3), m = 1 + rng.below(3);
		HamPair a = random_pair(c4, rng, vol4, 3 - k);
		HamPair b = random_pair(c4, rng, vol4, 3 - l);
		HamPair cc = random_pair(c4, rng, vol4, 3 - m);
		CHECK(jacobi_residual(a, b, cc, vol4).is_zero());
	}
}

TEST_CASE("lie n bracket and rogers lemma")
{
	auto c4 = make_chart({"x", "y", "z", "w"});
	Form vol4 = parse_form("dx^dy^dz^dw", c4);
	msgtest::Rng rng(89);
	for (int it = 0; it < 25; ++it)
	{
		HamPair a = random_pair(c4, rng, vol4, 2);
		HamPair b = random_pair(c4, rng, vol4, 2);
		HamPair cc = random_pair(c4, rng, vol4, 2);
		CHECK(lie_n_bracket({a, b}, vol4) == poisson(a, b, vol4));
		CHECK(rogers_residual({a, b}, vol4).is_zero());
		CHECK(rogers_residual({a, b, cc}, vol4).is_zero());
	}
	CHECK_THROWS(lie_n_bracket({}, vol4));
}
