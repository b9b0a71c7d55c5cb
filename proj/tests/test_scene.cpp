#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "msg/builtins.hpp"
#include "msg/fuzz.hpp"
#include "msg/parse.hpp"

using namespace msg;

TEST_CASE("minimal scene loads")
{
	Scene sc = parse_scene(R"({
		"chart": ["x", "y", "z"],
		"forms": {"omega": "dx^dy^dz"},
		"system": {"omega": "omega"}
	})");
	REQUIRE(sc.system.has_value());
	CHECK(sc.system->n == 2);
	CHECK(sc.chart->dim() == 3);
	CHECK(run_check(sc).ok());
}

TEST_CASE("shipped translation scene equals the built-in")
{
	Scene file = load_scene(MSG_SCENE_DIR "/r6-translation.json");
	Scene builtin = builtin_scene("r6-translation");
	CHECK(scene_equal(file, builtin));
	CHECK(run_check(file).ok());
}

TEST_CASE("scene rejections")
{
	// bracket table violating the Jacobi identity
	CHECK_THROWS(parse_scene(R"({
		"chart": ["x"],
		"lie_algebra": {
			"names": ["e1", "e2", "e3"],
			"table": [
				[[0,0,0], [0,0,1], [-1,0,0]],
				[[0,0,-1], [0,0,0], [1,0,0]],
				[[1,0,0], [-1,0,0], [0,0,0]]
			]
		}
	})"));
	// unresolved names
	CHECK_THROWS(parse_scene(R"({"chart": ["x"], "system": {"omega": "w"}})"));
	CHECK_THROWS(parse_scene(R"({
		"chart": ["x"],
		"lie_algebra": {"names": ["e1"], "table": [[[0]]]},
		"action": {"e1": "V"}
	})"));
	// malformed expression surfaces the parser error
	CHECK_THROWS(parse_scene(R"({"chart": ["x"], "forms": {"a": "dx^"}})"));
	// malformed json
	CHECK_THROWS(parse_scene("{"));
	// moment map without a system
	CHECK_THROWS(parse_scene(R"({
		"chart": ["x"],
		"moment_map": {"kind": "weak", "components": []}
	})"));
}

TEST_CASE("gmulti expressions")
{
	auto g = abelian_alg(3);
	CHECK(parse_gmulti("e2^e1", g) == -wedge_g(GMulti::basis(g, IndexSet{{0}}),
	                                           GMulti::basis(g, IndexSet{{1}})));
	GMulti p = parse_gmulti("1/2*e1 + e2 - e1", g);
	CHECK(p.coord(IndexSet{{0}}) == Rat(-1, 2));
	CHECK(p.coord(IndexSet{{1}}) == Rat(1));
	CHECK(parse_gmulti("e1^e1", g).is_zero());
	CHECK_THROWS(parse_gmulti("e1 + e1^e2", g));
	CHECK_THROWS(parse_gmulti("e9", g));
	CHECK_THROWS(parse_gmulti("", g));
}

TEST_CASE("built-in examples all pass")
{
	for (auto const &name : builtin_names())
	{
		auto rep = run_builtin(name);
		CHECK(rep.ok());
		CHECK(rep.failed() == 0);
		CHECK(rep.passed() > 0);
	}
	CHECK_THROWS(run_builtin("no-such-example"));
}

TEST_CASE("translation sign expectations are checked")
{
	Scene sc = builtin_scene("r6-translation");
	auto rep = run_check(sc);
	CHECK(rep.ok());
	// breaking a declared sign turns the component check into a failure
	Scene bad = sc;
	bad.moment->components[1][0].sign = 1;
	CHECK(!run_check(bad).ok());
}

TEST_CASE("scene commands")
{
	Scene r3 = builtin_scene("r3-noether");
	auto cl = run_classify(r3, "alpha", true);
	CHECK(cl.ok());
	bool saw_global = false;
	for (auto const &c : cl.checks)
		saw_global = saw_global || (c.id == "level" && c.detail == "global");
	CHECK(saw_global);

	auto br = run_bracket_poisson(r3, "alpha", "H");
	CHECK(br.ok());

	Scene tr = builtin_scene("r6-translation");
	auto sb = run_bracket_schouten(tr, "V1", "V2");
	CHECK(sb.ok());
	CHECK(run_moment(tr).ok());
	CHECK(run_moment(tr, MomentKind::Weak).ok());
	CHECK_THROWS(run_classify(r3, "nope", true));
	CHECK_THROWS(run_moment(r3));
}

TEST_CASE("fuzz runner is deterministic and validates input")
{
	for (auto const &s : fuzz_suites())
	{
		auto a = run_fuzz(s, 10, 42);
		auto b = run_fuzz(s, 10, 42);
		CHECK(a.ok());
		CHECK(a.passed() == 10);
		CHECK(a.json() == b.json());
		CHECK(a.text() == b.text());
	}
	CHECK_THROWS(run_fuzz("cartan", 0, 1));
	CHECK_THROWS(run_fuzz("unknown", 5, 1));
	CHECK_THROWS(run_fuzz("cartan", 5, 1, 99));
}

TEST_CASE("report formatting")
{
	Report rep;
	rep.command = "demo";
	rep.pass("a", "0", 1, "x");
	rep.fail("b", "2*dx");
	rep.info("c", "note");
	CHECK(rep.passed() == 1);
	CHECK(rep.failed() == 1);
	CHECK(!rep.ok());
	std::string t = rep.text();
	CHECK(t.find("pass  a  0  sign=+1  witness=x") != std::string::npos);
	CHECK(t.find("fail  b  2*dx") != std::string::npos);
	CHECK(t.find("summary: 1 passed, 1 failed, 1 info") != std::string::npos);
	std::string j = rep.json();
	CHECK(j.find("\"command\": \"demo\"") != std::string::npos);
	CHECK(j.find("\"residual\": \"2*dx\"") != std::string::npos);
}
