#include "msg/builtins.hpp"
#include "msg/fuzz.hpp"
#include "msg/parse.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

using namespace msg;

static int emit(Report const &rep, bool as_json)
{
	fmt::print("{}", as_json ? rep.json() : rep.text());
	return rep.ok() ? 0 : 1;
}

int main(int argc, char **argv)
{
	CLI::App app{"exact multisymplectic calculus workbench"};
	app.require_subcommand(1);
	bool as_json = false;
	app.add_flag("--json", as_json, "emit the report as JSON");

	std::string scene_path, form_name, mvf_name, example_name, suite;
	std::vector<std::string> poisson_args, schouten_args;
	bool weak = false, full = false;
	int count = 100, maxdim = 4, maxdeg = 2;
	uint64_t seed = 1;

	auto *check = app.add_subcommand("check", "run every check a scene declares");
	check->add_option("scene", scene_path, "scene file")->required();

	auto *classify =
	    app.add_subcommand("classify", "conservation/symmetry level of an entity");
	classify->add_option("scene", scene_path, "scene file")->required();
	auto *copt = classify->add_option("--form", form_name, "named form");
	auto *mopt = classify->add_option("--mvf", mvf_name, "named field");
	copt->excludes(mopt);

	auto *bracket = app.add_subcommand("bracket", "poisson or schouten bracket");
	bracket->add_option("scene", scene_path, "scene file")->required();
	auto *popt = bracket->add_option("--poisson", poisson_args, "two form names")
	                 ->expected(2);
	auto *sopt = bracket->add_option("--schouten", schouten_args,
	                                 "two field names")
	                 ->expected(2);
	popt->excludes(sopt);

	auto *moment = app.add_subcommand("moment", "verify the scene's moment map");
	moment->add_option("scene", scene_path, "scene file")->required();
	moment->add_flag("--weak", weak, "force weak verification");
	moment->add_flag("--full", full, "force full verification");

	auto *example = app.add_subcommand("example", "run a built-in example");
	example->add_option("name", example_name, "example name")->required();

	auto *fuzz = app.add_subcommand("fuzz", "randomized identity residuals");
	fuzz->add_option("--suite", suite, "identity suite")->required();
	fuzz->add_option("--count", count, "number of instances");
	fuzz->add_option("--seed", seed, "rng seed");
	fuzz->add_option("--max-dim", maxdim, "largest chart dimension");
	fuzz->add_option("--max-deg", maxdeg, "largest coefficient degree");

	for (auto *sub : {check, classify, bracket, moment, example, fuzz})
		sub->fallthrough();

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		return app.exit(e) == 0 ? 0 : 2;
	}

	try
	{
		if (check->parsed())
			return emit(run_check(load_scene(scene_path)), as_json);
		if (classify->parsed())
		{
			if (form_name.empty() == mvf_name.empty())
				throw std::invalid_argument(
				    "classify: give exactly one of --form/--mvf");
			Scene sc = load_scene(scene_path);
			bool is_form = !form_name.empty();
			return emit(run_classify(sc, is_form ? form_name : mvf_name,
			                         is_form),
			            as_json);
		}
		if (bracket->parsed())
		{
			Scene sc = load_scene(scene_path);
			if (!poisson_args.empty())
				return emit(run_bracket_poisson(sc, poisson_args[0],
				                                poisson_args[1]),
				            as_json);
			if (!schouten_args.empty())
				return emit(run_bracket_schouten(sc, schouten_args[0],
				                                 schouten_args[1]),
				            as_json);
			throw std::invalid_argument(
			    "bracket: give one of --poisson/--schouten");
		}
		if (moment->parsed())
		{
			if (weak && full)
				throw std::invalid_argument(
				    "moment: --weak and --full are exclusive");
			std::optional<MomentKind> kind;
			if (weak)
				kind = MomentKind::Weak;
			if (full)
				kind = MomentKind::Full;
			return emit(run_moment(load_scene(scene_path), kind), as_json);
		}
		if (example->parsed())
			return emit(run_builtin(example_name), as_json);
		return emit(run_fuzz(suite, count, seed, maxdim, maxdeg), as_json);
	}
	catch (std::exception const &e)
	{
		fmt::print(stderr, "error: {}\n", e.what());
		return 2;
	}
}
