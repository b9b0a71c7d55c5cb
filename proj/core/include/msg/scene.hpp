#pragma once

#include "msg/noether.hpp"
#include "msg/report.hpp"

namespace msg
{

// named workspace a command operates on; loaded from a file or built in
struct Scene
{
	ChartPtr chart;
	std::map<std::string, Form> forms;
	std::map<std::string, MVF> mvfs;
	LieAlgPtr alg; // null when absent
	std::optional<ActionModel> action;
	std::optional<PlecticSystem> system;
	int declared_ham_sign = 0; // 0 when the scene does not pin the sign
	std::optional<MomentMapData> moment;

	struct PhaseReq
	{
		std::vector<std::string> base;
		int k = 0;
	};
	std::optional<PhaseReq> phase;

	Form const &form(std::string const &name) const;
	MVF const &mvf(std::string const &name) const;
};

// element of Lambda^k g written over the algebra's basis names, e.g.
// "e1^e2 - 1/2*e2^e3"
GMulti parse_gmulti(std::string const &src, LieAlgPtr const &alg);

Scene parse_scene(std::string const &json_text);
Scene load_scene(std::string const &path);

bool scene_equal(Scene const &a, Scene const &b);

Report run_check(Scene const &sc);
Report run_classify(Scene const &sc, std::string const &name, bool is_form);
Report run_bracket_poisson(Scene const &sc, std::string const &a,
                           std::string const &b);
Report run_bracket_schouten(Scene const &sc, std::string const &x,
                            std::string const &y);
Report run_moment(Scene const &sc, std::optional<MomentKind> kind = {});

} // namespace msg
