#include "msg/builtins.hpp"

#include "msg/fuzz.hpp"
#include "msg/g2.hpp"
#include "msg/parse.hpp"
#include "msg/phase.hpp"

namespace msg
{

using Level = ClassificationReport::Level;

std::vector<std::string> builtin_names()
{
	return {"r3-noether", "r6-translation", "c3-volume",
	        "c3-kahler",  "phase-demo",     "g2-torus"};
}

static void append(Report &dst, Report const &src)
{
	dst.checks.insert(dst.checks.end(), src.checks.begin(), src.checks.end());
}

static Scene r3_noether_scene()
{
	Scene sc;
	sc.chart = make_chart({"x", "y", "z"});
	sc.forms.emplace("omega", parse_form("dx^dy^dz", sc.chart));
	sc.forms.emplace("H", parse_form("-x*dy", sc.chart));
	sc.forms.emplace("alpha", parse_form("z*dx", sc.chart));
	sc.mvfs.emplace("XH", parse_mvf("d/dz", sc.chart));
	sc.mvfs.emplace("Xalpha", parse_mvf("d/dy", sc.chart));
	PlecticSystem sys = make_system(sc.form("omega"));
	set_hamiltonian(sys, sc.form("H"), sc.mvf("XH"));
	sc.system = std::move(sys);
	sc.declared_ham_sign = 1;
	return sc;
}

static Scene r6_translation_scene()
{
	Scene sc;
	sc.chart = make_chart({"q1", "q2", "q3", "p1", "p2", "p3"});
	auto F = [&](char const *n, char const *e) {
		sc.forms.emplace(n, parse_form(e, sc.chart));
	};
	F("omega", "dq1^dq2^dq3^dp1^dp2^dp3");
	F("H", "(1/2)*((p1*q2*dq3 - p1*q3*dq2)"
	       " - (p2*q1*dq3 - p2*q3*dq1)"
	       " + (p3*q1*dq2 - p3*q2*dq1))*dp1^dp2^dp3");
	F("f1e1", "(1/2)*(q2*dq3 - q3*dq2)*dp1^dp2^dp3");
	F("f1e2", "(1/2)*(q1*dq3 - q3*dq1)*dp1^dp2^dp3");
	F("f1e3", "(1/2)*(q1*dq2 - q2*dq1)*dp1^dp2^dp3");
	F("f2e12", "q3*dp1^dp2^dp3");
	F("f2e13", "q2*dp1^dp2^dp3");
	F("f2e23", "q1*dp1^dp2^dp3");
	F("f3e123", "(1/3)*(p1*dp2^dp3 + p2*dp3^dp1 + p3*dp1^dp2)");
	sc.mvfs.emplace("S", parse_mvf("p1*d/dq1 + p2*d/dq2 + p3*d/dq3", sc.chart));
	sc.mvfs.emplace("V1", parse_mvf("d/dq1", sc.chart));
	sc.mvfs.emplace("V2", parse_mvf("d/dq2", sc.chart));
	sc.mvfs.emplace("V3", parse_mvf("d/dq3", sc.chart));
	sc.alg = abelian_alg(3);
	sc.action = make_action(sc.alg, sc.chart,
	                        {sc.mvf("V1"), sc.mvf("V2"), sc.mvf("V3")});
	PlecticSystem sys = make_system(sc.form("omega"));
	set_hamiltonian(sys, sc.form("H"), sc.mvf("S"));
	sc.system = std::move(sys);
	sc.declared_ham_sign = -1;
	MomentMapData m{*sc.system, *sc.action, MomentKind::Full, {}};
	auto P = [&](char const *p, char const *f, int s) {
		GMulti g = parse_gmulti(p, sc.alg);
		m.components[g.deg].push_back({g, sc.form(f), s});
	};
	P("e1", "f1e1", -1);
	P("e2", "f1e2", 1);
	P("e3", "f1e3", -1);
	P("e1^e2", "f2e12", -1);
	P("e1^e3", "f2e13", 1);
	P("e2^e3", "f2e23", -1);
	P("e1^e2^e3", "f3e123", 1);
	sc.moment = std::move(m);
	return sc;
}

static Scene c3_base_scene()
{
	Scene sc;
	sc.chart = make_chart({"x1", "x2", "x3", "y1", "y2", "y3"});
	sc.mvfs.emplace(
	    "A",
	    parse_mvf("(1/2)*(-y1*d/dx1 + x1*d/dy1 + y3*d/dx3 - x3*d/dy3)",
	              sc.chart));
	sc.mvfs.emplace(
	    "B",
	    parse_mvf("(1/2)*(-y2*d/dx2 + x2*d/dy2 + y3*d/dx3 - x3*d/dy3)",
	              sc.chart));
	sc.alg = abelian_alg(2);
	sc.action = make_action(sc.alg, sc.chart, {sc.mvf("A"), sc.mvf("B")});
	return sc;
}

static Scene c3_volume_scene()
{
	Scene sc = c3_base_scene();
	auto F = [&](char const *n, char const *e) {
		sc.forms.emplace(n, parse_form(e, sc.chart));
	};
	F("alpha", "dx1^dx2^dx3 - dx1^dy2^dy3 - dy1^dx2^dy3 - dy1^dy2^dx3");
	F("f1e1", "(1/2)*((x1*x3 - y1*y3)*dy2 + (x1*y3 + x3*y1)*dx2)");
	F("f1e2", "(-1/2)*((x2*x3 - y2*y3)*dy1 + (x2*y3 + x3*y2)*dx1)");
	F("f2", "(1/4)*(x1*x2*x3 - x1*y2*y3 - y1*x2*y3 - y1*y2*x3)");
	sc.system = make_system(sc.form("alpha"));
	MomentMapData m{*sc.system, *sc.action, MomentKind::Weak, {}};
	m.components[1] = {{parse_gmulti("e1", sc.alg), sc.form("f1e1"), -1},
	                   {parse_gmulti("e2", sc.alg), sc.form("f1e2"), -1}};
	m.components[2] = {{parse_gmulti("e1^e2", sc.alg), sc.form("f2"), 1}};
	sc.moment = std::move(m);
	return sc;
}

static Scene c3_kahler_scene()
{
	Scene sc = c3_base_scene();
	auto F = [&](char const *n, char const *e) {
		sc.forms.emplace(n, parse_form(e, sc.chart));
	};
	F("omega", "dx1^dy1 + dx2^dy2 + dx3^dy3");
	F("f1e1", "(-1/4)*(x1^2 + y1^2 - x3^2 - y3^2)");
	F("f1e2", "(-1/4)*(x2^2 + y2^2 - x3^2 - y3^2)");
	sc.system = make_system(sc.form("omega"));
	MomentMapData m{*sc.system, *sc.action, MomentKind::Weak, {}};
	m.components[1] = {{parse_gmulti("e1", sc.alg), sc.form("f1e1"), -1},
	                   {parse_gmulti("e2", sc.alg), sc.form("f1e2"), -1}};
	sc.moment = std::move(m);
	return sc;
}

static Scene phase_demo_scene()
{
	Scene sc;
	sc.chart = make_chart({"q1", "q2", "q3"});
	sc.phase = Scene::PhaseReq{{"q1", "q2", "q3"}, 2};
	return sc;
}

static Scene g2_torus_scene()
{
	Scene sc;
	sc.chart = make_chart({"t", "x1", "x2", "x3", "y1", "y2", "y3"});
	auto F = [&](char const *n, char const *e) {
		sc.forms.emplace(n, parse_form(e, sc.chart));
	};
	F("phi", "dx1^dx2^dx3 - dx1^dy2^dy3 - dy1^dx2^dy3 - dy1^dy2^dx3"
	         " - dt^dx1^dy1 - dt^dx2^dy2 - dt^dx3^dy3");
	F("f1A", "(1/2)*((x1*x3 - y1*y3)*dy2 + (x1*y3 + x3*y1)*dx2)"
	         " + ((1/4)*x1^2 + (1/4)*y1^2 - (1/4)*x3^2 - (1/4)*y3^2)*dt");
	F("f1B", "(-1/2)*((x2*x3 - y2*y3)*dy1 + (x2*y3 + x3*y2)*dx1)"
	         " + ((1/4)*x2^2 + (1/4)*y2^2 - (1/4)*x3^2 - (1/4)*y3^2)*dt");
	F("f2", "(1/4)*(x1*x2*x3 - x1*y2*y3 - y1*x2*y3 - y1*y2*x3)");
	F("re3", "x1*x2*x3 - x1*y2*y3 - y1*x2*y3 - y1*y2*x3");
	sc.mvfs.emplace(
	    "A",
	    parse_mvf("(1/2)*(-y1*d/dx1 + x1*d/dy1 + y3*d/dx3 - x3*d/dy3)",
	              sc.chart));
	sc.mvfs.emplace(
	    "B",
	    parse_mvf("(1/2)*(-y2*d/dx2 + x2*d/dy2 + y3*d/dx3 - x3*d/dy3)",
	              sc.chart));
	sc.alg = abelian_alg(2);
	sc.action = make_action(sc.alg, sc.chart, {sc.mvf("A"), sc.mvf("B")});
	sc.system = make_system(sc.form("phi"));
	MomentMapData m{*sc.system, *sc.action, MomentKind::Weak, {}};
	m.components[1] = {{parse_gmulti("e1", sc.alg), sc.form("f1A"), -1},
	                   {parse_gmulti("e2", sc.alg), sc.form("f1B"), -1}};
	m.components[2] = {{parse_gmulti("e1^e2", sc.alg), sc.form("f2"), 1}};
	sc.moment = std::move(m);
	return sc;
}

Scene builtin_scene(std::string const &name)
{
	if (name == "r3-noether")
		return r3_noether_scene();
	if (name == "r6-translation")
		return r6_translation_scene();
	if (name == "c3-volume")
		return c3_volume_scene();
	if (name == "c3-kahler")
		return c3_kahler_scene();
	if (name == "phase-demo")
		return phase_demo_scene();
	if (name == "g2-torus")
		return g2_torus_scene();
	throw std::invalid_argument("unknown built-in example " + name);
}

static void run_r3_noether(Scene const &sc, Report &rep)
{
	auto const &c = sc.chart;
	auto const &sys = *sc.system;
	rep.check("X_H = d/dz", sys.ham->field == parse_mvf("d/dz", c));
	auto [apair, asign] =
	    make_ham_pair(sc.form("alpha"), sc.mvf("Xalpha"), sys.omega);
	rep.check("alpha hamiltonian for d/dy", asign == -1, "0", asign);
	rep.check("L_{X_alpha} H = 0",
	          lie_derivative(sc.mvf("Xalpha"), sc.form("H")).is_zero());
	rep.check("L_{X_H} alpha = dx",
	          lie_derivative(sc.mvf("XH"), sc.form("alpha")) ==
	              parse_form("dx", c));
	auto cons = classify_conserved(sc.form("alpha"), sys);
	rep.check("alpha conserved globally", cons.level == Level::Global);
	auto nr = noether_residual(apair, sys);
	rep.check("noether residual 1", nr.res1.is_zero(), nr.res1.str());
	rep.check("noether residual 2", nr.res2.is_zero(), nr.res2.str());
}

static void run_r6_translation(Scene const &sc, Report &rep)
{
	rep.check("S |- omega = dH",
	          contract(sc.mvf("S"), sc.form("omega")) == ext_d(sc.form("H")));
	auto ah = action_preserves_H(*sc.moment);
	rep.check("group preserves H globally", ah.group_level == Level::Global);
	rep.check("classification implications", ah.implications_hold);
	bool all_global = true;
	for (auto const &comp : ah.components)
		all_global = all_global &&
		             (int)comp.conserved.level <= (int)Level::Global &&
		             (int)comp.symmetry.level <= (int)Level::Global;
	rep.check("every component global", all_global);
	rep.check("f3 strictly conserved",
	          ah.components.back().conserved.level == Level::Strict);
}

static void run_c3_volume(Scene const &sc, Report &rep)
{
	Form const &a = sc.form("alpha");
	MVF const &A = sc.mvf("A");
	MVF const &B = sc.mvf("B");
	rep.check("[A,B] = 0", schouten(A, B).is_zero());
	rep.check("A |- alpha = d f1(e1)",
	          contract(A, a) == ext_d(sc.form("f1e1")));
	rep.check("B |- alpha = d f1(e2)",
	          contract(B, a) == ext_d(sc.form("f1e2")));
	Form re = parse_form("x1*x2*x3 - x1*y2*y3 - y1*x2*y3 - y1*y2*x3",
	                     sc.chart);
	rep.check("B |- A |- alpha = -1/4 d Re(z1z2z3)",
	          contract(B, contract(A, a)) == -ext_d(re) * Rat(1, 4));
	rep.check("d f2 ties to B |- A |- alpha",
	          ext_d(sc.form("f2")) == -contract(B, contract(A, a)));
}

static void run_c3_kahler(Scene const &sc, Report &rep)
{
	Form const &w = sc.form("omega");
	rep.check("[A,B] = 0", schouten(sc.mvf("A"), sc.mvf("B")).is_zero());
	rep.check("A |- omega = -1/4 d(|z1|^2-|z3|^2)",
	          contract(sc.mvf("A"), w) == ext_d(sc.form("f1e1")));
	rep.check("B |- omega = -1/4 d(|z2|^2-|z3|^2)",
	          contract(sc.mvf("B"), w) == ext_d(sc.form("f1e2")));
}

static void run_phase_demo(Scene const &sc, Report &rep)
{
	auto base = make_chart(sc.phase->base);
	PhaseSpace ps = build_phase_space(base, sc.phase->k);
	auto np = check_nplectic(ps.omega);
	rep.check("omega 2-plectic",
	          np.closed && np.nondeg == NplecticReport::Nondeg::Yes);
	Rng rng(2024);
	for (int it = 0; it < 20; ++it)
	{
		MVF y = random_mvf(base, rng, 1, 2);
		MVF lift = complete_lift(y, ps);
		bool ok = lie_derivative(lift, ps.theta).is_zero() &&
		          pushforward(lift, ps) == y;
		rep.check("lift[" + std::to_string(it) + "]", ok);
	}
	for (int it = 0; it < 20; ++it)
	{
		DecomposableMVF y1, y2;
		if (it < 10)
		{
			y1 = DecomposableMVF{{random_mvf(base, rng, 1, 2)}, 1};
			y2 = DecomposableMVF{{random_mvf(base, rng, 1, 2)}, 1};
		}
		else
		{
			// degree-2 kernel element from constant commuting factors,
			// in the second slot so the position relation stays degree-1
			y1 = DecomposableMVF{{random_mvf(base, rng, 1, 2)}, 1};
			y2 = DecomposableMVF{{random_mvf(base, rng, 1, 0, 1),
			                      random_mvf(base, rng, 1, 0, 1)},
			                     1};
		}
		Form alpha = random_form(base, rng, 1, 2);
		Form beta = random_form(base, rng, 1, 2);
		auto res = momentum_bracket_residuals(y1, y2, alpha, beta, ps);
		std::string tag = "[" + std::to_string(it) + "]";
		rep.check("bracket PP" + tag, res.momentum_momentum.is_zero(),
		          res.momentum_momentum.str());
		rep.check("bracket pipi" + tag, res.position_position.is_zero(),
		          res.position_position.str());
		rep.check("bracket piP" + tag, res.position_momentum.is_zero(),
		          res.position_momentum.str());
	}
	for (int it = 0; it < 10; ++it)
	{
		Form a = random_form(base, rng, 1, 2);
		MVF x = position_field(a, ps);
		rep.check("push zero[" + std::to_string(it) + "]",
		          pushforward(x, ps).is_zero());
	}
}

static void run_g2_torus(Scene const &sc, Report &rep)
{
	G2Structure g2 = standard_g2(G2Presentation::RPlusC3);
	Form const &phi = sc.form("phi");
	Form const &f1A = sc.form("f1A");
	Form const &f1B = sc.form("f1B");
	MVF const &A = sc.mvf("A");
	MVF const &B = sc.mvf("B");
	rep.check("phi is the standard structure", phi == g2.phi);
	rep.check("[A,B] = 0", schouten(A, B).is_zero());
	rep.check("d f1(e1) = A |- phi", ext_d(f1A) == contract(A, phi));
	rep.check("d f1(e2) = B |- phi", ext_d(f1B) == contract(B, phi));
	rep.check("pi14(d f1(e1)) = 0", pi14(ext_d(f1A), g2).is_zero());
	rep.check("pi14(d f1(e2)) = 0", pi14(ext_d(f1B), g2).is_zero());
	rep.check("curl(f1(e1)#) = A", curl(sharp(f1A, g2), g2) == A);
	rep.check("curl(f1(e2)#) = B", curl(sharp(f1B, g2), g2) == B);
	Form dre = ext_d(sc.form("re3"));
	rep.check("4(AxB)b = d Re(z1z2z3)",
	          flat(cross(A, B, g2) * Rat(4), g2) == -dre, "0", -1);
	rep.check("B |- A |- phi = -1/4 d Re(z1z2z3)",
	          contract(B, contract(A, phi)) == -dre * Rat(1, 4));
	rep.check("d f2 ties to B |- A |- phi",
	          ext_d(sc.form("f2")) == -contract(B, contract(A, phi)));
	HamPair pa{f1A, -A};
	HamPair pb{f1B, -B};
	Form res = g2_bracket_is_cross_check(pa, pb, g2);
	rep.check("bracket is cross", res.is_zero(), res.str());
	rep.check("{f1(e1),f1(e2)} = (AxB)b",
	          poisson(pa, pb, phi) == flat(cross(A, B, g2), g2));
}

Report run_builtin(std::string const &name)
{
	Scene sc = builtin_scene(name);
	Report rep;
	rep.command = "example " + name;
	append(rep, run_check(sc));
	if (name == "r3-noether")
		run_r3_noether(sc, rep);
	else if (name == "r6-translation")
		run_r6_translation(sc, rep);
	else if (name == "c3-volume")
		run_c3_volume(sc, rep);
	else if (name == "c3-kahler")
		run_c3_kahler(sc, rep);
	else if (name == "phase-demo")
		run_phase_demo(sc, rep);
	else
		run_g2_torus(sc, rep);
	return rep;
}

} // namespace msg
