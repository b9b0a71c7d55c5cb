#include "msg/scene.hpp"

#include "msg/parse.hpp"
#include "msg/phase.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace msg
{

using nlohmann::json;

Form const &Scene::form(std::string const &name) const
{
	auto it = forms.find(name);
	if (it == forms.end())
		throw std::invalid_argument("scene: unknown form " + name);
	return it->second;
}

MVF const &Scene::mvf(std::string const &name) const
{
	auto it = mvfs.find(name);
	if (it == mvfs.end())
		throw std::invalid_argument("scene: unknown field " + name);
	return it->second;
}

GMulti parse_gmulti(std::string const &src, LieAlgPtr const &alg)
{
	if (!alg)
		throw std::invalid_argument("gmulti: scene has no lie algebra");
	size_t i = 0;
	auto skip = [&] {
		while (i < src.size() && std::isspace((unsigned char)src[i]))
			++i;
	};
	GMulti out;
	bool first = true;
	skip();
	while (i < src.size())
	{
		int sgn = 1;
		while (i < src.size() && (src[i] == '+' || src[i] == '-'))
		{
			if (src[i] == '-')
				sgn = -sgn;
			++i;
			skip();
		}
		if (i >= src.size())
			throw std::invalid_argument("gmulti: trailing operator");
		Rat coef(sgn);
		if (std::isdigit((unsigned char)src[i]))
		{
			size_t j = i;
			while (j < src.size() &&
			       (std::isdigit((unsigned char)src[j]) || src[j] == '/'))
				++j;
			coef = coef * rat_from_string(src.substr(i, j - i));
			i = j;
			skip();
			if (i < src.size() && src[i] == '*')
			{
				++i;
				skip();
			}
		}
		std::vector<int> idx;
		for (;;)
		{
			size_t j = i;
			while (j < src.size() && (std::isalnum((unsigned char)src[j]) ||
			                          src[j] == '_'))
				++j;
			if (j == i)
				throw std::invalid_argument("gmulti: expected basis name");
			std::string name = src.substr(i, j - i);
			auto it = std::find(alg->names.begin(), alg->names.end(), name);
			if (it == alg->names.end())
				throw std::invalid_argument("gmulti: unknown basis element " +
				                            name);
			idx.push_back((int)(it - alg->names.begin()));
			i = j;
			skip();
			if (i < src.size() && src[i] == '^')
			{
				++i;
				skip();
				continue;
			}
			break;
		}
		int s = 1;
		for (size_t a = 0; a + 1 < idx.size(); ++a)
			for (size_t b = 0; b + 1 < idx.size() - a; ++b)
				if (idx[b] > idx[b + 1])
				{
					std::swap(idx[b], idx[b + 1]);
					s = -s;
				}
		bool dup = false;
		for (size_t a = 0; a + 1 < idx.size(); ++a)
			dup = dup || idx[a] == idx[a + 1];
		if (first)
		{
			out = GMulti(alg, (int)idx.size());
			first = false;
		}
		else if ((int)idx.size() != out.deg)
			throw std::invalid_argument("gmulti: mixed degrees");
		if (!dup)
			out.add_term(IndexSet{std::move(idx)}, coef * s);
	}
	if (first)
		throw std::invalid_argument("gmulti: empty expression");
	return out;
}

static Rat json_rat(json const &v)
{
	if (v.is_number_integer())
		return Rat((long)v.get<long long>());
	if (v.is_string())
		return rat_from_string(v.get<std::string>());
	throw std::invalid_argument("scene: rational must be integer or string");
}

static json const &member(json const &o, char const *key)
{
	auto it = o.find(key);
	if (it == o.end())
		throw std::invalid_argument(std::string("scene: missing key ") + key);
	return *it;
}

Scene parse_scene(std::string const &json_text)
{
	json doc = json::parse(json_text);
	if (!doc.is_object())
		throw std::invalid_argument("scene: document must be an object");

	Scene sc;
	std::vector<std::string> names;
	for (auto const &n : member(doc, "chart"))
		names.push_back(n.get<std::string>());
	sc.chart = make_chart(names);

	if (doc.contains("forms"))
		for (auto const &[name, expr] : doc["forms"].items())
			sc.forms.emplace(name,
			                 parse_form(expr.get<std::string>(), sc.chart));
	if (doc.contains("mvfs"))
		for (auto const &[name, expr] : doc["mvfs"].items())
			sc.mvfs.emplace(name, parse_mvf(expr.get<std::string>(), sc.chart));

	if (doc.contains("lie_algebra"))
	{
		auto const &la = doc["lie_algebra"];
		std::vector<std::string> gnames;
		for (auto const &n : member(la, "names"))
			gnames.push_back(n.get<std::string>());
		int d = (int)gnames.size();
		auto const &tab = member(la, "table");
		if ((int)tab.size() != d)
			throw std::invalid_argument("scene: lie table shape");
		std::vector<std::vector<QVec>> table(d, std::vector<QVec>(d));
		for (int i = 0; i < d; ++i)
		{
			if ((int)tab[i].size() != d)
				throw std::invalid_argument("scene: lie table shape");
			for (int j = 0; j < d; ++j)
			{
				if ((int)tab[i][j].size() != d)
					throw std::invalid_argument("scene: lie table shape");
				QVec v;
				for (auto const &e : tab[i][j])
					v.push_back(json_rat(e));
				table[i][j] = std::move(v);
			}
		}
		sc.alg = make_lie_alg(gnames, table);
	}

	if (doc.contains("action"))
	{
		if (!sc.alg)
			throw std::invalid_argument("scene: action without lie_algebra");
		std::vector<MVF> gens;
		for (auto const &n : sc.alg->names)
			gens.push_back(sc.mvf(member(doc["action"], n.c_str())
			                          .get<std::string>()));
		sc.action = make_action(sc.alg, sc.chart, std::move(gens));
	}

	if (doc.contains("system"))
	{
		auto const &sy = doc["system"];
		Form const &omega = sc.form(member(sy, "omega").get<std::string>());
		PlecticSystem sys = make_system(omega);
		if (sy.contains("hamiltonian"))
		{
			Form const &H = sc.form(sy["hamiltonian"].get<std::string>());
			if (sy.contains("field"))
				set_hamiltonian(sys, H, sc.mvf(sy["field"].get<std::string>()));
			else
			{
				auto sol = hamiltonian_solve(H, omega);
				if (!sol.pair)
					throw std::invalid_argument(
					    "scene: hamiltonian admits no field");
				set_hamiltonian(sys, H, sol.pair->field);
			}
		}
		if (sy.contains("sign"))
			sc.declared_ham_sign = sy["sign"].get<int>();
		sc.system = std::move(sys);
	}

	if (doc.contains("moment_map"))
	{
		if (!sc.system || !sc.action)
			throw std::invalid_argument(
			    "scene: moment_map needs system and action");
		auto const &mm = doc["moment_map"];
		std::string kind = member(mm, "kind").get<std::string>();
		if (kind != "weak" && kind != "full")
			throw std::invalid_argument("scene: moment kind must be weak|full");
		MomentMapData m{*sc.system, *sc.action,
		                kind == "weak" ? MomentKind::Weak : MomentKind::Full,
		                {}};
		for (auto const &e : member(mm, "components"))
		{
			GMulti p = parse_gmulti(member(e, "p").get<std::string>(), sc.alg);
			std::string fx = member(e, "form").get<std::string>();
			Form f = sc.forms.count(fx) ? sc.forms.at(fx)
			                            : parse_form(fx, sc.chart);
			int sign = e.contains("sign") ? e["sign"].get<int>() : 1;
			if (sign != 1 && sign != -1)
				throw std::invalid_argument("scene: component sign must be +-1");
			m.components[p.deg].push_back({std::move(p), std::move(f), sign});
		}
		sc.moment = std::move(m);
	}

	if (doc.contains("phase_space"))
	{
		auto const &ps = doc["phase_space"];
		Scene::PhaseReq req;
		for (auto const &n : member(ps, "base"))
			req.base.push_back(n.get<std::string>());
		req.k = member(ps, "k").get<int>();
		build_phase_space(make_chart(req.base), req.k); // validates
		sc.phase = std::move(req);
	}

	return sc;
}

Scene load_scene(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::invalid_argument("scene: cannot open " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_scene(buf.str());
}

static bool moment_equal(MomentMapData const &a, MomentMapData const &b)
{
	if (a.kind != b.kind || a.components.size() != b.components.size())
		return false;
	for (auto const &[k, comps] : a.components)
	{
		auto it = b.components.find(k);
		if (it == b.components.end() || it->second.size() != comps.size())
			return false;
		for (size_t i = 0; i < comps.size(); ++i)
		{
			auto const &x = comps[i];
			auto const &y = it->second[i];
			// algebras are compared structurally by the caller, so the
			// coefficients decide equality here
			if (x.p.deg != y.p.deg || x.p.coords != y.p.coords ||
			    !(x.form == y.form) || x.sign != y.sign)
				return false;
		}
	}
	return true;
}

bool scene_equal(Scene const &a, Scene const &b)
{
	if (!same_chart(a.chart, b.chart) || a.forms != b.forms ||
	    a.mvfs != b.mvfs)
		return false;
	if ((bool)a.alg != (bool)b.alg)
		return false;
	if (a.alg && (a.alg->names != b.alg->names || a.alg->table != b.alg->table))
		return false;
	if (a.action.has_value() != b.action.has_value())
		return false;
	if (a.action && a.action->gens != b.action->gens)
		return false;
	if (a.system.has_value() != b.system.has_value())
		return false;
	if (a.system)
	{
		if (!(a.system->omega == b.system->omega) ||
		    a.system->ham.has_value() != b.system->ham.has_value())
			return false;
		if (a.system->ham && (!(a.system->ham->form == b.system->ham->form) ||
		                      !(a.system->ham->field == b.system->ham->field)))
			return false;
	}
	if (a.declared_ham_sign != b.declared_ham_sign)
		return false;
	if (a.moment.has_value() != b.moment.has_value())
		return false;
	if (a.moment && !moment_equal(*a.moment, *b.moment))
		return false;
	if (a.phase.has_value() != b.phase.has_value())
		return false;
	if (a.phase && (a.phase->base != b.phase->base || a.phase->k != b.phase->k))
		return false;
	return true;
}

static char const *level_name(ClassificationReport::Level l)
{
	switch (l)
	{
	case ClassificationReport::Level::Strict:
		return "strict";
	case ClassificationReport::Level::Global:
		return "global";
	case ClassificationReport::Level::Local:
		return "local";
	default:
		return "none";
	}
}

static void moment_checks(Report &rep, MomentMapData const &m)
{
	auto checks = m.kind == MomentKind::Weak ? weak_moment_verify(m)
	                                         : full_moment_verify(m);
	size_t i = 0;
	for (auto const &[k, comps] : m.components)
		for (auto const &c : comps)
		{
			auto const &chk = checks[i++];
			std::string id = "moment f" + std::to_string(k) + "(" + c.p.str() +
			                 ")";
			rep.check(id,
			          chk.residual.is_zero() && chk.matched_sign == c.sign,
			          chk.residual.str(), chk.matched_sign);
		}
}

Report run_check(Scene const &sc)
{
	Report rep;
	rep.command = "check";
	std::string cs;
	for (auto const &n : sc.chart->names)
		cs += (cs.empty() ? "" : ",") + n;
	rep.info("chart", cs);
	rep.info("forms", std::to_string(sc.forms.size()));
	rep.info("mvfs", std::to_string(sc.mvfs.size()));
	if (sc.alg)
		rep.info("lie_algebra", "dim " + std::to_string(sc.alg->dim()));
	if (sc.system)
	{
		auto np = check_nplectic(sc.system->omega);
		rep.check("omega closed", np.closed,
		          np.closed ? "0" : ext_d(sc.system->omega).str());
		rep.info("omega nondegenerate",
		         np.nondeg == NplecticReport::Nondeg::Yes ? "yes"
		                                                  : "at sample point");
		rep.info("plectic degree", std::to_string(sc.system->n));
		if (sc.system->ham)
		{
			auto hv = hamiltonian_verify(sc.system->ham->form,
			                             sc.system->ham->field,
			                             sc.system->omega);
			rep.check("hamiltonian pair", hv.matched_sign == 1,
			          hv.residual.str(), sc.system->ham_sign);
			if (sc.declared_ham_sign != 0)
				rep.check("hamiltonian sign",
				          sc.declared_ham_sign == sc.system->ham_sign, "0",
				          sc.system->ham_sign);
		}
	}
	if (sc.action)
	{
		bool pres = sc.system && action_preserves(*sc.action, sc.system->omega);
		rep.check("action preserves omega", pres);
	}
	if (sc.moment)
		moment_checks(rep, *sc.moment);
	if (sc.phase)
	{
		PhaseSpace ps = build_phase_space(make_chart(sc.phase->base),
		                                  sc.phase->k);
		rep.check("phase omega = -d theta",
		          (ps.omega + ext_d(ps.theta)).is_zero());
		rep.check("phase omega closed", ext_d(ps.omega).is_zero());
		rep.info("phase total dim", std::to_string(ps.total->dim()));
	}
	return rep;
}

Report run_classify(Scene const &sc, std::string const &name, bool is_form)
{
	Report rep;
	rep.command = "classify " + name;
	ClassificationReport r;
	if (is_form)
	{
		Form const &f = sc.form(name);
		r = sc.system && sc.system->ham ? classify_conserved(f, *sc.system)
		                                : classify_form(f);
	}
	else
	{
		if (!sc.system || !sc.system->ham)
			throw std::invalid_argument(
			    "classify: symmetry needs a hamiltonian system");
		r = classify_symmetry(sc.mvf(name), *sc.system);
	}
	rep.info("level", level_name(r.level));
	rep.info("derivative", r.derivative.str());
	if (r.witness)
		rep.info("witness", r.witness->str());
	return rep;
}

Report run_bracket_poisson(Scene const &sc, std::string const &a,
                           std::string const &b)
{
	if (!sc.system)
		throw std::invalid_argument("bracket: poisson needs a system");
	Report rep;
	rep.command = "bracket {" + a + "," + b + "}";
	auto pa = hamiltonian_solve(sc.form(a), sc.system->omega);
	auto pb = hamiltonian_solve(sc.form(b), sc.system->omega);
	if (!pa.pair || !pb.pair)
	{
		rep.fail("hamiltonian solve",
		         std::string(!pa.pair ? a : b) + " is not hamiltonian");
		return rep;
	}
	rep.info("field " + a, pa.pair->field.str());
	rep.info("field " + b, pb.pair->field.str());
	rep.info("poisson", poisson(*pa.pair, *pb.pair, sc.system->omega).str());
	return rep;
}

Report run_bracket_schouten(Scene const &sc, std::string const &x,
                            std::string const &y)
{
	Report rep;
	rep.command = "bracket [" + x + "," + y + "]";
	rep.info("schouten", schouten(sc.mvf(x), sc.mvf(y)).str());
	return rep;
}

Report run_moment(Scene const &sc, std::optional<MomentKind> kind)
{
	if (!sc.moment)
		throw std::invalid_argument("moment: scene has no moment map");
	Report rep;
	rep.command = "moment";
	MomentMapData m = *sc.moment;
	if (kind)
		m.kind = *kind;
	moment_checks(rep, m);
	int zero = 0, total = 0;
	for (auto const &s : sigma_equivariance(m))
	{
		++total;
		zero += s.value.is_zero();
	}
	rep.info("sigma zero",
	         std::to_string(zero) + "/" + std::to_string(total));
	if (m.system.ham)
	{
		auto ah = action_preserves_H(m);
		rep.info("group preserves H", level_name(ah.group_level));
		rep.check("classification implications", ah.implications_hold);
		for (auto const &comp : ah.components)
			rep.info("component f" + std::to_string(comp.k) + "(" +
			             comp.p.str() + ")",
			         std::string("conserved ") +
			             level_name(comp.conserved.level) + ", symmetry " +
			             level_name(comp.symmetry.level));
	}
	return rep;
}

} // namespace msg
