#include "msg/noether.hpp"

namespace msg
{

ClassificationReport classify_form(Form const &t)
{
	ClassificationReport rep;
	rep.derivative = t;
	auto ex = classify_closed_exact(t);
	switch (ex.status)
	{
	case ExactnessReport::Status::Zero:
		rep.level = ClassificationReport::Level::Strict;
		break;
	case ExactnessReport::Status::ClosedExact:
		rep.level = ClassificationReport::Level::Global;
		rep.witness = ex.primitive;
		break;
	case ExactnessReport::Status::ClosedDeg0Constant:
		rep.level = ClassificationReport::Level::Local;
		break;
	case ExactnessReport::Status::NotClosed:
		rep.level = ClassificationReport::Level::None;
		break;
	}
	return rep;
}

ClassificationReport classify_conserved(Form const &alpha,
                                        PlecticSystem const &sys)
{
	if (!sys.ham)
		throw std::invalid_argument("classify_conserved: system has no H");
	return classify_form(lie_derivative(sys.ham->field, alpha));
}

ClassificationReport classify_symmetry(MVF const &X, PlecticSystem const &sys)
{
	if (!sys.ham)
		throw std::invalid_argument("classify_symmetry: system has no H");
	if (!lie_derivative(X, sys.omega).is_zero())
		throw std::invalid_argument("classify_symmetry: X does not preserve omega");
	return classify_form(lie_derivative(X, sys.ham->form));
}

NoetherResiduals noether_residual(HamPair const &alpha,
                                  PlecticSystem const &sys)
{
	if (!sys.ham)
		throw std::invalid_argument("noether_residual: system has no H");
	Form const &H = sys.ham->form;
	MVF const &XH = sys.ham->field;
	Form const &a = alpha.form;
	MVF const &Xa = alpha.field;
	// the two Lie-derivative defects cancel; the bracket equals either one
	Form r1 = lie_derivative(Xa, H) - ext_d(contract(Xa, H)) +
	          lie_derivative(XH, a) - ext_d(contract(XH, a));
	Form r2 = poisson(alpha, *sys.ham, sys.omega) + lie_derivative(XH, a) -
	          ext_d(contract(XH, a));
	return {r1, r2};
}

Form conserved_interior_residual(HamPair const &alpha,
                                 PlecticSystem const &sys)
{
	if (!sys.ham)
		throw std::invalid_argument("conserved_interior_residual: no H");
	Form lhs = contract(schouten(alpha.field, sys.ham->field), sys.omega);
	Form rhs = ext_d(lie_derivative(sys.ham->field, alpha.form));
	return lhs - rhs;
}

static MomentCheck check_component(MomentMapData const &m, int k,
                                   MomentComponent const &comp,
                                   Form const &boundary_part)
{
	MomentCheck chk{k, comp.p, Form(), 0};
	Form hook = contract(generator_mvf(m.action, comp.p), m.system.omega) *
	            Rat(zeta(k));
	Form base = ext_d(comp.form) + boundary_part;
	if ((base + hook).is_zero())
	{
		chk.matched_sign = 1;
		chk.residual = base + hook;
	}
	else if ((base - hook).is_zero())
	{
		chk.matched_sign = -1;
		chk.residual = base - hook;
	}
	else
		chk.residual = base + hook * Rat(comp.sign);
	return chk;
}

std::vector<MomentCheck> weak_moment_verify(MomentMapData const &m)
{
	if (m.kind != MomentKind::Weak)
		throw std::invalid_argument("weak_moment_verify: map is not weak");
	std::vector<MomentCheck> out;
	for (auto const &[k, comps] : m.components)
		for (auto const &c : comps)
		{
			if (!ce_boundary(c.p).is_zero())
				throw std::invalid_argument(
				    "weak_moment_verify: component outside the Lie kernel");
			Form zero(m.system.chart, c.form.degree() + 1);
			out.push_back(check_component(m, k, c, zero));
		}
	return out;
}

std::vector<MomentCheck> full_moment_verify(MomentMapData const &m)
{
	if (m.kind != MomentKind::Full)
		throw std::invalid_argument("full_moment_verify: map is not full");
	std::vector<MomentCheck> out;
	for (auto const &[k, comps] : m.components)
		for (auto const &c : comps)
		{
			GMulti dp = ce_boundary(c.p);
			Form part(m.system.chart, c.form.degree() + 1);
			if (!dp.is_zero())
			{
				if (!m.components.count(k - 1))
					throw std::invalid_argument(
					    "full_moment_verify: missing component degree");
				MomentMapData const &mm = m;
				part = part + moment_eval(mm, dp);
			}
			out.push_back(check_component(m, k, c, part));
		}
	return out;
}

Form moment_eval(MomentMapData const &m, GMulti const &p)
{
	auto it = m.components.find(p.deg);
	if (it == m.components.end())
		throw std::invalid_argument("moment_eval: no components of this degree");
	auto const &comps = it->second;
	auto sets = index_sets(m.action.alg->dim(), p.deg);
	QMat mat(sets.size(), QVec(comps.size(), Rat(0)));
	for (size_t j = 0; j < comps.size(); ++j)
		for (size_t i = 0; i < sets.size(); ++i)
			mat[i][j] = comps[j].p.coord(sets[i]);
	QVec rhs;
	rhs.reserve(sets.size());
	for (auto const &I : sets)
		rhs.push_back(p.coord(I));
	auto x = solve(mat, rhs);
	if (!x)
		throw std::invalid_argument(
		    "moment_eval: element not in the span of stored components");
	int n = m.system.n;
	Form out(m.system.chart, n - p.deg);
	for (size_t j = 0; j < comps.size(); ++j)
		if ((*x)[j] != 0)
			out = out + comps[j].form * (*x)[j];
	return out;
}

std::pair<GMulti, Form> moment_candidate_from_boundary(GMulti const &q,
                                                       PlecticSystem const &sys,
                                                       ActionModel const &act)
{
	if (!same_chart(sys.chart, act.chart))
		throw std::invalid_argument("moment_candidate: chart mismatch");
	GMulti p = ce_boundary(q);
	int k = q.deg - 1;
	Form cand =
	    contract(generator_mvf(act, q), sys.omega) * Rat(sign_pow(k));
	return {p, cand};
}

std::vector<SigmaValue> sigma_equivariance(MomentMapData const &m)
{
	std::vector<SigmaValue> out;
	for (auto const &[k, comps] : m.components)
		for (int xi = 0; xi < m.action.alg->dim(); ++xi)
			for (auto const &c : comps)
			{
				GMulti br = schouten_g(
				    GMulti::basis(m.action.alg, IndexSet{{xi}}), c.p);
				Form f_br = br.is_zero()
				                ? Form(m.system.chart, c.form.degree())
				                : moment_eval(m, br);
				Form val = f_br +
				           lie_derivative(m.action.gens[xi], c.form);
				out.push_back({k, xi, c.p, val});
			}
	return out;
}

MomentMapData adjust_by_cochain(MomentMapData const &m,
                                std::map<int, std::vector<Form>> const &l)
{
	MomentMapData out = m;
	for (auto const &[k, shifts] : l)
	{
		auto it = out.components.find(k);
		if (it == out.components.end() || shifts.size() != it->second.size())
			throw std::invalid_argument("adjust_by_cochain: shape mismatch");
		for (size_t i = 0; i < shifts.size(); ++i)
		{
			if (!ext_d(shifts[i]).is_zero())
				throw std::invalid_argument("adjust_by_cochain: shift not closed");
			it->second[i].form = it->second[i].form + shifts[i];
		}
	}
	return out;
}

ClassificationReport morphism_closed_check(MomentMapData const &m,
                                           GMulti const &p, GMulti const &q)
{
	int k = p.deg, l = q.deg;
	Form fp = moment_eval(m, p);
	Form fq = moment_eval(m, q);
	// the generator fields are Hamiltonian for the components up to sign
	auto pa = make_ham_pair(fp, generator_mvf(m.action, p) * Rat(zeta(k)),
	                        m.system.omega)
	              .first;
	auto pb = make_ham_pair(fq, generator_mvf(m.action, q) * Rat(zeta(l)),
	                        m.system.omega)
	              .first;
	Form br = poisson(pa, pb, m.system.omega);
	GMulti pq = schouten_g(p, q);
	Form fpq = pq.is_zero() ? Form(m.system.chart, br.degree())
	                        : moment_eval(m, pq);
	Form diff = br - fpq * Rat(sign_pow(k + l + k * l));
	return classify_form(diff);
}

ActionHReport action_preserves_H(MomentMapData const &m)
{
	if (!m.system.ham)
		throw std::invalid_argument("action_preserves_H: system has no H");
	ActionHReport rep;
	using L = ClassificationReport::Level;
	rep.group_level = L::Strict;
	for (auto const &v : m.action.gens)
	{
		auto c = classify_form(lie_derivative(v, m.system.ham->form));
		if ((int)c.level > (int)rep.group_level)
			rep.group_level = c.level;
		rep.generators.push_back(std::move(c));
	}
	rep.implications_hold = true;
	for (auto const &[k, comps] : m.components)
		for (auto const &c : comps)
		{
			ComponentClassification cc;
			cc.k = k;
			cc.p = c.p;
			cc.conserved = classify_conserved(c.form, m.system);
			cc.symmetry = classify_symmetry(generator_mvf(m.action, c.p),
			                                m.system);
			// locally or globally preserved H forces local conservation and
			// symmetry; strictly preserved forces the global levels
			if (rep.group_level == L::Local || rep.group_level == L::Global)
			{
				if (cc.conserved.level == L::None ||
				    cc.symmetry.level == L::None)
					rep.implications_hold = false;
			}
			else if (rep.group_level == L::Strict)
			{
				if ((int)cc.conserved.level > (int)L::Global ||
				    (int)cc.symmetry.level > (int)L::Global)
					rep.implications_hold = false;
			}
			rep.components.push_back(std::move(cc));
		}
	return rep;
}

} // namespace msg
