#pragma once

#include "msg/lie.hpp"
#include "msg/plectic.hpp"

namespace msg
{

struct ClassificationReport
{
	enum class Level
	{
		Strict,
		Global,
		Local,
		None
	};

	Level level = Level::None;
	Form derivative;             // the form whose closedness was examined
	std::optional<Form> witness; // primitive when Global
};

// classify a form as zero / exact / closed / not closed
ClassificationReport classify_form(Form const &t);

// conserved quantity: level of L_{X_H} alpha
ClassificationReport classify_conserved(Form const &alpha,
                                        PlecticSystem const &sys);

// continuous symmetry: level of L_X H; requires L_X omega = 0
ClassificationReport classify_symmetry(MVF const &X, PlecticSystem const &sys);

struct NoetherResiduals
{
	Form res1;
	Form res2;
};

NoetherResiduals noether_residual(HamPair const &alpha,
                                  PlecticSystem const &sys);

// [X_alpha, X_H] |- omega - d L_{X_H} alpha
Form conserved_interior_residual(HamPair const &alpha,
                                 PlecticSystem const &sys);

enum class MomentKind
{
	Weak,
	Full
};

struct MomentComponent
{
	GMulti p;
	Form form;
	int sign = 1; // recorded sign making the defining equation hold
};

struct MomentMapData
{
	PlecticSystem system;
	ActionModel action;
	MomentKind kind = MomentKind::Weak;
	std::map<int, std::vector<MomentComponent>> components; // keyed by degree
};

struct MomentCheck
{
	int k = 0;
	GMulti p;
	Form residual;
	int matched_sign = 0;
};

// d f_k(p) + s zeta(k) V_p |- omega = 0 for each stored component
std::vector<MomentCheck> weak_moment_verify(MomentMapData const &m);

// f_{k-1}(dp) + d f_k(p) + s zeta(k) V_p |- omega = 0
std::vector<MomentCheck> full_moment_verify(MomentMapData const &m);

// linear extension of the stored components to an arbitrary element
Form moment_eval(MomentMapData const &m, GMulti const &p);

// candidate k-th component on p = boundary(q), built as (-1)^k V_q |- omega
std::pair<GMulti, Form> moment_candidate_from_boundary(GMulti const &q,
                                                       PlecticSystem const &sys,
                                                       ActionModel const &act);

struct SigmaValue
{
	int k = 0;
	int xi = 0; // basis index of the algebra element
	GMulti p;
	Form value;
};

// Sigma_k(xi, p) = f_k([xi,p]) + L_{V_xi} f_k(p); all zero iff equivariant
std::vector<SigmaValue> sigma_equivariance(MomentMapData const &m);

// shift every component by a closed form; l indexed like components
MomentMapData adjust_by_cochain(
    MomentMapData const &m,
    std::map<int, std::vector<Form>> const &l);

// {f_k(p), f_l(q)} - (-1)^{k+l+kl} f_{k+l-1}([p,q]), classified
ClassificationReport morphism_closed_check(MomentMapData const &m,
                                           GMulti const &p, GMulti const &q);

struct ComponentClassification
{
	int k = 0;
	GMulti p;
	ClassificationReport conserved; // of f_k(p)
	ClassificationReport symmetry;  // of V_p
};

struct ActionHReport
{
	std::vector<ClassificationReport> generators; // L_{V_i} H per basis element
	ClassificationReport::Level group_level = ClassificationReport::Level::None;
	std::vector<ComponentClassification> components;
	bool implications_hold = false;
};

ActionHReport action_preserves_H(MomentMapData const &m);

} // namespace msg
