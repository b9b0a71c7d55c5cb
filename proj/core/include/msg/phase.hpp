#pragma once

#include "msg/plectic.hpp"

namespace msg
{

// Lambda^k (T* N) with induced coordinates q (base) and p_I (fiber)
struct PhaseSpace
{
	ChartPtr base;
	int k = 0;
	ChartPtr total;
	std::vector<IndexSet> fiber_sets; // base index set of each fiber coordinate
	Form theta;                       // tautological k-form
	Form omega;                       // -d theta, a (k+1)-plectic form

	// total-chart coordinate index of the fiber coordinate p_I
	int fiber_index(IndexSet const &I) const;
};

PhaseSpace build_phase_space(ChartPtr const &base, int k);

// pullback of a base form along the projection
Form position_form(Form const &alpha, PhaseSpace const &ps);

// vector field on the total space preserving theta and projecting to Y
MVF complete_lift(MVF const &Y, PhaseSpace const &ps);

// wedge of the complete lifts of the factors, including the scale
MVF complete_lift_multi(DecomposableMVF const &Y, PhaseSpace const &ps);

// P(Y) = -zeta(l+1) Y# |- theta
Form momentum_form(DecomposableMVF const &Y, PhaseSpace const &ps);

// extension to arbitrary multivectors via term decomposition
Form momentum_form_general(MVF const &Y, PhaseSpace const &ps);

// base components of a degree-1 field on the total space
MVF pushforward(MVF const &X, PhaseSpace const &ps);

// Hamiltonian field for a position form with vanishing pushforward
MVF position_field(Form const &alpha, PhaseSpace const &ps);

struct MomentumBracketResiduals
{
	Form momentum_momentum; // {P(Y1),P(Y2)} relation
	Form position_position; // {pi*alpha, pi*beta}
	Form position_momentum; // {pi*alpha, P(Y1)} relation
};

// Y1, Y2 must have vanishing list boundary (Lie kernel on the base)
MomentumBracketResiduals momentum_bracket_residuals(DecomposableMVF const &Y1,
                                                    DecomposableMVF const &Y2,
                                                    Form const &alpha,
                                                    Form const &beta,
                                                    PhaseSpace const &ps);

} // namespace msg
