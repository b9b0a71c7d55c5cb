#pragma once

#include "msg/bracket.hpp"
#include "msg/linalg.hpp"

namespace msg
{

// zeta(k) = -(-1)^{k(k+1)/2}, the sign normalizing all higher brackets
int zeta(int k);

struct NplecticReport
{
	enum class Nondeg
	{
		Yes,
		No,
		GenericAtSample
	};

	bool closed = false;
	Nondeg nondeg = Nondeg::No;
};

// nondegeneracy is exact for constant omega, else sampled at the given point
NplecticReport check_nplectic(Form const &omega,
                              std::vector<Rat> const *sample = nullptr);

// constant multivectors of degree k annihilating a constant-coefficient omega
std::vector<MVF> omega_kernel_basis(Form const &omega, int k);

// Hamiltonian pair in the definition's convention: d(form) = -field |- omega
struct HamPair
{
	Form form;
	MVF field;
};

struct HamVerify
{
	Form residual;        // d(alpha) + X |- omega
	int matched_sign = 0; // s with d(alpha) + s X |- omega = 0, or 0 if neither
};

HamVerify hamiltonian_verify(Form const &alpha, MVF const &X,
                             Form const &omega);

// normalizes the field direction; second element reports the sign that matched
std::pair<HamPair, int> make_ham_pair(Form const &alpha, MVF const &X,
                                      Form const &omega);

struct HamSolveResult
{
	std::optional<HamPair> pair;
	std::vector<MVF> kernel; // constant kernel fields of the same degree
};

// exact per-monomial solve of d(alpha) = -X |- omega, omega constant
HamSolveResult hamiltonian_solve(Form const &alpha, Form const &omega);

struct PlecticSystem
{
	ChartPtr chart;
	Form omega;
	int n = 0;
	std::optional<HamPair> ham;
	int ham_sign = 0; // sign the supplied field matched before normalizing
};

PlecticSystem make_system(Form const &omega,
                          std::vector<Rat> const *sample = nullptr);
void set_hamiltonian(PlecticSystem &sys, Form const &H, MVF const &XH);

// {a,b} = (-1)^{l+1} X_b |- X_a |- omega, l = deg X_b
Form poisson(HamPair const &a, HamPair const &b, Form const &omega);

// graded Jacobi defect minus its exact correction term; must vanish
Form jacobi_residual(HamPair const &a, HamPair const &b, HamPair const &c,
                     Form const &omega);

// l_k = zeta(k) X_k |- ... |- X_1 |- omega on Hamiltonian (n-1)-forms
Form lie_n_bracket(std::vector<HamPair> const &pairs, Form const &omega);

Form rogers_residual(std::vector<HamPair> const &pairs, Form const &omega);

} // namespace msg
