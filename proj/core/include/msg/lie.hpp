#pragma once

#include "msg/bracket.hpp"
#include "msg/linalg.hpp"

#include <memory>

namespace msg
{

// finite-dimensional Lie algebra over Q via structure constants
class LieAlg
{
  public:
	std::vector<std::string> names;
	// table[i][j] = coordinates of [e_i, e_j]
	std::vector<std::vector<QVec>> table;

	int dim() const { return (int)names.size(); }
	QVec bracket(QVec const &a, QVec const &b) const;
};

using LieAlgPtr = std::shared_ptr<const LieAlg>;

// validates antisymmetry and the Jacobi identity
LieAlgPtr make_lie_alg(std::vector<std::string> names,
                       std::vector<std::vector<QVec>> table);

// element of Lambda^k g with rational coordinates
struct GMulti
{
	LieAlgPtr alg;
	int deg = 0;
	std::map<IndexSet, Rat> coords;

	GMulti() = default;
	GMulti(LieAlgPtr a, int k) : alg(std::move(a)), deg(k) {}

	static GMulti basis(LieAlgPtr a, IndexSet const &I);

	bool is_zero() const { return coords.empty(); }
	void add_term(IndexSet const &I, Rat const &r);
	Rat coord(IndexSet const &I) const;

	GMulti operator+(GMulti const &o) const;
	GMulti operator-() const;
	GMulti operator-(GMulti const &o) const { return *this + (-o); }
	GMulti operator*(Rat const &r) const;
	bool operator==(GMulti const &o) const;
	std::string str() const;
};

GMulti wedge_g(GMulti const &a, GMulti const &b);

// all sorted k-subsets of {0..n-1} in lex order
std::vector<IndexSet> index_sets(int n, int k);

GMulti ce_boundary(GMulti const &p);
std::vector<GMulti> lie_kernel_basis(LieAlgPtr const &g, int k);

// Schouten bracket on Lambda g, recovered from the boundary Leibniz identity
GMulti schouten_g(GMulti const &p, GMulti const &q);
GMulti ad_action(GMulti const &xi, GMulti const &p);

struct H0Report
{
	int span_dim = 0;
	int kernel_dim = 0;
	bool equals_kernel = false;
};

H0Report h0_bracket_span_check(LieAlgPtr const &g, int k);

// infinitesimal action: generator fields V_i with [V_i,V_j] = -V_{[e_i,e_j]}
struct ActionModel
{
	LieAlgPtr alg;
	ChartPtr chart;
	std::vector<MVF> gens;
};

ActionModel make_action(LieAlgPtr alg, ChartPtr chart, std::vector<MVF> gens);

MVF generator_mvf(ActionModel const &a, GMulti const &p);

// action preserves a given form: L_{V_i} t = 0 for every basis generator
bool action_preserves(ActionModel const &a, Form const &t);

// fixed fuzz library: abelian R^n, heisenberg h3, so(3), se(2), solvable r+r2
LieAlgPtr abelian_alg(int n);
LieAlgPtr heisenberg3();
LieAlgPtr so3();
LieAlgPtr se2();
LieAlgPtr solvable_rr2();
std::vector<LieAlgPtr> algebra_library();

} // namespace msg
