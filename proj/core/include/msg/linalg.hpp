#pragma once

#include "msg/rat.hpp"

#include <optional>
#include <vector>

namespace msg
{

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// reduce to reduced row echelon form; returns pivot column list (rank = size)
std::vector<int> rref_inplace(QMat &m);

// basis of { x : A x = 0 }, A given row-wise with ncols columns
std::vector<QVec> nullspace(QMat a, int ncols);

// one solution of A x = b, or nullopt if inconsistent
std::optional<QVec> solve(QMat const &a, QVec const &b);

int rank(QMat a);

} // namespace msg
