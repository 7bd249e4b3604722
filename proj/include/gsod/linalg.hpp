#pragma once

#include <optional>
#include <vector>

#include "gsod/rational.hpp"

namespace gsod {

// Dense exact matrices over Q, row-major. Small sizes only.
using QMat = std::vector<std::vector<Rational>>;

std::size_t qmat_rank(QMat m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> qmat_rref(QMat& m);

// Basis of the right nullspace {x : m x = 0}; m is rows x cols.
std::vector<std::vector<Rational>> qmat_nullspace(const QMat& m, std::size_t cols);

// One solution of m x = b, if any.
std::optional<std::vector<Rational>> qmat_solve(QMat m, std::vector<Rational> b);

} // namespace gsod
