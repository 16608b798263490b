#pragma once

#include <vector>

#include "djkm/rational.hpp"

namespace djkm {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(RationalMatrix& m, int cols);
int rank(RationalMatrix m, int cols);
/// Basis of { v : m v = 0 }, one vector per free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, int cols);
/// Determinant of a square matrix by Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

}  // namespace djkm
