#pragma once

// Fraction-free exact linear algebra over the integers.

#include <vector>

#include "effbounds/geometry/exact.hpp"

namespace effbounds::geom {

struct Echelon {
  ZMat R;                   // row echelon form, fraction-free
  std::vector<int> pivots;  // pivot column of each nonzero row
  int swaps = 0;
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Bareiss elimination with column skipping; every division is exact.
Echelon bareiss(ZMat A);

mpz_class determinant(const ZMat& A);  // square

// Basis of the right nullspace, each vector primitive.  Eliminates a leading
// block of rows first and checks the remaining rows against the result,
// falling back to the full matrix when a row disagrees.
std::vector<ZVec> nullspace(const ZMat& A);

// Rank modulo the prime 2^64 - 59.  Never exceeds the rank over Q, so a full
// rank mod p certifies full rank over Q.
int rank_mod_p(const ZMat& A);

// Each row scaled by its denominators' lcm (rows are projective data).
ZMat integer_rows(const QMat& A);

mpz_class dot(const ZMat& A, Eigen::Index row, const ZVec& v);

}  // namespace effbounds::geom
