#pragma once

// Segre embedding of (P^k)^r and the equations of the image of a
// multihomogeneous hypersurface.

#include <vector>

#include "effbounds/geometry/polynomial.hpp"
#include "effbounds/geometry/projective.hpp"

namespace effbounds::geom {

// Z_{i_1..i_r} = X^(1)_{i_1} ... X^(r)_{i_r}, row-major (i_r varies fastest).
ProjectivePoint segre_embed(const std::vector<ProjectivePoint>& pts);
ZVec segre(const std::vector<ZVec>& pts);

// Row-major flat index of (i_1, ..., i_r) and back.
int segre_flat_index(const std::vector<int>& idx, int k);
std::vector<int> segre_multi_index(int flat, int k, int r);

struct SegreEquations {
  int k = 0, r = 0;
  std::vector<HomogeneousPolynomial> substituted;  // F_I, one per multi-index I, in row-major order
  std::vector<HomogeneousPolynomial> relations;    // Z_I Z_J - Z_K Z_L, deduplicated
  int max_degree() const;
  std::vector<HomogeneousPolynomial> all() const;
};

// F has r blocks of k+1 variables (shape_mismatch otherwise).  F_I replaces
// X^(j)_a by Z_{I with position j set to a}.
SegreEquations segre_pushforward_equations(const HomogeneousPolynomial& F, int k, int r);

}  // namespace effbounds::geom
