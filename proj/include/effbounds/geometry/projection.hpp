#pragma once

// Veronese maps and the Vandermonde family of projections P^M -> P^2.

#include <cstdint>
#include <vector>

#include "effbounds/geometry/polynomial.hpp"
#include "effbounds/geometry/projective.hpp"

namespace effbounds::geom {

// Coordinates are the degree-l monomials in the order of monomials(m+1, l).
ProjectivePoint veronese_embed(const ProjectivePoint& pt, int l);
ZVec veronese(const ZVec& x, int l);

struct PerturbedVeronese {
  int l = 1, m = 1;
  mpq_class epsilon;
  std::uint64_t seed = 0;
  std::vector<HomogeneousPolynomial> forms;  // one per monomial, same order as veronese_embed

  ZVec apply(const ZVec& x) const;  // primitive image; may be all zero
};

// f_mu = Z^mu + epsilon * (random degree-l form).  Throws perturbation_rejected
// when the forms are linearly dependent or 20 fixed sample points do not have
// pairwise distinct images.
PerturbedVeronese perturb_veronese(int l, int m, std::uint64_t seed, const mpq_class& epsilon = mpq_class(1, 1000));
// Same checks on explicitly supplied noise forms.
PerturbedVeronese perturbed_forms(int l, int m, const mpq_class& epsilon, const std::vector<HomogeneousPolynomial>& noise);

// rows: X_0, sum_{a=1}^{M} beta^a X_a, X_2
struct LinearProjection {
  ZMat rows;  // 3 x (M+1)
  long beta = 0;
  int source_dim() const { return static_cast<int>(rows.cols()) - 1; }
};

// The first `count` betas, which must be distinct and positive (invalid_betas otherwise); M >= 3.
std::vector<LinearProjection> build_projections(int M, int count, const std::vector<long>& betas);

// Throws in_light_source when all three rows vanish on the point.
ProjectivePoint apply_projection(const ProjectivePoint& pt, const LinearProjection& pi);
ZVec apply_projection(const ZVec& x, const LinearProjection& pi);  // raw, may be zero

// det(beta_eta^a), a = 1..M, for M betas.
mpz_class nondegeneracy_determinant(const std::vector<long>& betas);

// C(4 delta0 + M, M): hyperplanes to try so that one meets the dual curve transversally.
mpz_class dual_degree_transversality_budget(const mpz_class& delta0, const mpz_class& M);

}  // namespace effbounds::geom
