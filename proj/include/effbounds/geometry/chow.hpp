#pragma once

// Plane curves from points: nullspace recovery, the signed-minor vector, and
// the projected-curve pipeline P^m -> (Veronese) -> P^M -> P^2.

#include <optional>
#include <string>
#include <vector>

#include "effbounds/geometry/curve.hpp"
#include "effbounds/geometry/projection.hpp"

namespace effbounds::geom {

// Coefficients of a degree-d plane curve over monomials(3, d), primitive.
struct PlaneChowPoint {
  int degree = 0;
  ZVec coeffs;

  bool contains(const ZVec& pt) const;
  bool contains(const ProjectivePoint& pt) const { return contains(pt.integer_coords()); }
  std::string to_string() const;
};
bool operator==(const PlaneChowPoint& a, const PlaneChowPoint& b);  // same degree, proportional

// Rows are the degree-d monomials evaluated at each point.
ZMat monomial_matrix(const std::vector<ZVec>& pts, int d);

// Unique degree-d curve through the (pairwise distinct) points.
// ambiguous_curve when the nullspace has dimension > 1, no_curve when it is trivial.
PlaneChowPoint recover_plane_curve(const std::vector<ProjectivePoint>& pts, int d);
PlaneChowPoint recover_plane_curve(const std::vector<ZVec>& pts, int d);

// Dimension of the space of degree-d curves through the points.
int curve_space_dimension(const std::vector<ZVec>& pts, int d);

// Moving points (each a curve t -> P^2, at least C(d+2,2) - 1 of them; the
// first C(d+2,2) - 1 are used) evaluated at t0.  Entry alpha is
// (-1)^(k_alpha - 1) times the determinant with column alpha removed, k_alpha
// the 1-based position of alpha.  degenerate_subsystem when every minor vanishes.
ZVec chow_determinant_vector(const std::vector<ParameterizedCurve>& moving_points, int d, const mpq_class& t0);

struct ProjectedChow {
  PlaneChowPoint chow;
  int expected_degree = 0;   // l * deg(c)
  int recovered_degree = 0;  // degree of the reduced image curve
  std::optional<int> multiplicity;  // expected / recovered when integral
  std::size_t samples = 0;          // distinct image points used
  std::size_t light_source_hits = 0;
  std::vector<std::string> diagnostics;
};

// Samples the curve, maps through the (perturbed) Veronese of degree l and
// the projection, and recovers the image curve.  image_is_point when the
// samples all coincide.
ProjectedChow project_curve_to_plane_chow(const ParameterizedCurve& c, int l, const LinearProjection& pi,
                                          const PerturbedVeronese* forms = nullptr);

struct MatchResult {
  bool match = true;
  int distinguished_at = 0;  // 1-based projection index, 0 on a match
  std::vector<int> degrees1, degrees2;
};
// forms, when given, replace the exact Veronese map for both curves.  Without
// them, every curve in a plane through the line X_0 = X_2 = 0 (which holds all
// the projection centres when l = 1) projects to the same line for every nu.
MatchResult match_via_projections(const ParameterizedCurve& c1, const ParameterizedCurve& c2,
                                  const std::vector<LinearProjection>& pis, int l,
                                  const PerturbedVeronese* forms = nullptr);

enum class ImageKind { Curve, Point, Undefined };
const char* image_kind_name(ImageKind k);

struct ImageCheck {
  ImageKind kind = ImageKind::Undefined;
  std::size_t defined_samples = 0;
  std::optional<int> degree;  // recovered image degree, when the image is a curve
  bool degree_matches = false;  // degree == l * deg(c)
};
ImageCheck image_dimension_check(const HomogeneousPolynomial& f0, const HomogeneousPolynomial& f1,
                                 const HomogeneousPolynomial& f2, const ParameterizedCurve& c,
                                 std::size_t sample_count);

// Irreducible degree-d plane curve F_{d-1}(x,y) z + F_d(x,y) moved by a random
// projective transformation, with rational points from the lines through its
// (d-1)-fold point.
struct MonoidCurve {
  PlaneChowPoint equation;
  std::vector<ZVec> points;  // pairwise distinct smooth points
};
MonoidCurve random_monoid_curve(int d, std::size_t npoints, Rng& rng);

// Sylvester resultant of two binary forms given by coefficient lists (index = power of x).
mpz_class binary_resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g);

}  // namespace effbounds::geom
