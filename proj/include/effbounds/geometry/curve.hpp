#pragma once

// Rational curves t -> [X_0(t), ..., X_n(t)] with rational coefficients.

#include <string>
#include <utility>
#include <vector>

#include "effbounds/geometry/projective.hpp"

namespace effbounds::geom {

struct ParameterizedCurve {
  // coords[i][j] is the coefficient of t^j in X_i
  std::vector<std::vector<mpq_class>> coords;

  int ambient() const { return static_cast<int>(coords.size()) - 1; }
  // Highest power of t present; the degree of the curve when the map is
  // birational and the coordinates share no root.
  int degree() const;
};

ParameterizedCurve make_curve(std::vector<std::vector<mpq_class>> coords);

QVec evaluate(const ParameterizedCurve& c, const mpq_class& t);
// Homogenized at [p : q] (t = p/q, q = 0 is the point at infinity), as a primitive integer vector.
ZVec evaluate_homogeneous(const ParameterizedCurve& c, const mpz_class& p, const mpz_class& q);

struct CurveSample {
  std::vector<ProjectivePoint> points;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;  // index pairs with equal images
};
// ts pairwise distinct; throws zero_vector when every coordinate vanishes at some t.
CurveSample sample_curve(const ParameterizedCurve& c, const std::vector<mpq_class>& ts);

// Coprime parameter pairs [p : q] ordered by height: [0:1], [1:0], [1:1], [-1:1], [2:1], ...
const std::vector<std::pair<mpz_class, mpz_class>>& parameter_pairs(std::size_t count);

// Whether pt is the image of some (possibly irrational or infinite) parameter.
// Exact: gcd of the 2x2 minors of [pt | c(t)] after removing base points.
bool lies_on(const ParameterizedCurve& c, const ZVec& pt);

// t -> (a t + b) / (c t + d), ad - bc != 0; describes the same point set.
ParameterizedCurve reparametrize(const ParameterizedCurve& c, long a, long b, long cc, long d);

// Random coordinates of degree <= deg (X_0 of exact degree deg), integer coefficients in [-bound, bound].
ParameterizedCurve random_curve(int ambient, int deg, Rng& rng, long bound = 4);

// Named test curves: "twisted-cubic" and "line" live in P^3, "conic" in P^2.
ParameterizedCurve named_curve(const std::string& name);

}  // namespace effbounds::geom
