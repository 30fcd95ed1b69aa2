#pragma once

// Sparse (multi)homogeneous polynomials with rational coefficients.

#include <map>
#include <string>
#include <vector>

#include "effbounds/geometry/exact.hpp"

namespace effbounds::geom {

using Exponent = std::vector<int>;

// Exponent vectors of total degree `degree` in `nvars` variables, in
// lexicographically descending order: for (x, y, z) and degree 2 this is
// x^2, xy, xz, y^2, yz, z^2.
const std::vector<Exponent>& monomials(int nvars, int degree);

mpq_class monomial_value(const Exponent& e, const QVec& x);
mpz_class monomial_value(const Exponent& e, const ZVec& x);

class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial() = default;
  HomogeneousPolynomial(int nvars, int degree);
  // Variables split into consecutive blocks; degrees[j] is the degree in block j.
  HomogeneousPolynomial(std::vector<int> block_sizes, std::vector<int> degrees);

  // Adds c * x^e; throws shape_mismatch when e does not fit the (multi)degree.
  HomogeneousPolynomial& add_term(const Exponent& e, const mpq_class& c);

  int nvars() const { return nvars_; }
  int degree() const;
  const std::vector<int>& block_sizes() const { return blocks_; }
  const std::vector<int>& multidegree() const { return degrees_; }
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class evaluate(const QVec& x) const;
  mpz_class evaluate(const ZVec& x) const;  // integer coefficients only (after scaling)

  // Term list "{e0,e1,...}->num/den" joined by "; ", in exponent order.
  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::vector<int> blocks_, degrees_;
  std::map<Exponent, mpq_class> terms_;
};

HomogeneousPolynomial scaled(const HomogeneousPolynomial& f, const mpq_class& c);
HomogeneousPolynomial sum(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b);

// Random form of the given degree with coefficients drawn from rng.
HomogeneousPolynomial random_form(int nvars, int degree, Rng& rng, long num_bound = 9, long den_bound = 1);

}  // namespace effbounds::geom
