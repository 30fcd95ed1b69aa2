#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "effbounds/geometry/exact.hpp"

namespace effbounds::geom {

// Point of P^n given by n+1 rationals, not all zero.  Equality is up to scale.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(QVec coords);  // throws zero_vector
  explicit ProjectivePoint(const ZVec& coords);
  ProjectivePoint(std::initializer_list<mpq_class> coords);

  const QVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }

  // First nonzero coordinate scaled to 1; idempotent.
  ProjectivePoint normalized() const;
  // Primitive integer representative, first nonzero coordinate positive.
  ZVec integer_coords() const { return primitive(coords_); }

  bool operator==(const ProjectivePoint& o) const;
  bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

  std::string to_string() const { return geom::to_string(coords_); }

 private:
  QVec coords_;
};

bool projectively_equal(const ZVec& a, const ZVec& b);
bool projectively_equal(const QVec& a, const QVec& b);

}  // namespace effbounds::geom
