#include "effbounds/geometry/projective.hpp"

#include "effbounds/error.hpp"

namespace effbounds::geom {

ProjectivePoint::ProjectivePoint(QVec coords) : coords_(std::move(coords)) {
  if (coords_.size() == 0 || is_zero(coords_)) throw error(errc::zero_vector, "all coordinates vanish");
}

ProjectivePoint::ProjectivePoint(const ZVec& coords) : ProjectivePoint(to_qvec(coords)) {}

ProjectivePoint::ProjectivePoint(std::initializer_list<mpq_class> coords)
    : ProjectivePoint(to_qvec(std::vector<mpq_class>(coords))) {}

ProjectivePoint ProjectivePoint::normalized() const {
  Eigen::Index f = 0;
  while (coords_(f) == 0) ++f;
  QVec out = coords_;
  const mpq_class lead = coords_(f);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= lead;
  return ProjectivePoint(std::move(out));
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const { return projectively_equal(coords_, o.coords_); }

namespace {

template <class V>
bool proj_eq(const V& a, const V& b) {
  if (a.size() != b.size()) return false;
  Eigen::Index f = 0;
  while (f < a.size() && a(f) == 0) ++f;
  if (f == a.size()) return is_zero(b);
  if (b(f) == 0) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) * b(f) != b(i) * a(f)) return false;
  return true;
}

}  // namespace

bool projectively_equal(const ZVec& a, const ZVec& b) { return proj_eq(a, b); }
bool projectively_equal(const QVec& a, const QVec& b) { return proj_eq(a, b); }

}  // namespace effbounds::geom
