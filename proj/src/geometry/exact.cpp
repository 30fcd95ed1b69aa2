#include "effbounds/geometry/exact.hpp"

namespace effbounds::geom {

QVec to_qvec(const std::vector<mpq_class>& v) {
  QVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

QVec to_qvec(const ZVec& v) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = mpq_class(v(i));
  return out;
}

ZVec primitive(const QVec& v) {
  mpz_class den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v(i).get_den_mpz_t());
  ZVec z(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) z(i) = v(i).get_num() * (den / v(i).get_den());
  return primitive(z);
}

ZVec primitive(const ZVec& v) {
  mpz_class g = 0;
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v(i).get_mpz_t());
    if (first < 0 && v(i) != 0) first = i;
  }
  ZVec out = v;
  if (first < 0) return out;
  if (v(first) < 0) g = -g;
  for (Eigen::Index i = 0; i < v.size(); ++i) mpz_divexact(out(i).get_mpz_t(), v(i).get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_zero(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

bool is_zero(const ZVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string to_string(const QVec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).get_str();
  }
  return s + "]";
}

std::string to_string(const ZVec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).get_str();
  }
  return s + "]";
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

mpq_class Rng::rational(long num_bound, long den_bound) {
  mpq_class q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

long Rng::nonzero(long bound) {
  const long v = uniform(1, bound);
  return (next() & 1) ? v : -v;
}

}  // namespace effbounds::geom
