#pragma once

// Exact scalars for the geometry engine.  Eigen matrices are used as
// containers over GMP rationals and integers; every arithmetic kernel is
// written out explicitly so no floating point is involved.

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace effbounds::geom {

using QVec = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using ZVec = Eigen::Matrix<mpz_class, Eigen::Dynamic, 1>;
using ZMat = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;

QVec to_qvec(const std::vector<mpq_class>& v);
QVec to_qvec(const ZVec& v);

// Scale by the lcm of denominators and divide out the content; the sign of
// the first nonzero entry is made positive.  Zero stays zero.
ZVec primitive(const QVec& v);
ZVec primitive(const ZVec& v);

bool is_zero(const QVec& v);
bool is_zero(const ZVec& v);

std::string to_string(const mpq_class& q);
std::string to_string(const QVec& v);  // "[a, b/c, ...]"
std::string to_string(const ZVec& v);

// Seeded generator with portable draws (raw modulo, no library distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  long uniform(long lo, long hi);                     // inclusive
  mpq_class rational(long num_bound, long den_bound);  // num in [-nb, nb], den in [1, db]
  long nonzero(long bound);                           // in [-b, b] \ {0}

 private:
  std::mt19937_64 gen_;
};

}  // namespace effbounds::geom
