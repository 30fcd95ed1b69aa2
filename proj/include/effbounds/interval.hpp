#pragma once

// MPFR-backed floats and closed intervals with outward rounding.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace effbounds {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_si(long v, mpfr_prec_t prec);
  static BigFloat from_z(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat from_q(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  // Accepts anything mpfr_strtofr does ("12.5", "1e30", "-inf"); throws on junk.
  static BigFloat from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat infinity(int sign, mpfr_prec_t prec);

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  BigFloat rounded(mpfr_prec_t prec, mpfr_rnd_t rnd) const;
  bool is_inf() const noexcept { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  // Decimal text with at most `digits` significant digits, rounded in `rnd`.
  // Integers come out without a fractional part; very large or small values
  // switch to scientific notation.
  std::string decimal(int digits, mpfr_rnd_t rnd) const;

 private:
  mpfr_t v_;
};

int cmp(const BigFloat& a, const BigFloat& b) noexcept;
inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
int cmp_si(const BigFloat& a, long b) noexcept;

struct Interval {
  BigFloat lo;
  BigFloat hi;

  Interval() = default;
  Interval(BigFloat l, BigFloat h) : lo(std::move(l)), hi(std::move(h)) {}

  static Interval point_z(const mpz_class& v, mpfr_prec_t prec);
  static Interval point_q(const mpq_class& v, mpfr_prec_t prec);
  static Interval point_si(long v, mpfr_prec_t prec);

  bool contains(const BigFloat& x) const { return lo <= x && x <= hi; }
  bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  BigFloat width(mpfr_prec_t prec) const;
  Interval widened_to(mpfr_prec_t prec) const;  // outward re-rounding
};

// Outward-rounded interval operations. `prec` is the result precision.
namespace iv {

Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval div_pos(const Interval& a, const Interval& b, mpfr_prec_t prec);  // b > 0
Interval log(const Interval& a, mpfr_prec_t prec);    // extended: nonpositive maps to -inf
Interval log10(const Interval& a, mpfr_prec_t prec);  // extended, as above
Interval exp10(const Interval& a, mpfr_prec_t prec);
Interval sqrt(const Interval& a, mpfr_prec_t prec);
Interval pow_ui(const Interval& a, unsigned long e, mpfr_prec_t prec);  // a >= 0
Interval pi(mpfr_prec_t prec);
Interval ln10(mpfr_prec_t prec);
Interval log10_2(mpfr_prec_t prec);
Interval log10_e(mpfr_prec_t prec);
Interval hull(const Interval& a, const Interval& b, mpfr_prec_t prec);

}  // namespace iv

}  // namespace effbounds
