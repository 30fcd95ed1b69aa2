#include "effbounds/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace effbounds {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_si(long v, mpfr_prec_t prec) {
  BigFloat r(std::max<mpfr_prec_t>(prec, 64));
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_z(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_q(const mpq_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, rnd);
  if (s.empty() || end == nullptr || *end != '\0' || r.is_nan())
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return r;
}

BigFloat BigFloat::infinity(int sign, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.v_, sign);
  return r;
}

BigFloat BigFloat::rounded(mpfr_prec_t prec, mpfr_rnd_t rnd) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, rnd);
  return r;
}

std::string BigFloat::decimal(int digits, mpfr_rnd_t rnd) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(digits, 2)), v_, rnd);
  std::string d(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!d.empty() && d[0] == '-') {
    sign_str = "-";
    d.erase(0, 1);
  }
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  const long n = static_cast<long>(d.size());
  std::string out;
  if (e > 0 && e <= 40) {
    if (n <= e) {
      out = d + std::string(static_cast<size_t>(e - n), '0');
    } else {
      out = d.substr(0, static_cast<size_t>(e)) + "." + d.substr(static_cast<size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + d;
  } else {
    out = d.substr(0, 1);
    if (n > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return sign_str + out;
}

int cmp(const BigFloat& a, const BigFloat& b) noexcept { return mpfr_cmp(a.get(), b.get()); }
int cmp_si(const BigFloat& a, long b) noexcept { return mpfr_cmp_si(a.get(), b); }

Interval Interval::point_z(const mpz_class& v, mpfr_prec_t prec) {
  return {BigFloat::from_z(v, prec, MPFR_RNDD), BigFloat::from_z(v, prec, MPFR_RNDU)};
}

Interval Interval::point_q(const mpq_class& v, mpfr_prec_t prec) {
  return {BigFloat::from_q(v, prec, MPFR_RNDD), BigFloat::from_q(v, prec, MPFR_RNDU)};
}

Interval Interval::point_si(long v, mpfr_prec_t prec) {
  return {BigFloat::from_si(v, prec), BigFloat::from_si(v, prec)};
}

BigFloat Interval::width(mpfr_prec_t prec) const {
  BigFloat w(prec);
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w;
}

Interval Interval::widened_to(mpfr_prec_t prec) const {
  return {lo.rounded(prec, MPFR_RNDD), hi.rounded(prec, MPFR_RNDU)};
}

namespace iv {

namespace {

using unary_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Monotone increasing unary map applied endpoint-wise.
Interval monotone(const Interval& a, unary_fn f, mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  f(r.lo.get(), a.lo.get(), MPFR_RNDD);
  f(r.hi.get(), a.hi.get(), MPFR_RNDU);
  return r;
}

BigFloat ext_log_point(const BigFloat& x, unary_fn f, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (x.sign() <= 0) {
    mpfr_set_inf(r.get(), -1);
  } else {
    f(r.get(), x.get(), rnd);
  }
  return r;
}

}  // namespace

Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}

Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  if (a.lo.sign() >= 0 && b.lo.sign() >= 0) {
    Interval r{BigFloat(prec), BigFloat(prec)};
    mpfr_mul(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_mul(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
  }
  const BigFloat* xs[2] = {&a.lo, &a.hi};
  const BigFloat* ys[2] = {&b.lo, &b.hi};
  Interval r{BigFloat::infinity(1, prec), BigFloat::infinity(-1, prec)};
  BigFloat t(prec);
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (t < r.lo) r.lo = t;
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (t > r.hi) r.hi = t;
    }
  }
  return r;
}

Interval div_pos(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  // dividing by the larger endpoint shrinks a positive numerator, the smaller grows it
  mpfr_div(r.lo.get(), a.lo.get(), a.lo.sign() >= 0 ? b.hi.get() : b.lo.get(), MPFR_RNDD);
  mpfr_div(r.hi.get(), a.hi.get(), a.hi.sign() >= 0 ? b.lo.get() : b.hi.get(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& a, mpfr_prec_t prec) {
  return {ext_log_point(a.lo, mpfr_log, MPFR_RNDD, prec), ext_log_point(a.hi, mpfr_log, MPFR_RNDU, prec)};
}

Interval log10(const Interval& a, mpfr_prec_t prec) {
  return {ext_log_point(a.lo, mpfr_log10, MPFR_RNDD, prec),
          ext_log_point(a.hi, mpfr_log10, MPFR_RNDU, prec)};
}

Interval exp10(const Interval& a, mpfr_prec_t prec) { return monotone(a, mpfr_exp10, prec); }

Interval sqrt(const Interval& a, mpfr_prec_t prec) { return monotone(a, mpfr_sqrt, prec); }

Interval pow_ui(const Interval& a, unsigned long e, mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_pow_ui(r.lo.get(), a.lo.get(), e, MPFR_RNDD);
  mpfr_pow_ui(r.hi.get(), a.hi.get(), e, MPFR_RNDU);
  return r;
}

Interval pi(mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_const_pi(r.lo.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi.get(), MPFR_RNDU);
  return r;
}

Interval ln10(mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_log_ui(r.lo.get(), 10, MPFR_RNDD);
  mpfr_log_ui(r.hi.get(), 10, MPFR_RNDU);
  return r;
}

Interval log10_2(mpfr_prec_t prec) {
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_set_ui(r.lo.get(), 2, MPFR_RNDN);
  mpfr_set_ui(r.hi.get(), 2, MPFR_RNDN);
  mpfr_log10(r.lo.get(), r.lo.get(), MPFR_RNDD);
  mpfr_log10(r.hi.get(), r.hi.get(), MPFR_RNDU);
  return r;
}

Interval log10_e(mpfr_prec_t prec) {
  Interval l = ln10(prec + 8);
  Interval r{BigFloat(prec), BigFloat(prec)};
  mpfr_ui_div(r.lo.get(), 1, l.hi.get(), MPFR_RNDD);
  mpfr_ui_div(r.hi.get(), 1, l.lo.get(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  return {(a.lo < b.lo ? a.lo : b.lo).rounded(prec, MPFR_RNDD),
          (a.hi > b.hi ? a.hi : b.hi).rounded(prec, MPFR_RNDU)};
}

}  // namespace iv

}  // namespace effbounds
