#include "effbounds/magnitude.hpp"

#include <algorithm>
#include <cmath>

namespace effbounds {

namespace {

using BF = BigFloat;

void ensure_range() {
  thread_local const bool done = [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    return true;
  }();
  (void)done;
}

std::uint64_t threshold(const Context& ctx) {
  return std::max<std::uint64_t>(ctx.exact_threshold_bits, 64);
}

std::uint64_t bitlen(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

double log2_of(const mpz_class& z) {
  if (sgn(z) <= 0) return 0.0;
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log2(m) + static_cast<double>(e);
}

BF exp10_iter(BF x, int n, mpfr_rnd_t rnd, mpfr_prec_t wp) {
  for (int i = 0; i < n; ++i) {
    BF y(wp);
    mpfr_exp10(y.get(), x.get(), rnd);
    x = std::move(y);
  }
  return x;
}

BF add_r(const BF& a, const BF& b, mpfr_rnd_t rnd, mpfr_prec_t wp) {
  BF r(wp);
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

const BF& max_bf(const BF& a, const BF& b) { return a < b ? b : a; }

// Bound on log10^j(Z * 10^c) when log10^j(Z) = w, rounded in `dir`.
// Monotone in w and c, so callers pass the matching endpoints.
BF shift_level(int j, const BF& w, const BF& c, mpfr_rnd_t dir, mpfr_prec_t wp) {
  if (j == 0) {
    BF t(wp);
    mpfr_exp10(t.get(), c.get(), dir);
    BF r(wp);
    mpfr_mul(r.get(), w.get(), t.get(), dir);
    return r;
  }
  BF ww = w;
  if (dir == MPFR_RNDU) {
    if (ww.sign() < 0) ww = BF::from_si(0, wp);
  } else if (ww.is_inf() && ww.sign() < 0) {
    return ww;
  }
  if (j == 1) return add_r(ww, c, dir, wp);
  if (c.is_zero()) return ww;
  const bool c_pos = c.sign() > 0;
  const mpfr_rnd_t zr = ((dir == MPFR_RNDU) == c_pos) ? MPFR_RNDD : MPFR_RNDU;
  const BF z = exp10_iter(ww, j - 1, zr, wp);
  BF q(wp);
  mpfr_div(q.get(), c.get(), z.get(), dir);
  BF t(wp);
  mpfr_add_ui(t.get(), q.get(), 1, dir);
  if (t.sign() <= 0) return BF::infinity(-1, wp);
  BF cc(wp);
  mpfr_log10(cc.get(), t.get(), dir);
  return shift_level(j - 1, ww, cc, dir, wp);
}

// log10(10^a + 10^b), rounded in `rnd`.
BF log_sum(const BF& a, const BF& b, mpfr_rnd_t rnd, mpfr_prec_t wp) {
  if (a.is_inf() && a.sign() < 0) return b;
  if (b.is_inf() && b.sign() < 0) return a;
  const BF& mx = max_bf(a, b);
  const BF& mn = (&mx == &a) ? b : a;
  BF t(wp);
  mpfr_sub(t.get(), mn.get(), mx.get(), rnd);
  mpfr_exp10(t.get(), t.get(), rnd);
  mpfr_add_ui(t.get(), t.get(), 1, rnd);
  mpfr_log10(t.get(), t.get(), rnd);
  return add_r(mx, t, rnd, wp);
}

// Enclosure of log10^j(x + y) from enclosures of log10^j x and log10^j y.
Interval add_level(int j, const Interval& x, const Interval& y, mpfr_prec_t wp) {
  if (j == 0) return iv::add(x, y, wp);
  if (j == 1) return {log_sum(x.lo, y.lo, MPFR_RNDD, wp), log_sum(x.hi, y.hi, MPFR_RNDU, wp)};
  const Interval l2 = iv::log10_2(wp);
  return {max_bf(x.lo, y.lo).rounded(wp, MPFR_RNDD),
          shift_level(j, max_bf(x.hi, y.hi), l2.hi, MPFR_RNDU, wp)};
}

// Enclosure of log10^j(x * y); both factors >= 1 when j >= 1.
Interval mul_level(int j, const Interval& x, const Interval& y, mpfr_prec_t wp) {
  if (j == 0) return iv::mul(x, y, wp);
  return add_level(j - 1, x, y, wp);
}

// Enclosure of log10^H(a) (H = 0 is the value itself).
Interval lift(const Magnitude& a, int H, mpfr_prec_t wp) {
  Interval x;
  int h = 0;
  if (a.is_exact()) {
    x = Interval::point_z(a.value(), wp);
  } else {
    h = a.height();
    x = a.body().widened_to(std::max(wp, a.body().lo.precision()));
  }
  while (h < H) {
    x = iv::log10(x, wp);
    ++h;
  }
  while (h > H) {
    x = iv::exp10(x, wp);
    if (x.hi.is_inf()) throw error(errc::capacity_exceeded, "tower too tall to lower to the requested height");
    --h;
  }
  return x;
}

Magnitude make_tower(int h, Interval body, const Context& ctx) {
  ensure_range();
  const mpfr_prec_t wp = std::max(ctx.working_bits(), body.lo.precision());
  if (h < 1) throw error(errc::invalid_magnitude, "tower height must be at least 1");
  if (body.lo.is_nan() || body.hi.is_nan()) throw error(errc::invalid_magnitude, "NaN tower body");
  if (body.hi.is_inf() && body.hi.sign() > 0)
    throw error(errc::capacity_exceeded, "tower body overflowed at height " + std::to_string(h));
  if (body.lo > body.hi) throw error(errc::invalid_magnitude, "tower body has lo > hi");
  while (h >= 2 && cmp_si(body.lo, 1) < 0) {
    body = iv::exp10(body, wp);
    if (body.hi.is_inf()) throw error(errc::capacity_exceeded, "renormalizing a tower overflowed");
    --h;
  }
  if (h == 1 && cmp_si(body.lo, 1) < 0)
    throw error(errc::invalid_magnitude, "height-1 tower body must be >= 1");
  const mpfr_prec_t bp = ctx.body_bits();
  return Magnitude::tower(h, body.widened_to(bp), Context{ctx.exact_threshold_bits, ctx.precision_digits});
}

bool certainly_at_least_ten(const Magnitude& a) { return !a.is_exact() || a.value() >= 10; }

}  // namespace

mpfr_prec_t Context::body_bits() const {
  if (precision_digits < 1) throw error(errc::invalid_params, "precision digits must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(precision_digits * 3.3219280948873623));
}

const char* ordering_name(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Greater: return "Greater";
    case Ordering::Equal: return "Equal";
    case Ordering::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

Magnitude::Magnitude(long v) : Magnitude(mpz_class(v)) {}

Magnitude::Magnitude(mpz_class v) : rep_(std::move(v)) {
  if (sgn(std::get<mpz_class>(rep_)) < 0) throw error(errc::invalid_magnitude, "negative value");
}

Magnitude Magnitude::tower(int height, Interval body, const Context& ctx) {
  ensure_range();
  const mpfr_prec_t bp = ctx.body_bits();
  // already-normalized bodies at body precision are stored directly
  if (height >= 1 && !body.lo.is_nan() && !body.hi.is_nan() && body.lo <= body.hi &&
      cmp_si(body.lo, 1) >= 0 && !body.hi.is_inf() && body.lo.precision() == bp &&
      body.hi.precision() == bp) {
    Magnitude m;
    m.rep_ = TowerRep{height, std::move(body)};
    return m;
  }
  return make_tower(height, std::move(body), ctx);
}

Magnitude Magnitude::tower(int height, const std::string& lo, const std::string& hi, const Context& ctx) {
  ensure_range();
  const mpfr_prec_t wp = ctx.working_bits();
  return make_tower(height,
                    {BF::from_string(lo, wp, MPFR_RNDD), BF::from_string(hi, wp, MPFR_RNDU)}, ctx);
}

const mpz_class& Magnitude::value() const {
  if (!is_exact()) throw error(errc::invalid_magnitude, "value() on a tower");
  return std::get<mpz_class>(rep_);
}

int Magnitude::height() const noexcept {
  return is_exact() ? 0 : std::get<TowerRep>(rep_).height;
}

const Interval& Magnitude::body() const {
  if (is_exact()) throw error(errc::invalid_magnitude, "body() on an exact value");
  return std::get<TowerRep>(rep_).body;
}

Magnitude multiply(const Magnitude& a, const Magnitude& b, const Context& ctx) {
  ensure_range();
  if (a.is_zero() || b.is_zero()) return Magnitude(0);
  if (a.is_exactly(1)) return b;
  if (b.is_exactly(1)) return a;
  if (a.is_exact() && b.is_exact() && bitlen(a.value()) + bitlen(b.value()) <= threshold(ctx))
    return Magnitude(mpz_class(a.value() * b.value()));
  const int H = std::max({a.height(), b.height(), 1});
  const mpfr_prec_t wp = ctx.working_bits();
  return make_tower(H, mul_level(H, lift(a, H, wp), lift(b, H, wp), wp), ctx);
}

Magnitude add(const Magnitude& a, const Magnitude& b, const Context& ctx) {
  ensure_range();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_exact() && b.is_exact() &&
      std::max(bitlen(a.value()), bitlen(b.value())) + 1 <= threshold(ctx))
    return Magnitude(mpz_class(a.value() + b.value()));
  const int H = std::max({a.height(), b.height(), 1});
  const mpfr_prec_t wp = ctx.working_bits();
  return make_tower(H, add_level(H, lift(a, H, wp), lift(b, H, wp), wp), ctx);
}

Magnitude power(const Magnitude& base, const Magnitude& exp, const Context& ctx) {
  ensure_range();
  if (exp.is_zero()) return Magnitude(1);
  if (base.is_zero()) return Magnitude(0);
  if (base.is_exactly(1)) return Magnitude(1);
  if (exp.is_exactly(1)) return base;
  if (base.is_exact() && exp.is_exact() && exp.value().fits_ulong_p()) {
    const double bits = static_cast<double>(bitlen(base.value())) * exp.value().get_d();
    if (bits <= static_cast<double>(threshold(ctx))) {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exp.value().get_ui());
      return Magnitude(std::move(r));
    }
  }
  const int H = std::max({base.height(), exp.height() + 1, 1});
  const mpfr_prec_t wp = ctx.working_bits();
  // log10^H(a^e) = log10^(H-1)(e * log10 a)
  if (H == 1)
    return make_tower(1, mul_level(0, lift(exp, 0, wp), lift(base, 1, wp), wp), ctx);
  const Interval e = lift(exp, H - 1, wp);
  if (H == 2 || certainly_at_least_ten(base))
    return make_tower(H, add_level(H - 2, e, lift(base, H, wp), wp), ctx);
  // small base with a tall exponent: scale e by the factor log10 a < 1
  const Interval c = lift(base, 2, wp);
  return make_tower(H,
                    {shift_level(H - 1, e.lo, c.lo, MPFR_RNDD, wp),
                     shift_level(H - 1, e.hi, c.hi, MPFR_RNDU, wp)},
                    ctx);
}

namespace {

// log10 n! for n >= 0 at precision wp.
Interval lf(const mpz_class& n, mpfr_prec_t wp) {
  if (n < 64) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n.get_ui());
    return iv::log10(Interval::point_z(f, wp), wp);
  }
  // Stirling series with eight correction terms; the error is bounded by the
  // first omitted term.
  static const long bnum[9] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867};
  static const long bden[9] = {6, 30, 42, 30, 66, 2730, 6, 510, 798};
  const Interval N = Interval::point_z(n, wp);
  const Interval half = Interval::point_q(mpq_class(1, 2), wp);
  Interval s = iv::mul(iv::add(N, half, wp), iv::log(N, wp), wp);
  s = iv::sub(s, N, wp);
  const Interval two_pi = iv::mul(Interval::point_si(2, wp), iv::pi(wp), wp);
  s = iv::add(s, iv::mul(half, iv::log(two_pi, wp), wp), wp);
  const Interval n2 = iv::mul(N, N, wp);
  Interval npow = N;
  for (int i = 1; i <= 8; ++i) {
    const long k = 2 * i;
    const mpq_class coef(mpz_class(bnum[i - 1]), mpz_class(bden[i - 1] * k * (k - 1)));
    s = iv::add(s, iv::div_pos(Interval::point_q(coef, wp), npow, wp), wp);
    npow = iv::mul(npow, n2, wp);
  }
  const mpq_class rem_coef(mpz_class(bnum[8]), mpz_class(bden[8] * 18 * 17));
  const Interval rem = iv::div_pos(Interval::point_q(rem_coef, wp), npow, wp);
  mpfr_sub(s.lo.get(), s.lo.get(), rem.hi.get(), MPFR_RNDD);
  mpfr_add(s.hi.get(), s.hi.get(), rem.hi.get(), MPFR_RNDU);
  return iv::div_pos(s, iv::ln10(wp), wp);
}

}  // namespace

Interval log10_factorial_enclosure(const mpz_class& n, const Context& ctx) {
  ensure_range();
  if (n < 0) throw error(errc::invalid_params, "factorial of a negative number");
  const mpfr_prec_t wp = ctx.working_bits() + static_cast<mpfr_prec_t>(bitlen(n)) + 32;
  return lf(n, wp).widened_to(ctx.working_bits());
}

Interval log10_binomial_enclosure(const mpz_class& n, const mpz_class& k, const Context& ctx) {
  ensure_range();
  if (k < 0 || k > n) throw error(errc::order_violation, "binomial needs 0 <= k <= n");
  const mpz_class kk = std::min(k, mpz_class(n - k));
  const mpfr_prec_t out = ctx.working_bits();
  if (kk == 0) return Interval::point_si(0, out);
  const mpfr_prec_t wp = out + static_cast<mpfr_prec_t>(bitlen(n)) + 32;
  Interval r = iv::sub(lf(n, wp), lf(mpz_class(n - kk), wp), wp);
  r = iv::sub(r, lf(kk, wp), wp);
  return r.widened_to(out);
}

Magnitude factorial(const Magnitude& n, const Context& ctx) {
  ensure_range();
  const mpfr_prec_t wp = ctx.working_bits();
  if (n.is_exact()) {
    const mpz_class& v = n.value();
    if (v <= 20) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), v.get_ui());
      return Magnitude(std::move(f));
    }
    if (v.fits_ulong_p() && v.get_d() * log2_of(v) <= static_cast<double>(threshold(ctx))) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), v.get_ui());
      return Magnitude(std::move(f));
    }
    return make_tower(1, log10_factorial_enclosure(v, ctx), ctx);
  }
  // (n/e)^n <= n! <= n^n, and log10 n - log10 e >= (log10 n) / 2 for towers
  const int h = n.height();
  const Interval prod = mul_level(h, lift(n, h, wp), lift(n, h + 1, wp), wp);
  const Interval l2 = iv::log10_2(wp);
  BF neg(wp);
  mpfr_neg(neg.get(), l2.hi.get(), MPFR_RNDD);
  return make_tower(h + 1, {shift_level(h, prod.lo, neg, MPFR_RNDD, wp), prod.hi}, ctx);
}

Ordering compare(const Magnitude& a, const Magnitude& b, const Context& ctx) {
  ensure_range();
  if (a.is_exact() && b.is_exact()) {
    const int c = cmp(a.value(), b.value());
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
  }
  const int H = std::max(a.height(), b.height());
  const mpfr_prec_t wp = ctx.working_bits();
  const Interval x = lift(a, H, wp);
  const Interval y = lift(b, H, wp);
  if (x.hi < y.lo) return Ordering::Less;
  if (x.lo > y.hi) return Ordering::Greater;
  return Ordering::Indeterminate;
}

bool consistent(const Magnitude& a, const Magnitude& b, const Context& ctx) {
  const Ordering o = compare(a, b, ctx);
  return o == Ordering::Equal || o == Ordering::Indeterminate;
}

Magnitude max_of(const Magnitude& a, const Magnitude& b, const Context& ctx) {
  switch (compare(a, b, ctx)) {
    case Ordering::Less: return b;
    case Ordering::Greater:
    case Ordering::Equal: return a;
    case Ordering::Indeterminate: break;
  }
  const int H = std::max(a.height(), b.height());
  const mpfr_prec_t wp = ctx.working_bits();
  const Interval x = lift(a, H, wp);
  const Interval y = lift(b, H, wp);
  return make_tower(H, {max_bf(x.lo, y.lo), max_bf(x.hi, y.hi)}, ctx);
}

Magnitude binomial(const Magnitude& n, const Magnitude& k, const Context& ctx) {
  ensure_range();
  if (n.is_exact() && k.is_exact()) {
    const mpz_class& nv = n.value();
    const mpz_class& kv = k.value();
    if (kv > nv) throw error(errc::order_violation, "binomial with k > n");
    const mpz_class kk = std::min(kv, mpz_class(nv - kv));
    if (kk == 0) return Magnitude(1);
    if (kk == 1) return n;
    const double kd = kk.get_d();
    const double bits = kd * (log2_of(nv) - log2_of(kk) + 1.4426950408889634);
    if (kk.fits_ulong_p() && bits <= static_cast<double>(threshold(ctx))) {
      mpz_class r;
      mpz_bin_ui(r.get_mpz_t(), nv.get_mpz_t(), kk.get_ui());
      return Magnitude(std::move(r));
    }
    return make_tower(1, log10_binomial_enclosure(nv, kk, ctx), ctx);
  }

  switch (compare(k, n, ctx)) {
    case Ordering::Greater: throw error(errc::order_violation, "binomial with k > n");
    case Ordering::Indeterminate:
      throw error(errc::indeterminate_order, "cannot certify k <= n for binomial");
    default: break;
  }
  if (k.is_zero()) return Magnitude(1);
  if (k.is_exactly(1)) return n;

  const int H = std::max(n.height(), k.height()) + 1;
  const mpfr_prec_t wp = ctx.working_bits();
  // C(n,k) <= n^k and C(n,k) <= 2^n
  BF hi = lift(power(n, k, ctx), H, wp).hi;
  const BF hi2 = lift(power(Magnitude(2), n, ctx), H, wp).hi;
  if (hi2 < hi) hi = hi2;
  // 1 <= k < n gives C(n,k) >= n
  BF lo = lift(n, H, wp).lo;
  if (k.is_exact() && !n.is_exact()) {
    // (n/k)^k
    const int hn = n.height();
    const Interval lk = iv::log10(Interval::point_z(k.value(), wp), wp);
    BF neg(wp);
    mpfr_neg(neg.get(), lk.hi.get(), MPFR_RNDD);
    const BF ratio = shift_level(hn, n.body().lo, neg, MPFR_RNDD, wp);
    if (cmp_si(ratio, 1) >= 0) {
      const Interval r1 = iv::log10(Interval{ratio, ratio}, wp);
      const BF cand = mul_level(hn, lift(k, hn, wp), r1, wp).lo;
      if (cand > lo) lo = cand;
    }
  }
  if (compare(n, multiply(Magnitude(2), k, ctx), ctx) == Ordering::Greater) {
    const BF cand = lift(power(Magnitude(2), k, ctx), H, wp).lo;
    if (cand > lo) lo = cand;
  }
  return make_tower(H, {lo, hi}, ctx);
}

Magnitude binomial_ratio_bound(const Magnitude& k, const Magnitude& rho_lo, const Magnitude& rho_hi,
                               const Context& ctx) {
  ensure_range();
  if (k.is_zero()) return Magnitude(1);
  if (compare(rho_lo, Magnitude(1), ctx) == Ordering::Less)
    throw error(errc::invalid_params, "binomial ratio bound needs rho >= 1");
  if (compare(rho_lo, rho_hi, ctx) == Ordering::Greater)
    throw error(errc::order_violation, "ratio interval has lo > hi");
  const Magnitude low = power(rho_lo, k, ctx);
  const int H = std::max({k.height(), rho_hi.height(), low.height() - 1}) + 1;
  const mpfr_prec_t wp = ctx.working_bits();
  const Interval le = iv::log10_e(wp);
  // u bounds log10(e * rho_hi) from above, at level 1 or via a shift for towers
  BF upper(wp);
  const Interval kl = lift(k, H - 1, wp);
  if (rho_hi.height() <= 1) {
    BF u = add_r(lift(rho_hi, 1, wp).hi, le.hi, MPFR_RNDU, wp);
    if (cmp_si(u, 1) < 0) {
      upper = kl.hi;
    } else {
      Interval ui{u, u};
      for (int i = 0; i < H - 1; ++i) ui = iv::log10(ui, wp);
      upper = mul_level(H - 1, kl, ui, wp).hi;
    }
  } else {
    // log10 rho >= 10 here, so log10(rho) + log10(e) <= log10(rho) * (1 + log10(e)/10)
    BF t(wp);
    mpfr_div_ui(t.get(), le.hi.get(), 10, MPFR_RNDU);
    mpfr_add_ui(t.get(), t.get(), 1, MPFR_RNDU);
    mpfr_log10(t.get(), t.get(), MPFR_RNDU);
    const BF w = shift_level(H - 1, lift(rho_hi, H, wp).hi, t, MPFR_RNDU, wp);
    upper = mul_level(H - 1, kl, Interval{w, w}, wp).hi;
  }
  BF lower = lift(low, H, wp).lo;
  if (lower > upper) lower = upper;
  return make_tower(H, {lower, upper}, ctx);
}

Magnitude subtract_exact(const Magnitude& a, const mpz_class& c, const Context& ctx) {
  ensure_range();
  if (c < 0) throw error(errc::invalid_params, "subtrahend must be nonnegative");
  if (c == 0) return a;
  if (a.is_exact()) {
    if (a.value() < c) throw error(errc::order_violation, "subtraction would go negative");
    return Magnitude(mpz_class(a.value() - c));
  }
  const int h = a.height();
  const mpfr_prec_t wp = ctx.working_bits();
  const BF z = exp10_iter(a.body().lo.rounded(wp, MPFR_RNDD), h, MPFR_RNDD, wp);
  BF q(wp);
  mpfr_set_z(q.get(), c.get_mpz_t(), MPFR_RNDU);
  mpfr_div(q.get(), q.get(), z.get(), MPFR_RNDU);
  BF t(wp);
  mpfr_ui_sub(t.get(), 1, q.get(), MPFR_RNDD);
  if (t.sign() <= 0) throw error(errc::indeterminate_order, "cannot certify a > c in subtraction");
  mpfr_log10(t.get(), t.get(), MPFR_RNDD);
  return make_tower(h, {shift_level(h, a.body().lo, t, MPFR_RNDD, wp), a.body().hi}, ctx);
}

Interval log10_enclosure(const Magnitude& a, int depth, const Context& ctx) {
  ensure_range();
  if (depth < 1) throw error(errc::invalid_params, "log depth must be at least 1");
  if (a.is_zero()) throw error(errc::depth_exceeds_value, "log10 of zero");
  const mpfr_prec_t wp = ctx.working_bits();
  Interval x;
  int h = 0;
  if (a.is_exact()) {
    x = Interval::point_z(a.value(), std::max<mpfr_prec_t>(wp, bitlen(a.value()) + 8));
  } else {
    h = a.height();
    x = a.body().widened_to(wp);
  }
  while (h < depth) {
    if (x.hi.sign() <= 0)
      throw error(errc::depth_exceeds_value,
                  "iterated log undefined at stage " + std::to_string(h + 1));
    x = iv::log10(x, wp);
    ++h;
  }
  while (h > depth) {
    x = iv::exp10(x, wp);
    if (x.hi.is_inf()) throw error(errc::capacity_exceeded, "cannot lower tower to depth");
    --h;
  }
  return x.widened_to(wp);
}

Magnitude normalize(const Magnitude& a, const Context& ctx) {
  if (a.is_exact()) return a;
  return make_tower(a.height(), a.body(), ctx);
}

std::string render(const Magnitude& a, const Context& ctx) {
  if (a.is_exact()) {
    const std::string s = a.value().get_str();
    if (s.size() <= 80) return s;
    return std::to_string(s.size()) + " digits, leading 20 digits " + s.substr(0, 20) + "…";
  }
  const int d = ctx.precision_digits;
  std::string out;
  for (int i = 0; i < a.height(); ++i) out += "10^(";
  out += "[" + a.body().lo.decimal(d, MPFR_RNDD) + ", " + a.body().hi.decimal(d, MPFR_RNDU) + "]";
  out += std::string(static_cast<size_t>(a.height()), ')');
  return out;
}

nlohmann::json to_json(const Magnitude& a, const Context& ctx) {
  if (a.is_exact()) return {{"kind", "exact"}, {"value", a.value().get_str()}};
  const int d = ctx.precision_digits;
  return {{"kind", "tower"},
          {"height", a.height()},
          {"lo", a.body().lo.decimal(d, MPFR_RNDD)},
          {"hi", a.body().hi.decimal(d, MPFR_RNDU)}};
}

Magnitude magnitude_from_json(const nlohmann::json& j, const Context& ctx) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact") return Magnitude(mpz_class(j.at("value").get<std::string>()));
  if (kind == "tower")
    return Magnitude::tower(j.at("height").get<int>(), j.at("lo").get<std::string>(),
                            j.at("hi").get<std::string>(), ctx);
  throw error(errc::invalid_magnitude, "unknown magnitude kind '" + kind + "'");
}

bool identical(const Magnitude& a, const Magnitude& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.value() == b.value();
  return a.height() == b.height() && a.body().lo == b.body().lo && a.body().hi == b.body().hi;
}

}  // namespace effbounds
