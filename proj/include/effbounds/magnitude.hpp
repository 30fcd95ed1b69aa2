#pragma once

// Certified nonnegative numbers: exact big integers, or iterated-log10
// enclosures Tower(h, [lo, hi]) meaning lo <= log10^h(v) <= hi.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "effbounds/error.hpp"
#include "effbounds/interval.hpp"
#include "json.hpp"

namespace effbounds {

struct Context {
  // results predicted to need more bits than this leave the exact representation
  std::uint64_t exact_threshold_bits = std::uint64_t{1} << 24;
  // significant decimal digits carried by tower bodies
  int precision_digits = 30;

  mpfr_prec_t body_bits() const;
  mpfr_prec_t working_bits() const { return body_bits() + 64; }
};

enum class Ordering { Less, Greater, Equal, Indeterminate };
const char* ordering_name(Ordering o) noexcept;

class Magnitude {
 public:
  Magnitude() : rep_(mpz_class(0)) {}
  Magnitude(long v);  // NOLINT: small literals read naturally
  explicit Magnitude(mpz_class v);

  // Builds and normalizes a tower; throws invalid_magnitude on a malformed body.
  static Magnitude tower(int height, Interval body, const Context& ctx = {});
  static Magnitude tower(int height, const std::string& lo, const std::string& hi,
                         const Context& ctx = {});

  bool is_exact() const noexcept { return std::holds_alternative<mpz_class>(rep_); }
  const mpz_class& value() const;  // exact only
  int height() const noexcept;     // 0 for exact values
  const Interval& body() const;    // tower only

  bool is_zero() const noexcept { return is_exact() && sgn(std::get<mpz_class>(rep_)) == 0; }
  bool is_exactly(long v) const noexcept { return is_exact() && std::get<mpz_class>(rep_) == v; }

 private:
  struct TowerRep {
    int height;
    Interval body;
  };
  std::variant<mpz_class, TowerRep> rep_;
};

Magnitude multiply(const Magnitude& a, const Magnitude& b, const Context& ctx = {});
Magnitude add(const Magnitude& a, const Magnitude& b, const Context& ctx = {});
// 0^0 is taken to be 1.
Magnitude power(const Magnitude& base, const Magnitude& exp, const Context& ctx = {});
Magnitude factorial(const Magnitude& n, const Context& ctx = {});
Magnitude binomial(const Magnitude& n, const Magnitude& k, const Context& ctx = {});
// a - c for a small exact c; needs a > c to be certifiable.
Magnitude subtract_exact(const Magnitude& a, const mpz_class& c, const Context& ctx = {});
Magnitude max_of(const Magnitude& a, const Magnitude& b, const Context& ctx = {});

// C(n, k) where only the ratio n/k in [rho_lo, rho_hi] (rho_lo >= 1) is known:
// rho_lo^k <= C(n, k) <= (e * rho_hi)^k.
Magnitude binomial_ratio_bound(const Magnitude& k, const Magnitude& rho_lo, const Magnitude& rho_hi,
                               const Context& ctx = {});

Ordering compare(const Magnitude& a, const Magnitude& b, const Context& ctx = {});
// Equal exact values, or enclosures that overlap at a common height.
bool consistent(const Magnitude& a, const Magnitude& b, const Context& ctx = {});
Interval log10_enclosure(const Magnitude& a, int depth, const Context& ctx = {});

// Enclosure of log10 C(n, k) and log10 n!, independent of the exactness threshold.
Interval log10_binomial_enclosure(const mpz_class& n, const mpz_class& k, const Context& ctx = {});
Interval log10_factorial_enclosure(const mpz_class& n, const Context& ctx = {});

// Re-applies height normalization; idempotent.
Magnitude normalize(const Magnitude& a, const Context& ctx = {});

std::string render(const Magnitude& a, const Context& ctx = {});
nlohmann::json to_json(const Magnitude& a, const Context& ctx = {});
Magnitude magnitude_from_json(const nlohmann::json& j, const Context& ctx = {});

// Structural equality: same kind, same value or same height and body.
bool identical(const Magnitude& a, const Magnitude& b);

}  // namespace effbounds
