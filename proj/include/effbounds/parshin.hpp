#pragma once

// Mordell-type bound assembled from the Shafarevich bound through the
// branched-cover counting constants.

#include <optional>
#include <string>
#include <vector>

#include "effbounds/constants.hpp"

namespace effbounds {

// 2 + 2^(2g+1)(g-1)
Magnitude g_prime(const mpz_class& g);
// 2^(2g)(2^(2g)-1) * 2^(2(1+2^(2g)(g-1))) * 2
Magnitude rho_degree_bound(const mpz_class& g);
// 1 + Theta(q-1) + (Theta-1)s, may be <= 0 for q = 0 (returned as a signed integer)
mpz_class parshin_C_value(const FamilyParams& p);
// Same as a Magnitude; throws nonpositive_genus when negative, 0 is returned as is.
Magnitude parshin_C(const FamilyParams& p);

// (2q+s) theta!
Magnitude cover_count_bound(const mpz_class& q, const mpz_class& s, const Magnitude& theta,
                            const Context& ctx = {});

struct CoverSum {
  Magnitude bound;                  // (2q+s)(C+1)!
  std::optional<mpz_class> exact;   // sum_{theta=1}^{C} (2q+s) theta!, for C <= 8
  std::optional<mpz_class> middle;  // C (2q+s) C!
  bool chain_holds = true;
};
CoverSum cover_sum_bound(const mpz_class& q, const mpz_class& s, const Magnitude& C, const Context& ctx = {});

struct MordellInjection {
  std::optional<Magnitude> S, P, g_prime, cover_sum;
  bool any() const { return S || P || g_prime || cover_sum; }
};

struct ParshinConstants {
  Magnitude g_prime, theta_bound, C_gqs, cover_sum, S_of_gprime;
};

struct MordellResult {
  FamilyParams params;
  std::optional<ParshinConstants> constants;
  std::optional<Magnitude> P, bound;
  Trace trace;
  std::vector<std::string> diagnostics;
};

// S(g') P(g', C, Theta s) g' (2q+s)(C+1)!
MordellResult evaluate_mordell(const FamilyParams& p, const MordellInjection& inject = {},
                               const PipelineOptions& opts = {}, const Context& ctx = {});
Magnitude mordell_bound(const FamilyParams& p, const Context& ctx = {});

}  // namespace effbounds
