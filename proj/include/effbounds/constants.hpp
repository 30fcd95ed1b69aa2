#pragma once

// Effective constants of the Shafarevich-type finiteness bound for
// nonisotrivial families of genus-g curves over a genus-q base with
// s degenerate fibres.

#include <optional>
#include <string>
#include <vector>

#include "effbounds/magnitude.hpp"
#include "effbounds/trace.hpp"

namespace effbounds {

struct FamilyParams {
  mpz_class g;  // fibre genus, >= 2
  mpz_class q;  // base genus, >= 0
  mpz_class s;  // number of degenerate fibres, >= 0
};

std::string to_string(const FamilyParams& p);

// Toy trace mode: any field set here replaces the computed value, so the
// assembly formulas can be exercised exactly on small numbers.
struct Injection {
  std::optional<Magnitude> m, d, l, M, delta0, N, gqs, Q, D, A;
  bool any() const;
};

struct PipelineOptions {
  Injection inject;
  // Extra integer factor for D; 1 keeps D as derived from the section degrees.
  mpz_class d_extra_factor = 1;
};

struct DerivedConstants {
  std::optional<Magnitude> m, d, l, M, delta0, N, gqs, choose_ld2, Q, D, A;
  Trace trace;
  std::vector<std::string> diagnostics;
};

// m, d, l, M, delta0 = l d, N, gq+s and C(ld+2, 2).  Needs g >= 2, q >= 2, s >= 0.
DerivedConstants derive_base(const FamilyParams& p, const PipelineOptions& opts = {},
                             const Context& ctx = {});

// Q = ld M C(4ld+M, M), evaluated through the symmetric C(4ld+M, 4ld).
Magnitude compute_Q(DerivedConstants& c, const PipelineOptions& opts = {}, const Context& ctx = {});
// D = (C(ld+2,2) - 1) l^2 d 500 N (gq+s)
Magnitude compute_D(DerivedConstants& c, const PipelineOptions& opts = {}, const Context& ctx = {});
// A = C(ld+2, 2)^Q
Magnitude compute_A(DerivedConstants& c, const PipelineOptions& opts = {}, const Context& ctx = {});
// 6(q-1) + Q D
Magnitude graph_degree_bound(const FamilyParams& p, DerivedConstants& c, const Context& ctx = {});

// Number of irreducible components of the Chow variety of k-cycles of degree
// delta2 inside a variety of degree delta1 in P^n:
//   C((n+1) max(delta1, delta2), n)^((n+1)(delta2 C(delta2+k-1, k) + C(delta2+k-1, k-1)))
Magnitude chow_components_bound(const Magnitude& n, const Magnitude& delta1, const Magnitude& delta2,
                                unsigned long k, const Context& ctx = {});
Magnitude chow_components_exponent(const Magnitude& n, const Magnitude& delta2, unsigned long k,
                                   const Context& ctx = {});

struct ShafarevichResult {
  FamilyParams params;
  DerivedConstants constants;
  std::optional<Magnitude> graph_bound, ambient_dim, direct, assembled, bound, S;
  bool forms_agree = false;
  bool low_genus = false;
  Trace trace;
  std::vector<std::string> diagnostics;
};

// q >= 2 only.  `direct` evaluates the closed product, `assembled` goes through
// chow_components_bound; `bound` is the direct form.
ShafarevichResult evaluate_shafarevich(const FamilyParams& p, const PipelineOptions& opts = {},
                                       const Context& ctx = {});
Magnitude shafarevich_bound(const FamilyParams& p, const PipelineOptions& opts = {},
                            const Context& ctx = {});

// q in {0, 1}: S(g) times the bound for (g, 2, 2s).
ShafarevichResult evaluate_shafarevich_low_genus(const FamilyParams& p, const PipelineOptions& opts = {},
                                                 const Context& ctx = {});
Magnitude shafarevich_bound_low_genus(const FamilyParams& p, const PipelineOptions& opts = {},
                                      const Context& ctx = {});

// Either branch, chosen by q.
ShafarevichResult evaluate_shafarevich_any(const FamilyParams& p, const PipelineOptions& opts = {},
                                           const Context& ctx = {});

// Integer upper bound (ceiling) on the de Franchis-Severi count
//   42(g-1)(1/2 (2 sqrt6 (g-1) + 1)^(2+2g^2) g^2 (g-1) sqrt2^(g(g-1)) + 1).
Magnitude defranchis_severi_S(const mpz_class& g, const Context& ctx = {});

struct KollarBound {
  Magnitude power_exponent;  // (m+1) l^2 d - m
  Magnitude rank_bound;      // C((m+1) l^2 d, m)
  Magnitude degree_bound;    // max(Q, rank bound)
  Ordering q_vs_rank = Ordering::Indeterminate;
};
KollarBound kollar_degree_bound(DerivedConstants& c, const Context& ctx = {});

struct FamilySectionBounds {
  Magnitude sections;              // N
  Magnitude q_prime_bound;         // 100 N^2 (gq+s)
  Magnitude tau_degree_bound;      // 200 N^2 (gq+s)
  Magnitude kx_degree_bound;       // 100 N (gq+s)
  Magnitude section_degree_bound;  // 500 N (gq+s)
};
FamilySectionBounds parshin_family_constants(DerivedConstants& c, const Context& ctx = {});

struct ClemensThreshold {
  mpq_class threshold;  // (2g-2)/delta + 4m - 4
  bool applicable;      // l = 4m-3 reaches it
};
// g >= 0 is accepted so rational test curves can be checked too.
ClemensThreshold clemens_threshold(const mpz_class& g, const mpz_class& delta, const mpz_class& m);

}  // namespace effbounds
