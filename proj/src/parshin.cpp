#include "effbounds/parshin.hpp"

namespace effbounds {

namespace {

void check_g(const mpz_class& g) {
  if (g < 2) throw error(errc::invalid_params, "fibre genus must satisfy g >= 2, got g = " + g.get_str());
  // 2^(2g) must fit comfortably into an exponent
  if (g > 1000000) throw error(errc::capacity_exceeded, "fibre genus too large: " + g.get_str());
}

mpz_class pow2(const mpz_class& e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e.get_ui());
  return r;
}

mpz_class theta_value(const mpz_class& g) {
  check_g(g);
  const mpz_class four_g = pow2(2 * g);
  const mpz_class e2 = 2 * (1 + four_g * (g - 1));
  if (!e2.fits_ulong_p() || e2 > (1UL << 40)) throw error(errc::capacity_exceeded, "rho degree bound too large");
  return four_g * (four_g - 1) * pow2(e2) * 2;
}

}  // namespace

Magnitude g_prime(const mpz_class& g) {
  check_g(g);
  return Magnitude(mpz_class(2 + pow2(2 * g + 1) * (g - 1)));
}

Magnitude rho_degree_bound(const mpz_class& g) { return Magnitude(theta_value(g)); }

mpz_class parshin_C_value(const FamilyParams& p) {
  if (p.q < 0 || p.s < 0) throw error(errc::invalid_params, "q and s must be >= 0");
  const mpz_class theta = theta_value(p.g);
  return 1 + theta * (p.q - 1) + (theta - 1) * p.s;
}

Magnitude parshin_C(const FamilyParams& p) {
  const mpz_class c = parshin_C_value(p);
  if (c < 0)
    throw error(errc::nonpositive_genus, "C(g,q,s) = " + c.get_str() + " for " + to_string(p));
  return Magnitude(c);
}

Magnitude cover_count_bound(const mpz_class& q, const mpz_class& s, const Magnitude& theta,
                            const Context& ctx) {
  if (q < 0 || s < 0) throw error(errc::invalid_params, "q and s must be >= 0");
  if (theta.is_exact() && theta.value() < 1) throw error(errc::invalid_params, "theta must be >= 1");
  return multiply(Magnitude(mpz_class(2 * q + s)), factorial(theta, ctx), ctx);
}

CoverSum cover_sum_bound(const mpz_class& q, const mpz_class& s, const Magnitude& C, const Context& ctx) {
  if (q < 0 || s < 0) throw error(errc::invalid_params, "q and s must be >= 0");
  const mpz_class w = 2 * q + s;
  CoverSum r{multiply(Magnitude(w), factorial(add(C, 1, ctx), ctx), ctx), {}, {}, true};
  if (C.is_exact() && C.value() >= 0 && C.value() <= 8) {
    const unsigned long c = C.value().get_ui();
    mpz_class sum = 0, f = 1;
    for (unsigned long t = 1; t <= c; ++t) {
      f *= t;
      sum += w * f;
    }
    mpz_class cf;
    mpz_fac_ui(cf.get_mpz_t(), c);
    r.exact = sum;
    r.middle = mpz_class(c) * w * cf;
    r.chain_holds = sum <= *r.middle && *r.middle <= r.bound.value();
  }
  return r;
}

MordellResult evaluate_mordell(const FamilyParams& p, const MordellInjection& inject,
                               const PipelineOptions& opts, const Context& ctx) {
  check_g(p.g);
  if (p.q < 0 || p.s < 0) throw error(errc::invalid_params, "q and s must be >= 0");
  MordellResult r;
  r.params = p;
  Trace& t = r.trace;

  const Magnitude gp = inject.g_prime ? *inject.g_prime : g_prime(p.g);
  record(t, "g_prime", "g' <= 2 + 2^(2g+1)(g-1)", gp, inject.g_prime ? "injected (toy trace mode)" : "");
  const Magnitude theta = rho_degree_bound(p.g);
  TraceEntry& th = record(t, "rho_degree_bound", "2^(2g)(2^(2g)-1) * 2^(2(1+2^(2g)(g-1))) * 2", theta);
  {
    const mpz_class four_g = pow2(2 * p.g);
    th.children.push_back({"deg(B1 -> B)", "2^(2g)(2^(2g)-1)", Magnitude(mpz_class(four_g * (four_g - 1))), {}, {}});
    th.children.push_back({"deg(B2 -> B1)", "2^(2(1+2^(2g)(g-1)))",
                           Magnitude(pow2(2 * (1 + four_g * (p.g - 1)))), {}, {}});
    th.children.push_back({"deg(B3 -> B2)", "2", Magnitude(2), {}, {}});
  }
  const mpz_class cval = parshin_C_value(p);
  if (cval < 0)
    throw error(errc::nonpositive_genus, "C(g,q,s) = " + cval.get_str() + " for " + to_string(p));
  const Magnitude C(cval);
  record(t, "C(g,q,s)", "1 + Theta(q-1) + (Theta-1)s", C);
  if (cval == 0) r.diagnostics.push_back("C(g,q,s) = 0: the constructed base has nonpositive genus");

  Magnitude cover;
  if (inject.cover_sum) {
    cover = *inject.cover_sum;
    record(t, "cover_sum", "(2q+s)(C(g,q,s)+1)!", cover, "injected (toy trace mode)");
  } else {
    CoverSum cs = cover_sum_bound(p.q, p.s, C, ctx);
    cover = cs.bound;
    TraceEntry& e = record(t, "cover_sum", "(2q+s)(C(g,q,s)+1)!", cover);
    if (cs.exact) {
      e.children.push_back({"cover_sum (exact)", "sum_{theta=1}^{C} (2q+s) theta!", Magnitude(*cs.exact),
                            cs.chain_holds ? "chain holds" : "chain FAILS", {}});
      if (!cs.chain_holds) r.diagnostics.push_back("exact cover sum exceeds its bound");
    }
  }

  Magnitude S;
  if (inject.S) {
    S = *inject.S;
    record(t, "S(g')", "de Franchis-Severi count at g'", S, "injected (toy trace mode)");
  } else {
    if (!gp.is_exact()) throw error(errc::capacity_exceeded, "g' must be exact to evaluate S(g')");
    S = defranchis_severi_S(gp.value(), ctx);
    record(t, "S(g')", "de Franchis-Severi count at g'", S);
  }

  const mpz_class s_inner = theta.value() * p.s;
  Magnitude P;
  if (inject.P) {
    P = *inject.P;
    record(t, "P", "P(g', C(g,q,s), Theta s)", P, "injected (toy trace mode)");
  } else {
    if (cval <= 0)
      throw error(errc::inner_params_invalid,
                  "inner bound needs base genus C(g,q,s) >= 1, got " + cval.get_str() + " for " + to_string(p));
    if (!gp.is_exact()) throw error(errc::capacity_exceeded, "g' must be exact for the inner bound");
    const FamilyParams inner{gp.value(), cval, s_inner};
    if (cval < 2)
      r.diagnostics.push_back("C(g,q,s) = " + cval.get_str() + " < 2: inner bound takes the low-genus route");
    ShafarevichResult sr = evaluate_shafarevich_any(inner, opts, ctx);
    P = *sr.bound;
    TraceEntry& e = record(t, "P", "P(g', C(g,q,s), Theta s)", P, "inner params " + to_string(inner));
    e.children.push_back({"g' (inner g)", "2 + 2^(2g+1)(g-1)", gp, {}, {}});
    e.children.push_back({"q' (inner q)", "C(g,q,s)", C, {}, {}});
    e.children.push_back({"s' (inner s)", "Theta s", Magnitude(s_inner), {}, {}});
    for (TraceEntry& c : sr.trace) e.children.push_back(std::move(c));
    for (const std::string& d : sr.diagnostics) r.diagnostics.push_back("inner: " + d);
  }
  r.P = P;

  r.bound = multiply(multiply(multiply(S, P, ctx), gp, ctx), cover, ctx);
  record(t, "mordell bound", "S(g') P(g', C(g,q,s), Theta s) g' (2q+s)(C(g,q,s)+1)!", *r.bound);
  r.constants = ParshinConstants{gp, theta, C, cover, S};
  return r;
}

Magnitude mordell_bound(const FamilyParams& p, const Context& ctx) {
  return *evaluate_mordell(p, {}, {}, ctx).bound;
}

}  // namespace effbounds
