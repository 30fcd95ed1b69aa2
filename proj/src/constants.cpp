#include "effbounds/constants.hpp"

#include <cmath>
#include <functional>

namespace effbounds {

namespace {

const char* const kInjected = "injected (toy trace mode)";

Magnitude mz(const mpz_class& v) { return Magnitude(v); }

// Takes the injected value when present, else the computed one, and records it.
Magnitude settle(Trace& t, const std::optional<Magnitude>& injected, const std::string& name,
                 const std::string& citation, const std::function<Magnitude()>& compute) {
  if (injected) {
    record(t, name, citation, *injected, kInjected);
    return *injected;
  }
  Magnitude v = compute();
  record(t, name, citation, v);
  return v;
}

const Magnitude& need(const std::optional<Magnitude>& v, const char* what) {
  if (!v) throw error(errc::invalid_params, std::string("constant ") + what + " has not been derived yet");
  return *v;
}

void check_family(const FamilyParams& p) {
  if (p.g < 2) throw error(errc::invalid_params, "fibre genus must satisfy g >= 2, got g = " + p.g.get_str());
  if (p.q < 0) throw error(errc::invalid_params, "base genus must satisfy q >= 0, got q = " + p.q.get_str());
  if (p.s < 0) throw error(errc::invalid_params, "s must be >= 0, got s = " + p.s.get_str());
}

}  // namespace

std::string to_string(const FamilyParams& p) {
  return "(g=" + p.g.get_str() + ", q=" + p.q.get_str() + ", s=" + p.s.get_str() + ")";
}

bool Injection::any() const {
  return m || d || l || M || delta0 || N || gqs || Q || D || A;
}

DerivedConstants derive_base(const FamilyParams& p, const PipelineOptions& opts, const Context& ctx) {
  check_family(p);
  if (p.q < 2)
    throw error(errc::invalid_params,
                "this bound needs base genus q >= 2, got q = " + p.q.get_str() +
                    " (q in {0, 1} goes through the low-genus bound)");
  const Injection& in = opts.inject;
  DerivedConstants c;
  Trace& t = c.trace;
  c.gqs = settle(t, in.gqs, "gq+s", "gq + s", [&] { return mz(p.g * p.q + p.s); });
  c.m = settle(t, in.m, "m", "m = 1250(gq+s)", [&] { return multiply(1250, *c.gqs, ctx); });
  c.d = settle(t, in.d, "d", "d = 5(2g-2)", [&] { return mz(5 * (2 * p.g - 2)); });
  c.l = settle(t, in.l, "l", "l = 4m-3",
               [&] { return subtract_exact(multiply(4, *c.m, ctx), 3, ctx); });
  c.delta0 = settle(t, in.delta0, "delta0", "delta0 = ld", [&] { return multiply(*c.l, *c.d, ctx); });
  c.N = settle(t, in.N, "N", "N = (ld)^2 + 1",
               [&] { return add(multiply(*c.delta0, *c.delta0, ctx), 1, ctx); });
  c.choose_ld2 = binomial(add(*c.delta0, 2, ctx), 2, ctx);
  record(t, "C(ld+2,2)", "C(ld+2, 2)", *c.choose_ld2);
  c.M = settle(t, in.M, "M", "M = C(l+m, m) - 1",
               [&] { return subtract_exact(binomial(add(*c.l, *c.m, ctx), *c.m, ctx), 1, ctx); });
  return c;
}

Magnitude compute_Q(DerivedConstants& c, const PipelineOptions& opts, const Context& ctx) {
  const Injection& in = opts.inject;
  const Magnitude& ld = need(c.delta0, "delta0");
  const Magnitude& M = need(c.M, "M");
  auto lemma_form = [&](const Magnitude& MM) {
    const Magnitude four_ld = multiply(4, ld, ctx);
    const Magnitude choose = binomial(add(four_ld, MM, ctx), four_ld, ctx);
    return multiply(multiply(ld, MM, ctx), choose, ctx);
  };
  c.Q = settle(c.trace, in.Q, "Q", "Q = ld M C(4ld+M, M)", [&] { return lemma_form(M); });
  if (!in.Q && !in.M && !in.l && c.m) {
    // the closed statement writes M as C(5m-3, m) - 1; recompute from m
    const Magnitude& m = need(c.m, "m");
    const Magnitude five_m = subtract_exact(multiply(5, m, ctx), 3, ctx);
    const Magnitude M_closed = subtract_exact(binomial(five_m, m, ctx), 1, ctx);
    const Magnitude Q_closed = lemma_form(M_closed);
    const bool agree = consistent(*c.Q, Q_closed, ctx);
    TraceEntry& e = c.trace.back();
    e.children.push_back({"Q (closed form)",
                          "Q = ld (C(5m-3, m) - 1) C(4ld + C(5m-3, m) - 1, C(5m-3, m) - 1)", Q_closed,
                          agree ? "agrees with Q" : "DISAGREES with Q", {}});
    if (!agree) c.diagnostics.push_back("the two evaluations of Q do not overlap");
  }
  return *c.Q;
}

Magnitude compute_D(DerivedConstants& c, const PipelineOptions& opts, const Context& ctx) {
  const Injection& in = opts.inject;
  c.D = settle(c.trace, in.D, "D", "D = (C(ld+2,2) - 1) l^2 d 500 N (gq+s)", [&] {
    const Magnitude& l = need(c.l, "l");
    Magnitude v = subtract_exact(need(c.choose_ld2, "C(ld+2,2)"), 1, ctx);
    v = multiply(v, multiply(l, l, ctx), ctx);
    v = multiply(v, need(c.d, "d"), ctx);
    v = multiply(v, 500, ctx);
    v = multiply(v, need(c.N, "N"), ctx);
    v = multiply(v, need(c.gqs, "gq+s"), ctx);
    return multiply(v, mz(opts.d_extra_factor), ctx);
  });
  if (!in.D)
    c.trace.back().note =
        opts.d_extra_factor == 1
            ? "the closed statement carries a further factor k; it is taken as 1"
            : "includes the extra factor k = " + opts.d_extra_factor.get_str();
  return *c.D;
}

Magnitude compute_A(DerivedConstants& c, const PipelineOptions& opts, const Context& ctx) {
  c.A = settle(c.trace, opts.inject.A, "A", "A = C(ld+2, 2)^Q", [&] {
    return power(need(c.choose_ld2, "C(ld+2,2)"), need(c.Q, "Q"), ctx);
  });
  return *c.A;
}

Magnitude graph_degree_bound(const FamilyParams& p, DerivedConstants& c, const Context& ctx) {
  const Magnitude G = add(mz(6 * (p.q - 1)), multiply(need(c.Q, "Q"), need(c.D, "D"), ctx), ctx);
  record(c.trace, "graph degree bound", "6(q-1) + Q D", G);
  return G;
}

Magnitude chow_components_exponent(const Magnitude& n, const Magnitude& delta2, unsigned long k,
                                   const Context& ctx) {
  if (k < 1) throw error(errc::invalid_params, "Chow component bound needs k >= 1");
  const Magnitude top = add(delta2, Magnitude(mpz_class(k - 1)), ctx);
  const Magnitude b_k = binomial(top, Magnitude(mpz_class(k)), ctx);
  const Magnitude b_km1 = binomial(top, Magnitude(mpz_class(k - 1)), ctx);
  return multiply(add(n, 1, ctx), add(multiply(delta2, b_k, ctx), b_km1, ctx), ctx);
}

Magnitude chow_components_bound(const Magnitude& n, const Magnitude& delta1, const Magnitude& delta2,
                                unsigned long k, const Context& ctx) {
  const Magnitude exponent = chow_components_exponent(n, delta2, k, ctx);
  const Magnitude mx = max_of(delta1, delta2, ctx);
  const Magnitude top = multiply(add(n, 1, ctx), mx, ctx);
  Magnitude base;
  if (top.is_exact() && n.is_exact()) {
    base = binomial(top, n, ctx);
  } else {
    // (n+1) mx / n lies in [mx, 2 mx]
    base = binomial_ratio_bound(n, mx, multiply(2, mx, ctx), ctx);
  }
  return power(base, exponent, ctx);
}

ShafarevichResult evaluate_shafarevich(const FamilyParams& p, const PipelineOptions& opts,
                                       const Context& ctx) {
  ShafarevichResult r;
  r.params = p;
  r.constants = derive_base(p, opts, ctx);
  DerivedConstants& c = r.constants;
  compute_Q(c, opts, ctx);
  compute_D(c, opts, ctx);
  compute_A(c, opts, ctx);
  const Magnitude G = graph_degree_bound(p, c, ctx);
  r.graph_bound = G;

  const Magnitude K = multiply(mz(5 * (p.q - 1)), *c.A, ctx);
  const Magnitude n = subtract_exact(K, 1, ctx);
  r.ambient_dim = n;
  record(c.trace, "ambient dimension", "n = 5(q-1)A - 1", n);

  // closed product
  const Magnitude KG = multiply(K, G, ctx);
  const Magnitude choose = (KG.is_exact() && n.is_exact())
                               ? binomial(KG, n, ctx)
                               : binomial_ratio_bound(n, G, multiply(2, G, ctx), ctx);
  record(c.trace, "component binomial", "C(5(q-1)A (6(q-1)+QD), 5(q-1)A - 1)", choose);
  const Magnitude exponent = multiply(K, add(multiply(G, G, ctx), 1, ctx), ctx);
  record(c.trace, "component exponent", "5(q-1)A ((6(q-1)+QD)^2 + 1)", exponent);
  r.direct = multiply(G, power(choose, exponent, ctx), ctx);

  // graph bound times the Chow component count
  const Magnitude chow = chow_components_bound(n, *c.Q, G, 1, ctx);
  record(c.trace, "Chow component count", "C((n+1) max(Q, G), n)^((n+1)(G C(G, 1) + C(G, 0)))", chow);
  r.assembled = multiply(G, chow, ctx);

  r.forms_agree = consistent(*r.direct, *r.assembled, ctx);
  r.bound = r.direct;
  TraceEntry& e = record(c.trace, "shafarevich bound",
                         "(6(q-1)+QD) C(5(q-1)A (6(q-1)+QD), 5(q-1)A - 1)^(5(q-1)A((6(q-1)+QD)^2+1))",
                         *r.direct, r.forms_agree ? "assembled form agrees" : "assembled form DISAGREES");
  e.children.push_back({"shafarevich bound (assembled)", "graph degree bound x Chow component count",
                        *r.assembled, {}, {}});
  if (!r.forms_agree) c.diagnostics.push_back("direct and assembled bounds do not overlap");
  r.trace = c.trace;
  r.diagnostics = c.diagnostics;
  return r;
}

Magnitude shafarevich_bound(const FamilyParams& p, const PipelineOptions& opts, const Context& ctx) {
  return *evaluate_shafarevich(p, opts, ctx).bound;
}

ShafarevichResult evaluate_shafarevich_low_genus(const FamilyParams& p, const PipelineOptions& opts,
                                                 const Context& ctx) {
  check_family(p);
  if (p.q > 1)
    throw error(errc::invalid_params, "low-genus bound is for q in {0, 1}, got q = " + p.q.get_str());
  const FamilyParams rerouted{p.g, 2, 2 * p.s};
  ShafarevichResult inner = evaluate_shafarevich(rerouted, opts, ctx);
  const Magnitude S = defranchis_severi_S(p.g, ctx);

  ShafarevichResult r;
  r.params = p;
  r.low_genus = true;
  r.constants = inner.constants;
  r.graph_bound = inner.graph_bound;
  r.ambient_dim = inner.ambient_dim;
  r.S = S;
  r.direct = multiply(S, *inner.direct, ctx);
  r.assembled = multiply(S, *inner.assembled, ctx);
  r.forms_agree = inner.forms_agree && consistent(*r.direct, *r.assembled, ctx);
  r.bound = r.direct;
  record(r.trace, "q (rerouted)", "q replaced by 2", 2, "base genus " + p.q.get_str() + " < 2");
  record(r.trace, "s (rerouted)", "s replaced by 2s", mz(2 * p.s));
  TraceEntry& in = record(r.trace, "shafarevich bound (rerouted)", "bound for " + to_string(rerouted),
                          *inner.bound);
  in.children = inner.trace;
  record(r.trace, "S(g)", "42(g-1)(1/2 (2 sqrt6 (g-1) + 1)^(2+2g^2) g^2 (g-1) sqrt2^(g(g-1)) + 1), ceiling",
         S);
  record(r.trace, "shafarevich bound", "S(g) x bound for (g, 2, 2s)", *r.bound,
         r.forms_agree ? "assembled form agrees" : "assembled form DISAGREES");
  r.diagnostics = inner.diagnostics;
  r.diagnostics.push_back("q = " + p.q.get_str() + ": q replaced by 2 and s by 2s, multiplied by S(g)");
  return r;
}

Magnitude shafarevich_bound_low_genus(const FamilyParams& p, const PipelineOptions& opts,
                                      const Context& ctx) {
  return *evaluate_shafarevich_low_genus(p, opts, ctx).bound;
}

ShafarevichResult evaluate_shafarevich_any(const FamilyParams& p, const PipelineOptions& opts,
                                           const Context& ctx) {
  check_family(p);
  return p.q <= 1 ? evaluate_shafarevich_low_genus(p, opts, ctx) : evaluate_shafarevich(p, opts, ctx);
}

Magnitude defranchis_severi_S(const mpz_class& g_in, const Context& ctx) {
  if (g_in < 2) throw error(errc::invalid_params, "S(g) needs g >= 2, got g = " + g_in.get_str());
  if (!g_in.fits_ulong_p() || g_in > 3000000000UL)
    throw error(errc::capacity_exceeded, "genus too large for S(g)");
  const unsigned long g = g_in.get_ui();
  const unsigned long e = 2 + 2 * g * g;
  const unsigned long half_pow2 = g * (g - 1) / 2;  // sqrt2^(g(g-1)) = 2^half_pow2
  const double gd = static_cast<double>(g);
  const double bits = std::log2(42.0 * (gd - 1)) +
                      static_cast<double>(e) * std::log2(2 * std::sqrt(6.0) * (gd - 1) + 1) +
                      std::log2(gd * gd * (gd - 1)) + static_cast<double>(half_pow2);
  // small exact integer factor 42(g-1) and g^2(g-1)/2 * 2^half_pow2
  const mpz_class gm1 = g_in - 1;
  mpz_class scale = g_in * g_in * gm1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), half_pow2);

  auto x_interval = [&](mpfr_prec_t prec) {
    Interval r6 = iv::sqrt(Interval::point_si(6, prec), prec);
    Interval x = iv::mul(r6, Interval::point_z(mpz_class(2 * gm1), prec), prec);
    return iv::add(x, Interval::point_si(1, prec), prec);
  };

  if (bits + 64 > static_cast<double>(std::max<std::uint64_t>(ctx.exact_threshold_bits, 64))) {
    const mpfr_prec_t wp = ctx.working_bits() + 64;
    Interval inner = iv::mul(Interval::point_si(static_cast<long>(e), wp), iv::log10(x_interval(wp), wp), wp);
    inner = iv::add(inner, iv::log10(Interval::point_q(mpq_class(scale, 2), wp), wp), wp);
    // log10(y + 1) <= log10 y + 1/y for y >= 1
    BigFloat y(wp);
    mpfr_neg(y.get(), inner.lo.get(), MPFR_RNDU);
    mpfr_exp10(y.get(), y.get(), MPFR_RNDU);
    mpfr_add(inner.hi.get(), inner.hi.get(), y.get(), MPFR_RNDU);
    const Interval total = iv::add(inner, iv::log10(Interval::point_z(mpz_class(42 * gm1), wp), wp), wp);
    return Magnitude::tower(1, total, ctx);
  }

  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 96;
  mpz_class lo_ceil, hi_ceil;
  for (int attempt = 0; attempt < 6; ++attempt, prec *= 2) {
    Interval v = iv::pow_ui(x_interval(prec), e, prec);
    v = iv::mul(v, Interval::point_z(scale, prec), prec);
    v = iv::div_pos(v, Interval::point_si(2, prec), prec);
    v = iv::add(v, Interval::point_si(1, prec), prec);
    v = iv::mul(v, Interval::point_z(mpz_class(42 * gm1), prec), prec);
    mpfr_get_z(lo_ceil.get_mpz_t(), v.lo.get(), MPFR_RNDU);
    mpfr_get_z(hi_ceil.get_mpz_t(), v.hi.get(), MPFR_RNDU);
    if (lo_ceil == hi_ceil) break;
  }
  // hi_ceil is an upper bound either way
  return Magnitude(hi_ceil);
}

KollarBound kollar_degree_bound(DerivedConstants& c, const Context& ctx) {
  const Magnitude& m = need(c.m, "m");
  const Magnitude& l = need(c.l, "l");
  const Magnitude& d = need(c.d, "d");
  if (!m.is_exact()) throw error(errc::capacity_exceeded, "m must be exact for the rank bound");
  const Magnitude top = multiply(multiply(add(m, 1, ctx), multiply(l, l, ctx), ctx), d, ctx);
  KollarBound k{subtract_exact(top, m.value(), ctx), binomial(top, m, ctx), Magnitude(0),
                Ordering::Indeterminate};
  record(c.trace, "power exponent", "(m+1) l^2 d - m", k.power_exponent);
  record(c.trace, "rank bound", "C((m+1) l^2 d, m)", k.rank_bound);
  if (c.Q) {
    k.q_vs_rank = compare(*c.Q, k.rank_bound, ctx);
    k.degree_bound = max_of(*c.Q, k.rank_bound, ctx);
    std::string note = std::string("compare(Q, rank bound) = ") + ordering_name(k.q_vs_rank);
    if (k.q_vs_rank == Ordering::Greater) note += "; the maximum is Q";
    record(c.trace, "equation degree bound", "max(Q, C((m+1) l^2 d, m))", k.degree_bound, note);
    if (k.q_vs_rank == Ordering::Indeterminate) c.diagnostics.push_back("Q vs rank bound is indeterminate");
  }
  return k;
}

FamilySectionBounds parshin_family_constants(DerivedConstants& c, const Context& ctx) {
  const Magnitude& N = need(c.N, "N");
  const Magnitude& gqs = need(c.gqs, "gq+s");
  const Magnitude N2gqs = multiply(multiply(N, N, ctx), gqs, ctx);
  const Magnitude Ngqs = multiply(N, gqs, ctx);
  FamilySectionBounds b{N, multiply(100, N2gqs, ctx), multiply(200, N2gqs, ctx), multiply(100, Ngqs, ctx),
                        multiply(500, Ngqs, ctx)};
  record(c.trace, "q' bound", "genus of the base change <= 100 N^2 (gq+s)", b.q_prime_bound);
  record(c.trace, "tau degree bound", "deg tau <= 200 N^2 (gq+s)", b.tau_degree_bound);
  record(c.trace, "K_X degree bound", "section . K_X <= 100 N (gq+s)", b.kx_degree_bound);
  record(c.trace, "section degree bound", "degree under |5K_X| <= 500 N (gq+s)", b.section_degree_bound);
  return b;
}

ClemensThreshold clemens_threshold(const mpz_class& g, const mpz_class& delta, const mpz_class& m) {
  if (g < 0) throw error(errc::invalid_params, "genus must be >= 0");
  if (delta < 1) throw error(errc::invalid_params, "curve degree must be >= 1");
  if (m < 1) throw error(errc::invalid_params, "m must be >= 1");
  mpq_class t(mpz_class(2 * g - 2), delta);
  t.canonicalize();
  t += mpq_class(mpz_class(4 * m - 4));
  return {t, mpq_class(mpz_class(4 * m - 3)) >= t};
}

}  // namespace effbounds
