#include <gtest/gtest.h>

#include <random>

#include "effbounds/constants.hpp"

using namespace effbounds;

namespace {

const Context ctx{};
constexpr mpfr_prec_t kWp = 256;

mpz_class Z(const char* s) { return mpz_class(s); }

void expect_exact(const std::optional<Magnitude>& v, const mpz_class& want) {
  ASSERT_TRUE(v.has_value());
  ASSERT_TRUE(v->is_exact()) << render(*v);
  EXPECT_EQ(v->value(), want);
}

void expect_body_contains(const Magnitude& v, int height, const char* value, const char* tol = "1e-20") {
  ASSERT_EQ(v.height(), height) << render(v);
  BigFloat x = BigFloat::from_string(value, kWp, MPFR_RNDN), t = BigFloat::from_string(tol, kWp, MPFR_RNDN);
  BigFloat lo(kWp), hi(kWp);
  mpfr_sub(lo.get(), x.get(), t.get(), MPFR_RNDD);
  mpfr_add(hi.get(), x.get(), t.get(), MPFR_RNDU);
  EXPECT_TRUE(v.body().lo <= hi && lo <= v.body().hi) << render(v) << " vs " << value;
}

PipelineOptions toy(std::initializer_list<std::pair<const char*, long>> vals) {
  PipelineOptions o;
  for (auto [k, v] : vals) {
    const std::string key = k;
    Magnitude m(v);
    if (key == "m") o.inject.m = m;
    else if (key == "d") o.inject.d = m;
    else if (key == "l") o.inject.l = m;
    else if (key == "M") o.inject.M = m;
    else if (key == "delta0") o.inject.delta0 = m;
    else if (key == "N") o.inject.N = m;
    else if (key == "gqs") o.inject.gqs = m;
    else if (key == "Q") o.inject.Q = m;
    else if (key == "D") o.inject.D = m;
    else if (key == "A") o.inject.A = m;
  }
  return o;
}

}  // namespace

TEST(DeriveBase, OracleValues220) {
  DerivedConstants c = derive_base({2, 2, 0});
  expect_exact(c.m, 5000);
  expect_exact(c.d, 10);
  expect_exact(c.l, 19997);
  expect_exact(c.delta0, 199970);
  expect_exact(c.N, Z("39988000901"));
  expect_exact(c.choose_ld2, Z("19994300406"));
  ASSERT_TRUE(c.M->is_exact());
  EXPECT_EQ(c.M->value().get_str().size(), 5431u);
  for (const char* name : {"m", "d", "l", "delta0", "N", "M", "C(ld+2,2)"})
    EXPECT_NE(find_entry(c.trace, name), nullptr) << name;
}

TEST(DeriveBase, OtherParams) {
  DerivedConstants a = derive_base({2, 2, 1});
  expect_exact(a.m, 6250);
  expect_exact(a.d, 10);
  expect_exact(a.l, 24997);
  DerivedConstants b = derive_base({3, 2, 0});
  expect_exact(b.m, 7500);
  expect_exact(b.d, 20);
  expect_exact(b.l, 29997);
}

TEST(DeriveBase, RejectsBadParams) {
  for (FamilyParams p : {FamilyParams{1, 2, 0}, FamilyParams{2, 1, 0}, FamilyParams{2, 2, -1}}) {
    try {
      derive_base(p);
      FAIL() << to_string(p);
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::invalid_params);
    }
  }
}

TEST(ComputeQ, ToyValues) {
  for (auto [ld, want] : {std::pair{1L, 105L}, std::pair{2L, 990L}}) {
    DerivedConstants c;
    c.delta0 = Magnitude(ld);
    c.M = Magnitude(3);
    expect_exact(compute_Q(c, {}, ctx), want);
  }
}

TEST(ComputeQ, ClosedAndLemmaFormsAgreeExactlyOnToy) {
  // m = 1, d = 1: l = 1, M = C(2,1) - 1 = 1 and C(5m-3, m) - 1 = 1
  PipelineOptions o = toy({{"m", 1}, {"d", 1}});
  DerivedConstants c = derive_base({2, 2, 0}, o);
  compute_Q(c, o);
  const TraceEntry* q = find_entry(c.trace, "Q");
  ASSERT_NE(q, nullptr);
  ASSERT_EQ(q->children.size(), 1u);
  EXPECT_TRUE(identical(q->value, q->children[0].value));
  expect_exact(c.Q, 1 * 1 * 5);  // ld M C(4ld+M, M) = 1 * 1 * C(5, 1)
}

TEST(ComputeQ, RealEnclosureMatchesOracle) {
  DerivedConstants c = derive_base({2, 2, 0});
  compute_Q(c);
  expect_body_contains(*c.Q, 1, "4339426966.33715522796635356928236782301641356");
  const TraceEntry* q = find_entry(c.trace, "Q (closed form)");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->note, "agrees with Q");
  EXPECT_TRUE(c.diagnostics.empty());
}

TEST(ComputeD, OracleAndToy) {
  DerivedConstants c = derive_base({2, 2, 0});
  compute_D(c);
  expect_exact(c.D, Z("6394338087749551777845067682900000"));
  const mpz_class hand = Z("19994300405") * 19997 * 19997 * 10 * 500 * Z("39988000901") * 4;
  EXPECT_EQ(c.D->value(), hand);

  DerivedConstants t;
  t.choose_ld2 = binomial(4, 2);
  t.l = Magnitude(1);
  t.d = Magnitude(2);
  t.N = Magnitude(5);
  t.gqs = Magnitude(1);
  expect_exact(compute_D(t), 25000);
}

TEST(ComputeA, ToyAndReal) {
  DerivedConstants t;
  t.choose_ld2 = binomial(4, 2);
  t.Q = Magnitude(3);
  expect_exact(compute_A(t), 216);
  t.Q = Magnitude(0);
  expect_exact(compute_A(t), 1);

  DerivedConstants c = derive_base({2, 2, 0});
  compute_Q(c);
  compute_A(c);
  expect_body_contains(*c.A, 2, "4339426967.35003066101675583198259007733810537");
}

TEST(GraphDegree, ToyAndReal) {
  DerivedConstants t;
  t.Q = Magnitude(105);
  t.D = Magnitude(25000);
  EXPECT_EQ(graph_degree_bound({2, 2, 0}, t).value(), 2625006);
  t.Q = Magnitude(0);
  EXPECT_EQ(graph_degree_bound({2, 2, 0}, t).value(), 6);

  DerivedConstants c = derive_base({2, 2, 0});
  compute_Q(c);
  compute_D(c);
  const Magnitude G = graph_degree_bound({2, 2, 0}, c);
  EXPECT_TRUE(consistent(G, multiply(*c.Q, *c.D)));
}

TEST(ChowComponents, Examples) {
  EXPECT_EQ(chow_components_bound(2, 1, 1, 1).value(), 729);
  EXPECT_EQ(chow_components_bound(1, 2, 1, 1).value(), 256);
}

TEST(ChowComponents, KOneExponentSimplifies) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const long n = 1 + static_cast<long>(rng() % 50), d2 = 1 + static_cast<long>(rng() % 50);
    EXPECT_EQ(chow_components_exponent(n, d2, 1).value(), (n + 1) * (d2 * d2 + 1));
  }
}

TEST(Shafarevich, ToyInjection) {
  PipelineOptions o = toy({{"A", 1}, {"Q", 1}, {"D", 1}});
  ShafarevichResult r = evaluate_shafarevich({2, 2, 0}, o);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 35, 4);
  mpz_class want;
  mpz_pow_ui(want.get_mpz_t(), c.get_mpz_t(), 250);
  want *= 7;
  expect_exact(r.bound, want);
  EXPECT_TRUE(identical(*r.direct, *r.assembled));
  EXPECT_TRUE(r.forms_agree);
}

TEST(Shafarevich, ToyInjectionsAssembleExactly) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    PipelineOptions o = toy({{"A", 1 + static_cast<long>(rng() % 2)},
                             {"Q", 1 + static_cast<long>(rng() % 3)},
                             {"D", 1 + static_cast<long>(rng() % 3)}});
    ShafarevichResult r = evaluate_shafarevich({2, 2 + static_cast<long>(rng() % 2), 0}, o);
    ASSERT_TRUE(r.direct->is_exact());
    EXPECT_TRUE(identical(*r.direct, *r.assembled)) << i;
  }
}

TEST(Shafarevich, RealFormsOverlap) {
  for (long g : {2, 3})
    for (long q : {2, 3})
      for (long s : {0, 1, 2}) {
        ShafarevichResult r = evaluate_shafarevich({g, q, s});
        EXPECT_GE(r.bound->height(), 3);
        EXPECT_TRUE(r.forms_agree) << g << q << s;
      }
}

TEST(Shafarevich, MonotoneInS) {
  const Magnitude b0 = shafarevich_bound({2, 2, 0}), b1 = shafarevich_bound({2, 2, 1}),
                  b2 = shafarevich_bound({2, 2, 2});
  EXPECT_EQ(compare(b0, b1), Ordering::Less);
  EXPECT_EQ(compare(b1, b2), Ordering::Less);
}

TEST(Shafarevich, LowGenusRoutes) {
  try {
    shafarevich_bound({2, 1, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_params);
  }
  ShafarevichResult r = evaluate_shafarevich_any({2, 0, 3});
  EXPECT_TRUE(r.low_genus);
  const Magnitude composed = multiply(defranchis_severi_S(2), shafarevich_bound({2, 2, 6}));
  EXPECT_TRUE(identical(*r.bound, composed));
  const TraceEntry* q = find_entry(r.trace, "q (rerouted)");
  const TraceEntry* s = find_entry(r.trace, "s (rerouted)");
  ASSERT_TRUE(q && s);
  EXPECT_TRUE(q->value.is_exactly(2));
  EXPECT_TRUE(s->value.is_exactly(6));

  ShafarevichResult r1 = evaluate_shafarevich_any({2, 1, 0});
  EXPECT_TRUE(identical(*r1.bound, multiply(defranchis_severi_S(2), shafarevich_bound({2, 2, 0}))));
}

TEST(DeFranchisSeveri, Values) {
  const Magnitude s2 = defranchis_severi_S(2);
  ASSERT_TRUE(s2.is_exact());
  EXPECT_EQ(s2.value(), Z("8571920656"));  // real value 8571920655.9925957...
  EXPECT_EQ(defranchis_severi_S(3).value(), Z("2808311262034059987722420"));
  EXPECT_EQ(defranchis_severi_S(34).value().get_str().size(), 5294u);
  for (long g = 2; g <= 10; ++g) {
    const Magnitude s = defranchis_severi_S(g);
    EXPECT_EQ(compare(s, Magnitude(42 * (g - 1))), Ordering::Greater);
  }
}

TEST(DeFranchisSeveri, StableUnderPrecision) {
  Context fine;
  fine.precision_digits = 60;
  EXPECT_EQ(defranchis_severi_S(3, fine).value(), defranchis_severi_S(3).value());
}

TEST(Kollar, ToyAndReal) {
  {
    PipelineOptions o = toy({{"m", 1}, {"l", 2}, {"d", 1}});
    DerivedConstants c = derive_base({2, 2, 0}, o);
    KollarBound k = kollar_degree_bound(c);
    EXPECT_TRUE(k.power_exponent.is_exactly(7));
    EXPECT_TRUE(k.rank_bound.is_exactly(8));
  }
  {
    PipelineOptions o = toy({{"m", 2}, {"l", 1}, {"d", 1}});
    DerivedConstants c = derive_base({2, 2, 0}, o);
    KollarBound k = kollar_degree_bound(c);
    EXPECT_TRUE(k.power_exponent.is_exactly(1));
    EXPECT_TRUE(k.rank_bound.is_exactly(3));
  }
  DerivedConstants c = derive_base({2, 2, 0});
  compute_Q(c);
  KollarBound k = kollar_degree_bound(c);
  EXPECT_EQ(k.power_exponent.value(), Z("19997999245090"));
  EXPECT_EQ(k.q_vs_rank, Ordering::Greater);
  EXPECT_TRUE(identical(k.degree_bound, *c.Q));
}

TEST(FamilySections, RealAndToy) {
  DerivedConstants c = derive_base({2, 2, 0});
  FamilySectionBounds b = parshin_family_constants(c);
  EXPECT_EQ(b.section_degree_bound.value(), Z("79976001802000"));
  EXPECT_EQ(b.q_prime_bound.value(), Z("639616086423350724720400"));
  EXPECT_EQ(b.tau_degree_bound.value(), Z("1279232172846701449440800"));
  EXPECT_EQ(b.kx_degree_bound.value(), Z("15995200360400"));

  DerivedConstants t;
  t.N = Magnitude(5);
  t.gqs = Magnitude(1);
  FamilySectionBounds tb = parshin_family_constants(t);
  EXPECT_TRUE(tb.sections.is_exactly(5));
  EXPECT_TRUE(tb.q_prime_bound.is_exactly(2500));
  EXPECT_TRUE(tb.tau_degree_bound.is_exactly(5000));
  EXPECT_TRUE(tb.kx_degree_bound.is_exactly(500));
  EXPECT_TRUE(tb.section_degree_bound.is_exactly(2500));
}

TEST(Clemens, Threshold) {
  ClemensThreshold a = clemens_threshold(2, 10, 5000);
  EXPECT_EQ(a.threshold, mpq_class(99981, 5));  // 19996.2
  EXPECT_TRUE(a.applicable);
  ClemensThreshold b = clemens_threshold(2, 1, 1);
  EXPECT_EQ(b.threshold, 2);
  EXPECT_FALSE(b.applicable);
  ClemensThreshold c = clemens_threshold(2, 2, 17);
  EXPECT_EQ(c.threshold, 4 * 17 - 3);
  EXPECT_TRUE(c.applicable);
}

TEST(Pipeline, DeterministicSerialization) {
  auto dump = [] {
    ShafarevichResult r = evaluate_shafarevich({2, 2, 1});
    return trace_to_json(r.trace).dump();
  };
  EXPECT_EQ(dump(), dump());
}

TEST(Pipeline, EveryTraceEntryCitesAFormula) {
  ShafarevichResult r = evaluate_shafarevich_any({2, 1, 1});
  std::function<void(const Trace&)> walk = [&](const Trace& t) {
    for (const TraceEntry& e : t) {
      EXPECT_FALSE(e.citation.empty()) << e.name;
      walk(e.children);
    }
  };
  walk(r.trace);
}
