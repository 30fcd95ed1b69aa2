#include <gtest/gtest.h>

#include "effbounds/parshin.hpp"

using namespace effbounds;

namespace {

constexpr mpfr_prec_t kWp = 256;

mpz_class pow2(unsigned long e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace

TEST(GPrime, Values) {
  EXPECT_TRUE(g_prime(2).is_exactly(34));
  EXPECT_TRUE(g_prime(3).is_exactly(258));
  for (long g = 2; g < 10; ++g) EXPECT_LT(g_prime(g).value(), g_prime(g + 1).value());
  EXPECT_THROW(g_prime(1), error);
}

TEST(RhoDegree, Values) {
  const Magnitude t2 = rho_degree_bound(2);
  EXPECT_EQ(t2.value(), mpz_class("8246337208320"));
  EXPECT_EQ(t2.value(), 240 * pow2(35));
  EXPECT_EQ(rho_degree_bound(3).value(), 4032 * pow2(259));
  // 240 * 2^35 as the magnitude arithmetic computes it
  EXPECT_TRUE(identical(multiply(power(2, 35), 240), t2));
}

TEST(ParshinC, Values) {
  EXPECT_EQ(parshin_C({2, 2, 0}).value(), mpz_class("8246337208321"));
  EXPECT_TRUE(parshin_C({2, 1, 0}).is_exactly(1));
  EXPECT_TRUE(parshin_C({2, 0, 1}).is_exactly(0));
  try {
    parshin_C({2, 0, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::nonpositive_genus);
  }
}

TEST(CoverCount, Values) {
  EXPECT_TRUE(cover_count_bound(2, 0, 3).is_exactly(24));
  EXPECT_TRUE(cover_count_bound(2, 0, 1).is_exactly(4));
  EXPECT_TRUE(cover_count_bound(0, 3, 2).is_exactly(6));
  EXPECT_THROW(cover_count_bound(2, 0, 0), error);
}

TEST(CoverSum, ToyChains) {
  CoverSum a = cover_sum_bound(2, 0, 3);
  EXPECT_EQ(*a.exact, 36);
  EXPECT_TRUE(a.bound.is_exactly(96));
  EXPECT_TRUE(a.chain_holds);
  CoverSum b = cover_sum_bound(2, 0, 1);
  EXPECT_EQ(*b.exact, 4);
  EXPECT_TRUE(b.bound.is_exactly(8));
  for (long c = 0; c <= 8; ++c)
    for (long q = 0; q <= 3; ++q)
      for (long s = 0; s <= 3; ++s) EXPECT_TRUE(cover_sum_bound(q, s, c).chain_holds) << c << q << s;
}

TEST(CoverSum, RealEnclosure) {
  CoverSum r = cover_sum_bound(2, 0, Magnitude(mpz_class("8246337208321")));
  ASSERT_EQ(r.bound.height(), 1);
  // log10(4) + log10(8246337208322!)
  Interval want = iv::add(iv::log10(Interval::point_si(4, kWp), kWp),
                          Interval::point_q(mpq_class("102930505672984187049674696436985184334315217/"
                                                      "1000000000000000000000000000000"),
                                            kWp),
                          kWp);
  BigFloat tol = BigFloat::from_string("1e-29", kWp, MPFR_RNDN);
  BigFloat lo(kWp), hi(kWp);
  mpfr_sub(lo.get(), want.lo.get(), tol.get(), MPFR_RNDD);
  mpfr_add(hi.get(), want.hi.get(), tol.get(), MPFR_RNDU);
  EXPECT_TRUE(r.bound.body().lo <= hi && lo <= r.bound.body().hi) << render(r.bound);
}

TEST(Mordell, ToyInjection) {
  MordellInjection in;
  in.S = Magnitude(1);
  in.P = Magnitude(1);
  in.cover_sum = Magnitude(36);
  MordellResult r = evaluate_mordell({2, 2, 0}, in);
  EXPECT_TRUE(r.bound->is_exactly(1224));
}

TEST(Mordell, RealTraceCarriesExactFactors) {
  MordellResult r = evaluate_mordell({2, 2, 0});
  const TraceEntry* gp = find_entry(r.trace, "g_prime");
  const TraceEntry* th = find_entry(r.trace, "rho_degree_bound");
  const TraceEntry* c = find_entry(r.trace, "C(g,q,s)");
  ASSERT_TRUE(gp && th && c);
  EXPECT_EQ(render(gp->value), "34");
  EXPECT_EQ(render(th->value), "8246337208320");
  EXPECT_EQ(render(c->value), "8246337208321");
  const TraceEntry* p = find_entry(r.trace, "P");
  ASSERT_NE(p, nullptr);
  const TraceEntry* sq = find_entry(p->children, "q' (inner q)");
  ASSERT_NE(sq, nullptr);
  EXPECT_EQ(render(sq->value), "8246337208321");
  EXPECT_NE(find_entry(p->children, "shafarevich bound"), nullptr);
  EXPECT_EQ(r.constants->g_prime.value(), 34);
  EXPECT_GE(r.bound->height(), 3);
  for (const TraceEntry& e : r.trace) EXPECT_FALSE(e.citation.empty()) << e.name;
}

TEST(Mordell, InnerSArgumentIsThetaTimesS) {
  MordellResult r = evaluate_mordell({2, 2, 1});
  const TraceEntry* s = find_entry(r.trace, "s' (inner s)");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->value.value(), rho_degree_bound(2).value());
}

TEST(Mordell, DegenerateInnerParams) {
  try {
    evaluate_mordell({2, 0, 1});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::inner_params_invalid);
  }
  try {
    evaluate_mordell({2, 0, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::nonpositive_genus);
  }
}

TEST(Mordell, Deterministic) {
  auto dump = [] { return trace_to_json(evaluate_mordell({2, 2, 0}).trace).dump(); };
  EXPECT_EQ(dump(), dump());
}

TEST(Mordell, ExactTimesTowerKeepsContainment) {
  // toy: exact S, g', cover sum times a tower P must contain the exact product's logs
  MordellInjection in;
  in.S = Magnitude(7);
  in.cover_sum = Magnitude(36);
  in.P = Magnitude::tower(1, "50", "50");
  MordellResult r = evaluate_mordell({2, 2, 0}, in);
  const Interval want =
      iv::add(iv::log10(Interval::point_si(7 * 34 * 36, kWp), kWp), Interval::point_si(50, kWp), kWp);
  ASSERT_EQ(r.bound->height(), 1);
  EXPECT_TRUE(r.bound->body().lo <= want.lo && want.hi <= r.bound->body().hi);
}
