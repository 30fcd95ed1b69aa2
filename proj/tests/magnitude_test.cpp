#include <gtest/gtest.h>

#include <random>

#include "effbounds/magnitude.hpp"

using namespace effbounds;

namespace {

const Context ctx{};
constexpr mpfr_prec_t kWp = 256;

BigFloat num(const char* s) { return BigFloat::from_string(s, kWp, MPFR_RNDN); }

// exact log10 of a big integer at 256 bits, as a narrow interval
Interval log10_exact(const mpz_class& v) {
  return iv::log10(Interval::point_z(v, kWp + 64), kWp);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// point value within tol of the enclosure
void expect_encloses(const Interval& enc, const char* value, const char* tol = "1e-25") {
  BigFloat v = num(value), t = num(tol);
  BigFloat lo(kWp), hi(kWp);
  mpfr_sub(lo.get(), v.get(), t.get(), MPFR_RNDD);
  mpfr_add(hi.get(), v.get(), t.get(), MPFR_RNDU);
  EXPECT_TRUE(enc.lo <= hi && lo <= enc.hi)
      << "[" << enc.lo.decimal(35, MPFR_RNDD) << ", " << enc.hi.decimal(35, MPFR_RNDU)
      << "] vs " << value;
}

}  // namespace

TEST(Binomial, SmallExact) {
  EXPECT_EQ(binomial(5, 2).value(), 10);
  EXPECT_EQ(binomial(17, 0).value(), 1);
  EXPECT_EQ(binomial(0, 0).value(), 1);
}

TEST(Binomial, OrderViolation) {
  try {
    binomial(3, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::order_violation);
  }
  // overlapping tower enclosures cannot be ordered
  try {
    binomial(Magnitude::tower(1, "5", "6"), Magnitude::tower(1, "5.5", "7"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::indeterminate_order);
  }
  try {
    binomial(Magnitude::tower(1, "5", "6"), Magnitude::tower(1, "7", "8"));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::order_violation);
  }
}

TEST(Binomial, LargeExactAgainstOracleDigits) {
  const Magnitude b = binomial(24997, 5000);
  ASSERT_TRUE(b.is_exact());
  EXPECT_EQ(b.value().get_str().size(), 5431u);  // oracle digit count
  const Interval tower_path = log10_binomial_enclosure(24997, 5000);
  const Interval exact_log = log10_exact(b.value());
  EXPECT_TRUE(tower_path.lo <= exact_log.lo && exact_log.hi <= tower_path.hi);
  expect_encloses(tower_path, "5430.559411242389980397030670233726091324");
}

TEST(Binomial, ThresholdSwitchesToTower) {
  Context small{1024, 30};
  const Magnitude b = binomial(24997, 5000, small);
  ASSERT_FALSE(b.is_exact());
  EXPECT_EQ(b.height(), 1);
  expect_encloses(b.body(), "5430.559411242389980397030670233726091324");
}

TEST(Binomial, Pascal) {
  for (long n = 1; n <= 200; ++n)
    for (long k = 1; k < n; ++k)
      ASSERT_EQ(binomial(n, k).value(),
                binomial(n - 1, k - 1).value() + binomial(n - 1, k).value());
}

TEST(Binomial, Symmetry) {
  Context small{64, 30};
  for (long n : {100L, 517L, 4000L, 99991L})
    for (long k : {30L, 45L, 50L}) {
      EXPECT_EQ(binomial(n, k).value(), binomial(n, n - k).value());
      const Magnitude a = binomial(n, k, small), b = binomial(n, n - k, small);
      ASSERT_FALSE(a.is_exact());
      EXPECT_TRUE(a.body().overlaps(b.body()));
    }
}

TEST(Binomial, ContainmentSample) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const unsigned long n = 2 + rng() % 99999;
    const unsigned long k = 1 + rng() % (n - 1);
    mpz_class exact;
    mpz_bin_uiui(exact.get_mpz_t(), n, k);
    const Interval enc = log10_binomial_enclosure(n, k);
    const Interval truth = log10_exact(exact);
    ASSERT_TRUE(enc.lo <= truth.lo && truth.hi <= enc.hi) << n << " " << k;
    ASSERT_LT(enc.width(kWp).to_double(), 1e-6);
  }
}

TEST(Binomial, TowerInputs) {
  // C(n, 3) with n = 10^(10^5): log10 C ~ 3 * 10^5
  const Magnitude n = Magnitude::tower(2, "5", "5");
  const Magnitude c = binomial(n, 3);
  ASSERT_EQ(c.height(), 2);
  const Interval l2 = log10_enclosure(c, 2);
  // log10(3 * 10^5 - log10 6) .. log10(3 * 10^5)
  EXPECT_TRUE(l2.lo <= num("5.4771212547196624") && num("5.4771") <= l2.lo);
  EXPECT_TRUE(num("5.4771212547196624") <= l2.hi);
}

TEST(Factorial, Small) {
  EXPECT_EQ(factorial(0).value(), 1);
  EXPECT_EQ(factorial(6).value(), 720);
  EXPECT_EQ(factorial(25).value(), mpz_class("15511210043330985984000000"));
}

TEST(Factorial, MordellTermAgainstOracle) {
  const Magnitude f = factorial(Magnitude(mpz_class("8246337208322")));
  ASSERT_EQ(f.height(), 1);
  expect_encloses(f.body(), "102930505672984.187049674696436985184334315217", "1e-12");
}

TEST(Factorial, StirlingAgreesWithExactAcrossSwitch) {
  for (long n : {63L, 64L, 65L, 200L, 1000L}) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    const Interval enc = log10_factorial_enclosure(n);
    const Interval truth = log10_exact(f);
    EXPECT_TRUE(enc.lo <= truth.lo && truth.hi <= enc.hi) << n;
  }
}

TEST(Arithmetic, Exact) {
  EXPECT_EQ(multiply(6, 7).value(), 42);
  EXPECT_EQ(add(6, 7).value(), 13);
  EXPECT_EQ(multiply(power(2, 35), 240).value(), mpz_class("8246337208320"));
  EXPECT_EQ(power(0, 0).value(), 1);
  EXPECT_EQ(power(0, 5).value(), 0);
  EXPECT_EQ(power(7, 0).value(), 1);
}

TEST(Arithmetic, PowerRaisesHeight) {
  // 10^(10^100) has depth-2 log equal to 100
  const Magnitude p = power(10, Magnitude::tower(1, "100", "100"));
  ASSERT_EQ(p.height(), 2);
  EXPECT_TRUE(p.body().contains(num("100")));
  EXPECT_LT(p.body().width(kWp).to_double(), 1e-25);
  // depth-2 log of the exact 10^100 is 2
  const Interval l = log10_enclosure(Magnitude(pow10(100)), 2);
  EXPECT_TRUE(l.contains(num("2")));
  EXPECT_LT(l.width(kWp).to_double(), 1e-25);
}

TEST(Arithmetic, MixedTowerProductsContainExact) {
  Context small{64, 30};
  const mpz_class a("123456789012345678901234567890123");
  const mpz_class b("987654321098765432109876543210987654321");
  const Magnitude ta = multiply(Magnitude(a), 1, small);
  const Magnitude prod = multiply(Magnitude(a), Magnitude(b), small);
  ASSERT_EQ(prod.height(), 1);
  const Interval truth = log10_exact(mpz_class(a * b));
  EXPECT_TRUE(prod.body().lo <= truth.lo && truth.hi <= prod.body().hi);
  const Magnitude sum = add(Magnitude(a), Magnitude(b), small);
  const Interval st = log10_exact(mpz_class(a + b));
  EXPECT_TRUE(sum.body().lo <= st.lo && st.hi <= sum.body().hi);
  (void)ta;
  // a^b with an exact exponent stays at height 1: body b * log10(a)
  const Magnitude pw = power(Magnitude(a), Magnitude(b), small);
  ASSERT_EQ(pw.height(), 1);
  const Interval expect = iv::mul(Interval::point_z(b, kWp), log10_exact(a), kWp);
  EXPECT_TRUE(pw.body().overlaps(expect));
  // a^(a^b) climbs to height 2: b * log10(a) + log10(log10 a)
  const Magnitude pw2 = power(Magnitude(a), pw, small);
  ASSERT_EQ(pw2.height(), 2);
  const Interval expect2 =
      iv::add(expect, iv::log10(log10_exact(a), kWp), kWp);
  EXPECT_TRUE(pw2.body().overlaps(expect2));
  EXPECT_LT(pw2.body().width(kWp).to_double() / pw2.body().hi.to_double(), 1e-28);
}

TEST(Arithmetic, AddTowersOfDifferentHeights) {
  const Magnitude a = Magnitude::tower(2, "3", "3");  // 10^1000
  const Magnitude b = Magnitude::tower(1, "999", "999");
  const Magnitude s = add(a, b);
  ASSERT_EQ(s.height(), 2);
  // log10(10^1000 + 10^999) = 1000 + log10(1.1)
  const Interval l1 = log10_enclosure(s, 1);
  EXPECT_TRUE(l1.lo <= num("1000.04139268515822504") && num("1000.0") <= l1.lo);
  EXPECT_TRUE(num("1000.04139268515822504") <= l1.hi);
}

TEST(Arithmetic, SubtractExact) {
  EXPECT_EQ(subtract_exact(10, 1).value(), 9);
  const Magnitude t = Magnitude::tower(1, "5430.5", "5430.6");
  const Magnitude s = subtract_exact(t, 1);
  EXPECT_TRUE(s.body().lo < t.body().lo || s.body().lo == t.body().lo);
  EXPECT_EQ(s.body().hi, t.body().hi);
  EXPECT_THROW(subtract_exact(3, 4), error);
}

TEST(Log10Enclosure, Examples) {
  const Interval a = log10_enclosure(1000, 1);
  EXPECT_EQ(a.lo, num("3"));
  EXPECT_EQ(a.hi, num("3"));
  const Interval b = log10_enclosure(multiply(power(2, 35), 240), 1);
  expect_encloses(b, "12.91626108995094785541710590278585032639");
  EXPECT_LT(b.hi.to_double(), 13.0);
  const Interval c = log10_enclosure(Magnitude::tower(2, "2", "2"), 2);
  EXPECT_EQ(c.lo, num("2"));
  EXPECT_EQ(c.hi, num("2"));
  try {
    log10_enclosure(1, 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::depth_exceeds_value);
  }
  EXPECT_THROW(log10_enclosure(0, 1), error);
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(3, 7), Ordering::Less);
  EXPECT_EQ(compare(7, 7), Ordering::Equal);
  EXPECT_EQ(compare(Magnitude::tower(1, "5", "6"), Magnitude::tower(1, "5.5", "7")),
            Ordering::Indeterminate);
  EXPECT_EQ(compare(Magnitude(pow10(6)), Magnitude::tower(1, "7", "7.1")), Ordering::Less);
  EXPECT_EQ(compare(Magnitude::tower(3, "2", "2"), Magnitude::tower(1, "1e50", "1e50")),
            Ordering::Greater);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(42), "42");
  EXPECT_EQ(render(Magnitude::tower(2, "2", "2")), "10^(10^([2, 2]))");
  EXPECT_EQ(render(Magnitude(mpz_class("8246337208320"))), "8246337208320");
  const std::string big = render(binomial(24997, 5000));
  EXPECT_EQ(big.rfind("5431 digits, leading 20 digits ", 0), 0u);
}

TEST(Serialization, RoundTrip) {
  const Magnitude t = Magnitude::tower(2, "4339426967.3500306610", "4339426967.3500306611");
  const nlohmann::json j = to_json(t);
  EXPECT_EQ(j["kind"], "tower");
  EXPECT_EQ(j["height"], 2);
  const Magnitude back = magnitude_from_json(j);
  EXPECT_TRUE(back.body().lo <= t.body().lo && t.body().hi <= back.body().hi);
  EXPECT_EQ(to_json(t).dump(), j.dump());  // deterministic rendering
  EXPECT_EQ(to_json(Magnitude(42)).dump(), R"({"kind":"exact","value":"42"})");
}

TEST(Normalization, IdempotentAndDropsHeight) {
  const Magnitude t = Magnitude::tower(2, "0.5", "0.6");
  EXPECT_EQ(t.height(), 1);
  const Magnitude once = normalize(t), twice = normalize(once);
  EXPECT_TRUE(identical(once, twice));
  EXPECT_THROW(Magnitude::tower(1, "0.5", "2"), error);
}

TEST(Monotonicity, WiderOperandsGiveWiderResults) {
  const Magnitude narrow = Magnitude::tower(1, "50", "51");
  const Magnitude wide = Magnitude::tower(1, "49", "52");
  const Magnitude other = Magnitude::tower(2, "1.5", "1.6");
  auto within = [](const Magnitude& in, const Magnitude& out) {
    ASSERT_EQ(in.height(), out.height());
    EXPECT_TRUE(out.body().lo <= in.body().lo && in.body().hi <= out.body().hi);
  };
  within(multiply(narrow, other), multiply(wide, other));
  within(add(narrow, other), add(wide, other));
  within(power(narrow, other), power(wide, other));
  within(power(other, narrow), power(other, wide));
  within(factorial(narrow), factorial(wide));
}

TEST(Capacity, OverflowRaises) {
  // lowering an enormous tower to height 0 for an exact-exponent power is impossible
  const Magnitude huge = Magnitude::tower(1, "1e30", "1e30");
  try {
    Magnitude r = power(huge, huge);
    EXPECT_EQ(r.height(), 2);
  } catch (const error& e) {
    FAIL() << e.what();
  }
  try {
    log10_enclosure(Magnitude::tower(3, "30", "30"), 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::capacity_exceeded);
  }
}
