#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "support.hpp"
#include "twistkit/rational.hpp"
#include "twistkit/scalars.hpp"

using namespace twistkit;
using tk_test::Rng;

namespace {

// Independent numeric view: sum of c_k zeta_m^k in long double.
std::complex<long double> eval(const Cyclotomic& z) {
  const long double pi = std::acos(-1.0L);
  std::complex<long double> s = 0;
  const auto& c = z.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    long double ang = 2 * pi * static_cast<long double>(k) / static_cast<long double>(z.conductor());
    s += static_cast<long double>(c[k].num()) / static_cast<long double>(c[k].den()) *
         std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

Cyclotomic random_cyc(std::int64_t m, Rng& rng) {
  std::vector<Rational> by_power(m);
  for (auto& r : by_power) r = Rational(rng.below(7) - 3, 1 + rng.below(3));
  return Cyclotomic::from_powers(m, by_power);
}

}  // namespace

TEST(RootOfUnity, ExamplesInQmodZ) {
  EXPECT_EQ(rou_mul(RootOfUnity(1, 2), RootOfUnity(1, 2)), RootOfUnity(0, 1));
  EXPECT_EQ(rou_inv(RootOfUnity(1, 3)), RootOfUnity(2, 3));
  EXPECT_EQ(rou_pow(RootOfUnity(1, 8), 3), RootOfUnity(3, 8));
  EXPECT_EQ(RootOfUnity(6, 8).str(), "3/4");
  EXPECT_EQ(RootOfUnity::parse("5/4"), RootOfUnity(1, 4));
}

TEST(RootOfUnity, GroupLawsOnRandomSamples) {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    RootOfUnity a(rng.below(60), 1 + rng.below(24)), b(rng.below(60), 1 + rng.below(24)),
        c(rng.below(60), 1 + rng.below(24));
    EXPECT_EQ(rou_mul(rou_mul(a, b), c), rou_mul(a, rou_mul(b, c)));
    EXPECT_EQ(rou_mul(a, b), rou_mul(b, a));
    EXPECT_TRUE(rou_mul(a, rou_inv(a)).is_one());
    EXPECT_TRUE(rou_pow(a, a.order()).is_one());
    auto z = rou_to_cyc(a, a.order() * (1 + rng.below(3)));
    EXPECT_EQ(z * z.conj(), Cyclotomic(Rational(1)));
  }
}

TEST(Cyclotomic, Examples) {
  EXPECT_TRUE((Cyclotomic::zeta(2) + Cyclotomic(Rational(1))).is_zero());
  auto z3 = Cyclotomic::zeta(3);
  EXPECT_EQ(z3 * z3 * z3, Cyclotomic(Rational(1)));
  EXPECT_EQ(Cyclotomic::zeta(5).conj(), Cyclotomic::zeta(5, 4));
  EXPECT_EQ(rou_to_cyc(RootOfUnity(0, 1), 4), Cyclotomic(Rational(1)));
  EXPECT_EQ(rou_to_cyc(RootOfUnity(1, 4), 4), Cyclotomic::zeta(4));
  EXPECT_EQ(rou_to_cyc(RootOfUnity(1, 2), 8), Cyclotomic::zeta(8, 4));
  EXPECT_THROW(rou_to_cyc(RootOfUnity(1, 3), 4), PreconditionError);
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  for (std::int64_t m = 1; m <= 60; ++m) {
    EXPECT_EQ(static_cast<std::int64_t>(cyclotomic_polynomial(m).size()) - 1, euler_phi(m)) << m;
  }
}

// Field axioms against a long double evaluation.
TEST(Cyclotomic, RingAxiomsMatchNumericEvaluation) {
  Rng rng(7);
  const std::vector<std::int64_t> ms = {1, 3, 4, 5, 8, 9, 12, 15, 16, 24};
  for (int t = 0; t < 300; ++t) {
    auto m = rng.pick(ms);
    auto a = random_cyc(m, rng), b = random_cyc(m, rng), c = random_cyc(rng.pick(ms), rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.lift(m * 2).lift(m * 6), a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_LT(std::abs(eval(a * b) - eval(a) * eval(b)), 1e-9L);
    EXPECT_LT(std::abs(eval(a.conj()) - std::conj(eval(a))), 1e-9L);
    EXPECT_EQ(cyc_eq(a, b), a == b);
  }
}

TEST(Cyclotomic, GaloisActionIsARingMap) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto a = random_cyc(12, rng), b = random_cyc(12, rng);
    for (std::int64_t k : {1, 5, 7, 11}) {
      EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
      EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
    }
    EXPECT_EQ(a.galois(11), a.conj());
  }
}

TEST(Cyclotomic, ScaledRoots) {
  RootOfUnity r;
  EXPECT_TRUE((Cyclotomic::zeta(12, 5) * Rational(3)).as_scaled_root(Rational(3), &r));
  EXPECT_EQ(r, RootOfUnity(5, 12));
  EXPECT_FALSE((Cyclotomic::zeta(3) + Cyclotomic(Rational(2))).as_scaled_root(Rational(1), &r));
}

TEST(Rational, OverflowIsReported) {
  Rational big(INT64_MAX / 2);
  EXPECT_THROW(big * Rational(5), InvariantError);
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
}
