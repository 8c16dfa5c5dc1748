#include <gtest/gtest.h>

#include <random>

#include "adelic/errors.hpp"
#include "adelic/fp_poly.hpp"

using namespace adelic;

namespace {

// Number of monic irreducibles of degree n over F_p by Gauss's formula.
int gauss_count(int p, int n) {
  auto mobius = [](int k) {
    int r = 1;
    for (int d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        k /= d;
        if (k % d == 0) return 0;
        r = -r;
      }
    }
    if (k > 1) r = -r;
    return r;
  };
  long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= p;
    s += mobius(d) * pw;
  }
  return static_cast<int>(s / n);
}

FpPoly random_poly(int p, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(0, p - 1);
  std::vector<int> v(static_cast<std::size_t>(deg + 1));
  for (auto& x : v) x = c(rng);
  v.back() = 1;
  return FpPoly(p, v);
}

}  // namespace

TEST(FpPoly, ArithmeticAndDivision) {
  FpPoly a(3, {1, 0, 1});  // t^2 + 1
  FpPoly b(3, {-1, 1});    // t - 1
  EXPECT_EQ((a * b).to_string(), "[2,1,2,1]");
  auto [q, r] = FpPoly::divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_EQ(r, FpPoly::constant(3, 2));
  EXPECT_EQ(a.evaluate(1), 2);
  EXPECT_EQ(FpPoly::gcd(a * b, b * b), b);
  EXPECT_EQ(FpPoly(5, {0, 0, 3}).derivative(), FpPoly(5, {0, 1}));
  EXPECT_EQ(FpPoly::parse(3, "[1, 0, 1]"), a);
  EXPECT_THROW(FpPoly::parse(3, "1,0,1"), ParseError);
  EXPECT_EQ(a.to_pretty(), "t^2 + 1");
}

TEST(FpPoly, IrreducibleCountsMatchGaussFormula) {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= (p == 5 ? 3 : 4); ++n) {
      EXPECT_EQ(static_cast<int>(FpPoly::monic_irreducibles(p, n).size()), gauss_count(p, n)) << p << " " << n;
    }
  }
}

TEST(FpPoly, FactorizationReassembles) {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 40; ++trial) {
      FpPoly f = random_poly(p, 1 + trial % 7, rng);
      FpPoly prod = FpPoly::constant(p, 1);
      for (const auto& [P, k] : FpPoly::factor(f)) {
        EXPECT_TRUE(P.is_irreducible());
        EXPECT_EQ(f.valuation_at(P), k);
        for (int i = 0; i < k; ++i) prod = prod * P;
      }
      EXPECT_EQ(prod, f);
    }
  }
}

TEST(FpPoly, Squarefree) {
  EXPECT_TRUE(FpPoly(3, {0, -1, 0, 1}).is_squarefree());  // t^3 - t
  EXPECT_FALSE(FpPoly(3, {1, 2, 1}).is_squarefree());     // (t + 1)^2
}
