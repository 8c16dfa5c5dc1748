#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adelic/errors.hpp"
#include "adelic/euler.hpp"

using namespace adelic;

namespace {

// sum_{n in Z} exp(-pi s n^2) by plain summation.
double theta1(double s) {
  double total = 0.0;
  for (int n = -400; n <= 400; ++n) total += std::exp(-M_PI * s * n * n);
  return total;
}

Idele arch_idele(const GlobalField& K, double a) {
  Idele out(K);
  for (const auto& v : infinite_places(K)) out.set_archimedean(v, ArchComponent::from_double(a));
  return out;
}

}  // namespace

TEST(Theta, OneDimensionalMatchesDirectSum) {
  for (double s : {0.01, 0.3, 1.0, 4.0}) {
    ThetaResult r = theta_sum({{std::sqrt(s)}}, {1e-12, 1e6});
    EXPECT_NEAR(r.sum, theta1(s), 1e-11) << s;
    EXPECT_LE(r.tail_bound, 1e-12 * (1 + 1e-9));
  }
}

TEST(Theta, TwoDimensionalProductLattice) {
  // Orthogonal basis factors into a product of one-dimensional sums.
  ThetaResult r = theta_sum({{0.7, 0.0}, {0.0, 1.9}}, {1e-12, 1e4});
  EXPECT_NEAR(r.sum, theta1(0.49) * theta1(1.9 * 1.9), 1e-11);
  // A unimodular change of basis leaves the sum unchanged.
  ThetaResult s = theta_sum({{0.7, 0.0}, {0.7 * 3, 1.9}}, {1e-12, 1e4});
  EXPECT_NEAR(s.sum, r.sum, 1e-11);
}

TEST(Theta, RadiusCap) {
  EXPECT_THROW(theta_sum({{1e-4}}, {1e-10, 100}), RadiusExceeded);
  EXPECT_THROW(theta_sum({{1.0, 0.0}, {2.0, 0.0}}, {1e-10, 100}), std::invalid_argument);
}

TEST(Euler, ChiExamples) {
  EXPECT_TRUE(chi(GlobalField::rational(), Idele(GlobalField::rational())).equals(LogValue(), 0.0));
  auto F = GlobalField::rational_function(7);
  EXPECT_TRUE(chi(F, Idele(F)).equals(LogValue::log_prime(7), 0.0));
  auto K = GlobalField::quadratic(-1);
  EXPECT_TRUE(chi(K, Idele(K)).equals(LogValue::log_prime(2, Rational(-1)), 0.0));
  // Against log|alpha| - (1/2) log d_K.
  for (const char* lit : {"Q(sqrt 5)", "Q(sqrt -3)", "Q(sqrt 6)", "Fq(t) q=4", "hyperelliptic q=3 f=1,0,-1,0"}) {
    auto L = GlobalField::parse(lit);
    EXPECT_TRUE(chi(L, Idele(L)).equals(Rational(-1, 2) * absolute_discriminant(L).log(), 0.0)) << lit;
  }
}

TEST(Euler, ChiRelativeExamples) {
  auto Q = GlobalField::rational();
  auto K5 = GlobalField::quadratic(5);
  EXPECT_TRUE(chi_relative(K5, K5, Idele(K5)).equals(LogValue(), 0.0));
  EXPECT_TRUE(chi_relative(K5, Q, Idele(K5)).equals(LogValue::log_prime(5, Rational(-1, 2)), 0.0));
  auto Ki = GlobalField::quadratic(-1);
  auto a = Idele::parse(Ki, "p2#0:1");
  EXPECT_TRUE(chi_relative(Ki, Q, a).equals(LogValue::log_prime(2, Rational(-2)), 0.0));
  EXPECT_THROW(chi_relative(K5, Ki, Idele(K5)), NotAnExtension);
}

TEST(Euler, H0OfRationalsAtTrivialIdele) {
  auto Q = GlobalField::rational();
  LogValue v = h0(Q, Idele(Q), {1e-12, 2000});
  EXPECT_NEAR(v.to_double(), std::log(theta1(1.0)), 1e-12);
  EXPECT_NEAR(std::exp(v.to_double()), 1.0864348112, 1e-10);
  EXPECT_TRUE(h1(Q, Idele(Q)).equals(h0(Q, Idele(Q)), 1e-15));
}

TEST(Euler, H0GaussianOracle) {
  auto K = GlobalField::quadratic(-1);
  // Z[i] with weight exp(-2 pi |x|^2) splits into two copies of theta1(2).
  EXPECT_NEAR(h0(K, Idele(K), {1e-12, 2000}).to_double(), 2 * std::log(theta1(2.0)), 1e-12);
  // Inverse different (1/2)Z[i]: weight exp(-2 pi |x|^2 / 4) per coordinate pair.
  EXPECT_NEAR(h0(K, canonical_idele(K), {1e-12, 2000}).to_double(), 2 * std::log(theta1(0.5)), 1e-12);
  EXPECT_NEAR(h1(K, Idele(K), {1e-12, 2000}).to_double(), 2 * std::log(theta1(2.0)) + std::log(2.0), 1e-12);
}

TEST(Euler, FunctionFieldSections) {
  auto F = GlobalField::rational_function(3);
  auto D2 = Idele::parse(F, "inf#0:-2");
  EXPECT_TRUE(h0(F, D2).equals(LogValue::log_prime(3, Rational(3)), 0.0));
  for (int n = 0; n <= 5; ++n) {
    auto a = Idele::parse(F, "inf#0:" + std::to_string(-n));
    EXPECT_TRUE(h1(F, a).equals(LogValue(), 0.0)) << n;
  }
  EXPECT_TRUE(h0(F, Idele::parse(F, "inf#0:2")).equals(LogValue(), 0.0));
  auto big = GlobalField::rational_function(4);
  EXPECT_TRUE(h0(big, Idele::parse(big, "inf#0:-1")).equals(LogValue::log_prime(2, Rational(4)), 0.0));
}

TEST(Euler, BruteForceCountMatchesClosedForm) {
  auto F = GlobalField::rational_function(2);
  for (const char* lit : {"trivial", "inf#0:-3", "p[0,1]#0:-2, inf#0:1", "p[1,1,1]#0:1, inf#0:-4", "p[1,1]#0:2, inf#0:1",
                          "p[0,1]#0:1, p[1,1]#0:1, inf#0:-1"}) {
    auto a = Idele::parse(F, lit);
    int deg = divisor_of_idele(a).classical_degree();
    std::int64_t expected = std::int64_t{1} << std::max(0, deg + 1);
    EXPECT_EQ(count_sections_brute_force(F, a), expected) << lit;
  }
}

TEST(Euler, HyperellipticH0IsUnsupported) {
  auto H = GlobalField::parse("hyperelliptic q=3 f=1,0,-1,0");
  EXPECT_THROW(h0(H, Idele(H)), UnsupportedField);
}

TEST(Euler, RiemannRochOnRandomIdeles) {
  std::mt19937 rng(5);
  for (const char* lit : {"Q", "Q(i)", "Q(sqrt 5)", "Q(sqrt -3)", "F2(t)", "F3(t)"}) {
    auto K = GlobalField::parse(lit);
    std::vector<Place> pool = infinite_places(K);
    if (K.is_number_field()) {
      for (std::int64_t p : {2, 3, 5, 7}) {
        for (const auto& v : places_above(K, p)) pool.push_back(v);
      }
    } else {
      for (int d = 1; d <= 2; ++d) {
        for (const auto& P : FpPoly::monic_irreducibles(static_cast<int>(K.q()), d)) pool.push_back(places_above(K, P)[0]);
      }
    }
    for (int trial = 0; trial < 100; ++trial) {
      Idele a(K);
      for (const auto& v : pool) {
        if (v.is_archimedean()) {
          a.set_archimedean(v, trial % 2 ? ArchComponent::from_double(0.1 + (rng() % 1000) / 100.0)
                                         : ArchComponent::from_exact(PosRealExact::from_rational(Rational(1 + rng() % 20, 1 + rng() % 20))));
        } else {
          a.set_valuation(v, static_cast<int>(rng() % 9) - 4);
        }
      }
      Report r = verify_rr(K, a);
      EXPECT_TRUE(r.pass) << lit << " " << a.to_string();
    }
  }
}

TEST(Euler, RelativeRiemannRoch) {
  auto Q = GlobalField::rational();
  for (const char* lit : {"Q(sqrt 5)", "Q(i)"}) {
    auto L = GlobalField::parse(lit);
    auto a = Idele::parse(L, "p2#0:3, p5#0:-1, inf#0:2.5");
    EXPECT_TRUE(verify_rr_relative(L, Q, a).pass) << lit;
    EXPECT_TRUE(verify_rr_relative(L, L, a).pass) << lit;
  }
  auto H = GlobalField::parse("hyperelliptic q=3 f=1,0,-1,0");
  auto r = verify_rr_relative(H, GlobalField::rational_function(3), Idele(H));
  EXPECT_TRUE(r.pass) << r.detail;
  // chi_{L/K}(D_1) = -(1/2) log 3^4.
  EXPECT_TRUE(r.lhs.equals(LogValue::log_prime(3, Rational(-2)), 0.0));
}

TEST(Euler, SerreDuality) {
  ThetaParams tight{1e-10, 2000};
  auto Q = GlobalField::rational();
  EXPECT_TRUE(verify_serre(Q, Idele(Q), tight).pass);
  auto a = Idele::parse(Q, "inf#0:3");
  Report r = verify_serre(Q, a, tight);
  EXPECT_TRUE(r.pass);
  // Oracle: h0(alpha^-1) = log theta1(9), h0(alpha) - log 3 = log theta1(1/9) - log 3.
  EXPECT_NEAR(r.lhs.to_double(), std::log(theta1(9.0)), 1e-10);
  EXPECT_NEAR(r.rhs.to_double(), std::log(theta1(1.0 / 9)) - std::log(3.0), 1e-10);
  auto K = GlobalField::quadratic(-1);
  EXPECT_TRUE(verify_serre(K, Idele(K), tight).pass);
  for (const char* lit : {"Q(sqrt 5)", "Q(sqrt -3)"}) {
    auto L = GlobalField::parse(lit);
    auto b = Idele::parse(L, "p2#0:1, p3#0:-1, inf#0:1.7");
    EXPECT_TRUE(verify_serre(L, b, tight).pass) << lit;
  }
  auto F = GlobalField::rational_function(2);
  for (int n = -6; n <= 6; ++n) {
    Report s = verify_serre(F, Idele::parse(F, "inf#0:" + std::to_string(n)));
    EXPECT_TRUE(s.pass) << n;
    EXPECT_TRUE(s.exact);
  }
}

TEST(Euler, PoissonOracles) {
  ThetaParams tight{1e-13, 4000};
  auto Q = GlobalField::rational();
  Report r = verify_poisson(Q, Idele::parse(Q, "inf#0:2"), tight);
  EXPECT_TRUE(r.pass);
  // sum exp(-pi (2n)^2) against (1/2) sum exp(-pi (n/2)^2).
  EXPECT_NEAR(r.rhs.to_double(), std::log(theta1(4.0)), 1e-12);
  EXPECT_NEAR(r.lhs.to_double(), std::log(0.5 * theta1(0.25)), 1e-12);
  for (const char* lit : {"Q(i)", "Q(sqrt 5)", "Q(sqrt -3)"}) {
    auto K = GlobalField::parse(lit);
    EXPECT_TRUE(verify_poisson(K, Idele(K), tight).pass) << lit;
  }
}

TEST(Euler, ScalingLawAndMonotonicity) {
  ThetaParams tight{1e-12, 4000};
  auto K = GlobalField::quadratic(-1);
  auto a = Idele::parse(K, "p5#1:1, inf#0:1.3");
  Idele x = principal_idele(K, {Rational(2), Rational(1)});
  EXPECT_TRUE(chi(K, x * a).equals(chi(K, a), 1e-12));
  EXPECT_NEAR(h0(K, x * a, tight).to_double(), h0(K, a, tight).to_double(), 1e-11);
  auto Q = GlobalField::rational();
  double prev = -1;
  for (double s : {0.5, 1.0, 1.5, 2.0, 4.0}) {
    double v = h0(Q, arch_idele(Q, s), tight).to_double();
    EXPECT_GT(v, prev);
    prev = v;
  }
  auto R = GlobalField::quadratic(5);
  Idele y = principal_idele(R, {Rational(1), Rational(1)});  // a unit
  auto b = Idele::parse(R, "inf#0:2, inf#1:0.5");
  EXPECT_NEAR(h0(R, y * b, tight).to_double(), h0(R, b, tight).to_double(), 1e-11);
}

TEST(Euler, ReportJsonIsDeterministic) {
  auto K = GlobalField::quadratic(-1);
  Report r = verify_serre(K, Idele(K));
  std::string a = report_json(r, 42, false);
  std::string b = report_json(verify_serre(K, Idele(K)), 42, false);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"lattice_points_used\""), std::string::npos);
  EXPECT_NE(a.find("\"seed\":42"), std::string::npos);
  EXPECT_EQ(a.find("runtime_ms"), std::string::npos);
  Report e = verify_rr(K, Idele::parse(K, "p2#0:1"));
  std::string j = report_json(e);
  EXPECT_NE(j.find("exact-symbolic"), std::string::npos);
  EXPECT_NE(j.find("[2,\"-1\"]"), std::string::npos);
}
