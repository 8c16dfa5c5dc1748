#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "adelic/errors.hpp"
#include "adelic/global_fields.hpp"

using namespace adelic;

namespace {

std::vector<std::int64_t> squarefree_values(int bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = -bound; d <= bound; ++d) {
    if (d == 0 || d == 1) continue;
    bool sf = true;
    for (std::int64_t k = 2; k * k <= std::abs(d); ++k) {
      if (d % (k * k) == 0) sf = false;
    }
    if (sf) out.push_back(d);
  }
  return out;
}

std::int64_t field_disc(std::int64_t d) { return ((d % 4) + 4) % 4 == 1 ? d : 4 * d; }

// Kronecker symbol (D/p) from its definition.
int kronecker(std::int64_t D, std::int64_t p) {
  if (D % p == 0) return 0;
  if (p == 2) return ((D % 8) + 8) % 8 == 1 ? 1 : -1;
  for (std::int64_t x = 1; x < p; ++x) {
    if ((x * x - D) % p == 0) return 1;
  }
  return -1;
}

}  // namespace

TEST(GlobalFields, ParseAndPrint) {
  EXPECT_EQ(GlobalField::parse("Q").kind(), FieldKind::Rational);
  EXPECT_EQ(GlobalField::parse("Q(i)"), GlobalField::quadratic(-1));
  EXPECT_EQ(GlobalField::parse("Q(sqrt -3)"), GlobalField::quadratic(-3));
  EXPECT_EQ(GlobalField::parse("Fq(t) q=9").q(), 9);
  EXPECT_EQ(GlobalField::parse("F3(t)").q(), 3);
  auto H = GlobalField::parse("hyperelliptic q=3 f=1,0,-1,0");
  EXPECT_EQ(H.f(), FpPoly(3, {0, -1, 0, 1}));
  EXPECT_EQ(H.genus(), 1);
  for (const auto& K : {GlobalField::rational(), GlobalField::quadratic(5), GlobalField::quadratic(-1), H,
                        GlobalField::rational_function(4)}) {
    EXPECT_EQ(GlobalField::parse(K.to_string()), K);
  }
  EXPECT_THROW(GlobalField::parse("Q(sqrt 4)"), ParseError);
  EXPECT_THROW(GlobalField::parse("Fq(t) q=6"), ParseError);
  EXPECT_THROW(GlobalField::parse("hyperelliptic q=9 f=1,0,1"), UnsupportedField);
  EXPECT_THROW(GlobalField::parse("hyperelliptic q=3 f=1,2,1"), ParseError);
  EXPECT_THROW(GlobalField::parse("K"), ParseError);
}

TEST(GlobalFields, GaussianPlaces) {
  auto K = GlobalField::quadratic(-1);
  auto five = places_above(K, 5);
  ASSERT_EQ(five.size(), 2u);
  for (const auto& v : five) {
    EXPECT_EQ(v.splitting, Splitting::Split);
    EXPECT_EQ(v.norm_exponent, 1);
  }
  auto two = places_above(K, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].splitting, Splitting::Ramified);
  EXPECT_EQ(two[0].norm_prime, 2);
  EXPECT_EQ(two[0].norm_exponent, 1);
  EXPECT_EQ(places_above(K, 3)[0].norm_exponent, 2);
  EXPECT_EQ(infinite_places(K).size(), 1u);
  EXPECT_EQ(infinite_places(K)[0].kind, PlaceKind::Complex);
  EXPECT_EQ(infinite_places(GlobalField::quadratic(5)).size(), 2u);
}

TEST(GlobalFields, SplittingMatchesKroneckerSymbol) {
  for (std::int64_t d : squarefree_values(30)) {
    auto K = GlobalField::quadratic(d);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
      auto ws = places_above(K, p);
      int sum = 0;
      for (const auto& w : ws) sum += w.e * w.f;
      EXPECT_EQ(sum, 2);
      int k = kronecker(field_disc(d), p);
      Splitting expected = k == 0 ? Splitting::Ramified : (k == 1 ? Splitting::Split : Splitting::Inert);
      EXPECT_EQ(ws[0].splitting, expected) << d << " " << p;
    }
  }
}

TEST(GlobalFields, HyperellipticPlaces) {
  auto H = GlobalField::hyperelliptic(FpPoly(3, {0, -1, 0, 1}));
  auto at_t = places_above(H, FpPoly(3, {0, 1}));
  ASSERT_EQ(at_t.size(), 1u);
  EXPECT_EQ(at_t[0].splitting, Splitting::Ramified);
  EXPECT_EQ(infinite_places(H)[0].splitting, Splitting::Ramified);
  // Degree-2 places: f is a square mod P iff some z in F_3[t]/P squares to it.
  for (const auto& P : FpPoly::monic_irreducibles(3, 2)) {
    FpPoly target = H.f() % P;
    bool square = false;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        FpPoly z(3, {a, b});
        if ((z * z) % P == target) square = true;
      }
    }
    auto ws = places_above(H, P);
    EXPECT_EQ(ws.size(), square ? 2u : 1u) << P.to_string();
    int sum = 0;
    for (const auto& w : ws) sum += w.e * w.f;
    EXPECT_EQ(sum, 2);
  }
}

TEST(GlobalFields, AbsoluteDiscriminants) {
  EXPECT_TRUE(absolute_discriminant(GlobalField::rational()).is_one());
  EXPECT_EQ(absolute_discriminant(GlobalField::quadratic(-1)), PosRealExact::from_rational(Rational(4)));
  EXPECT_EQ(absolute_discriminant(GlobalField::quadratic(5)), PosRealExact::from_rational(Rational(5)));
  EXPECT_EQ(absolute_discriminant(GlobalField::quadratic(-3)), PosRealExact::from_rational(Rational(3)));
  EXPECT_EQ(absolute_discriminant(GlobalField::rational_function(3)), PosRealExact::prime_power(3, Rational(-2)));
  EXPECT_EQ(absolute_discriminant(GlobalField::rational_function(9)), PosRealExact::prime_power(3, Rational(-4)));
}

TEST(GlobalFields, RelativeDiscriminants) {
  auto Q = GlobalField::rational();
  EXPECT_EQ(relative_discriminant_norm(GlobalField::quadratic(5), Q), PosRealExact::from_rational(Rational(5)));
  EXPECT_TRUE(relative_discriminant_norm(GlobalField::quadratic(5), GlobalField::quadratic(5)).is_one());
  EXPECT_THROW(relative_discriminant_norm(GlobalField::quadratic(5), GlobalField::quadratic(-1)), NotAnExtension);
  EXPECT_THROW(relative_discriminant_norm(GlobalField::quadratic(5), GlobalField::rational_function(3)), NotAnExtension);
  // Riemann-Hurwitz: 2g - 2 = 2(-2) + (total degree of ramified places), the
  // ramified places being the roots of f and infinity when deg f is odd.
  for (auto coeffs : {std::vector<int>{0, -1, 0, 1}, std::vector<int>{1, 0, 0, 0, 1}, std::vector<int>{2, 1, 0, 1, 0, 1}}) {
    FpPoly f(3, coeffs);
    if (!f.is_squarefree()) continue;
    auto H = GlobalField::hyperelliptic(f);
    int ramified = f.degree() + (f.degree() % 2);
    int g = (ramified - 2) / 2;
    EXPECT_EQ(H.genus(), g);
    EXPECT_EQ(relative_discriminant_norm(H, GlobalField::rational_function(3)), PosRealExact::prime_power(3, Rational(ramified)));
  }
  auto E = GlobalField::hyperelliptic(FpPoly(3, {0, -1, 0, 1}));
  EXPECT_EQ(relative_discriminant_norm(E, GlobalField::rational_function(3)), PosRealExact::prime_power(3, Rational(4)));
}

TEST(GlobalFields, DiscriminantFromCompletionsMatchesGlobal) {
  for (std::int64_t d : squarefree_values(50)) {
    auto K = GlobalField::quadratic(d);
    EXPECT_EQ(discriminant_from_completions(K), PosRealExact::from_rational(Rational(std::abs(field_disc(d))))) << d;
  }
}

TEST(GlobalFields, FractionalIdealNorms) {
  for (std::int64_t d : {-1, -3, -5, 2, 5, 13, -14}) {
    auto K = GlobalField::quadratic(d);
    const auto& O = K.order();
    for (std::int64_t p : {2, 3, 5, 7}) {
      FractionalIdeal prod(O);
      for (const auto& v : places_above(K, p)) {
        FractionalIdeal P = prime_ideal(K, v);
        EXPECT_EQ(P.norm(), Rational(ipow(p, v.f)));
        // norm = |det of embedded basis| / sqrt|D|.
        auto b0 = P.basis(0), b1 = P.basis(1);
        std::complex<double> s0 = embed(O, b0, 1), s1 = embed(O, b1, 1);
        std::complex<double> t0 = embed(O, b0, -1), t1 = embed(O, b1, -1);
        double det = std::abs(s0 * t1 - s1 * t0);
        EXPECT_NEAR(det / std::sqrt(std::abs(static_cast<double>(O.discriminant()))), static_cast<double>(ipow(p, v.f)), 1e-9);
        EXPECT_EQ(P * P.inverse(), FractionalIdeal(O));
        prod = prod * P.pow(v.e);
      }
      EXPECT_EQ(prod, FractionalIdeal::principal(O, {Rational(p), Rational(0)}));
    }
  }
}

TEST(GlobalFields, IdeleLogNormExamples) {
  auto Q = GlobalField::rational();
  EXPECT_TRUE(idele_log_norm(Idele(Q)).symbolic().empty());
  auto a = Idele::parse(Q, "p5#0:-1, inf#0:1");
  EXPECT_TRUE(idele_log_norm(a).equals(LogValue::log_prime(5)));
  auto F = GlobalField::rational_function(9);
  auto b = Idele::parse(F, "inf#0:-3");
  EXPECT_TRUE(idele_log_norm(b).equals(LogValue::log_prime(3, Rational(6))));
  auto K = GlobalField::quadratic(-1);
  auto c = Idele::parse(K, "inf#0:3");
  EXPECT_TRUE(idele_log_norm(c).equals(LogValue::log_prime(3, Rational(2))));
}

TEST(GlobalFields, IdeleParseRoundTrip) {
  auto K = GlobalField::quadratic(5);
  auto a = Idele::parse(K, "p11#1:2, p2#0:-1, inf#1:2.5, inf#0:0.125");
  EXPECT_EQ(Idele::parse(K, a.to_string()), a);
  EXPECT_EQ(a.valuation_at(places_above(K, 11)[1]), 2);
  auto F = GlobalField::rational_function(3);
  auto b = Idele::parse(F, "p[1,0,1]#0:2, inf#0:-1, p[0,1]#0:1");
  EXPECT_EQ(Idele::parse(F, b.to_string()), b);
}

TEST(GlobalFields, IdeleParseErrors) {
  auto K = GlobalField::quadratic(5);
  EXPECT_THROW(Idele::parse(K, "p7#1:1"), ParseError);
  EXPECT_THROW(Idele::parse(K, "p4#0:1"), ParseError);
  EXPECT_THROW(Idele::parse(K, "inf#0:-2"), ParseError);
  EXPECT_THROW(Idele::parse(K, "p11#0"), ParseError);
  EXPECT_THROW(Idele::parse(GlobalField::rational_function(3), "p[1,1,1]#0:1"), ParseError);  // reducible
}

TEST(GlobalFields, DivisorHomomorphism) {
  std::mt19937 rng(17);
  for (const char* lit : {"Q", "Q(i)", "Q(sqrt 5)", "F3(t)"}) {
    auto K = GlobalField::parse(lit);
    std::vector<Place> pool = infinite_places(K);
    if (K.is_number_field()) {
      for (std::int64_t p : {2, 3, 5, 13}) {
        for (const auto& v : places_above(K, p)) pool.push_back(v);
      }
    } else {
      for (const auto& P : FpPoly::monic_irreducibles(3, 2)) pool.push_back(places_above(K, P)[0]);
    }
    auto random_idele = [&]() {
      Idele a(K);
      for (const auto& v : pool) {
        if (rng() % 2) continue;
        if (v.is_archimedean()) {
          a.set_archimedean(v, ArchComponent::from_exact(PosRealExact::from_rational(Rational(1 + rng() % 9, 1 + rng() % 9))));
        } else {
          a.set_valuation(v, static_cast<int>(rng() % 7) - 3);
        }
      }
      return a;
    };
    for (int trial = 0; trial < 50; ++trial) {
      Idele a = random_idele(), b = random_idele();
      EXPECT_EQ(divisor_of_idele(a * b), divisor_of_idele(a) + divisor_of_idele(b));
      EXPECT_TRUE(divisor_of_idele(a).degree().equals(idele_log_norm(a), 1e-12));
      EXPECT_EQ(idele_of_divisor(divisor_of_idele(a)), a);
      EXPECT_TRUE(divisor_of_idele(a * a.inverse()).finite.empty());
    }
  }
  auto Q = GlobalField::rational();
  auto three = places_above(GlobalField::quadratic(-1), 3)[0];
  Idele a(GlobalField::quadratic(-1));
  a.set_valuation(three, 2);
  EXPECT_EQ(divisor_of_idele(a).finite.at(three), 2);
  EXPECT_TRUE(divisor_of_idele(Idele(Q)).finite.empty());
}

TEST(GlobalFields, ProductFormula) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> c(-40, 40);
  auto nonzero = [&]() {
    int x = 0;
    while (x == 0) x = c(rng);
    return x;
  };
  auto Q = GlobalField::rational();
  for (int trial = 0; trial < 100; ++trial) {
    Idele a = principal_idele(Q, {Rational(nonzero(), nonzero()), Rational(0)});
    EXPECT_TRUE(idele_log_norm(a).equals(LogValue(), 0.0)) << a.to_string();
  }
  for (std::int64_t d : {-1, -3, 5, -5}) {
    auto K = GlobalField::quadratic(d);
    for (int trial = 0; trial < 100; ++trial) {
      QuadElement x{Rational(c(rng), nonzero()), Rational(c(rng), nonzero())};
      if (x.is_zero()) continue;
      Idele a = principal_idele(K, x);
      LogValue n = idele_log_norm(a);
      if (d < 0) {
        // Complex components are exact square roots of norms.
        EXPECT_TRUE(n.equals(LogValue(), 0.0)) << d << " " << a.to_string() << " " << n.to_string();
      } else {
        EXPECT_NEAR(n.to_double(), 0.0, 1e-12) << a.to_string();
      }
      // The ideal of the principal idele is the principal ideal.
      EXPECT_EQ(ideal_of_idele(a), FractionalIdeal::principal(K.order(), x));
    }
  }
  auto F = GlobalField::rational_function(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> u(1 + trial % 5), w(1 + (trial / 5) % 4);
    for (auto& x : u) x = static_cast<int>(rng() % 3);
    for (auto& x : w) x = static_cast<int>(rng() % 3);
    FpPoly num(3, u), den(3, w);
    if (num.is_zero() || den.is_zero()) continue;
    EXPECT_TRUE(idele_log_norm(principal_idele(F, num, den)).equals(LogValue(), 0.0));
  }
}

TEST(GlobalFields, CanonicalIdeleNormIsDiscriminant) {
  for (const char* lit : {"Q", "Q(i)", "Q(sqrt -3)", "Q(sqrt 5)", "Q(sqrt 6)", "F2(t)", "Fq(t) q=9",
                          "hyperelliptic q=3 f=1,0,-1,0", "hyperelliptic q=5 f=1,0,0,1,1", "hyperelliptic q=3 f=1,0,0,0,-1,0"}) {
    auto K = GlobalField::parse(lit);
    EXPECT_TRUE(idele_log_norm(canonical_idele(K)).equals(absolute_discriminant(K).log(), 0.0)) << lit;
  }
  auto K = GlobalField::quadratic(-1);
  EXPECT_EQ(canonical_idele(K).valuation_at(places_above(K, 2)[0]), -2);
}

TEST(GlobalFields, CompletionsOfFunctionFieldPlaces) {
  auto H = GlobalField::hyperelliptic(FpPoly(3, {0, -1, 0, 1}));
  for (int c = 0; c < 3; ++c) {
    auto v = places_above(H, FpPoly::linear(3, c))[0];
    LocalField C = completion(H, v);
    EXPECT_EQ(C.ramification_index(), 2);
    EXPECT_EQ(C.disc_exponent(), 1);
  }
  auto inert = GlobalField::hyperelliptic(FpPoly(5, {2, 0, 1}));  // t^2 + 2
  auto v = places_above(inert, FpPoly::linear(5, 0))[0];
  EXPECT_EQ(v.splitting, Splitting::Inert);
  EXPECT_EQ(completion(inert, v).residue_degree(), 2);
}
