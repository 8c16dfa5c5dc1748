#include <gtest/gtest.h>

#include <random>

#include "adelic/errors.hpp"
#include "adelic/local_fields.hpp"

using namespace adelic;

namespace {

LocalField qp(int p) { return LocalField::base(p, BaseKind::PAdic); }
LocalField fpt(int p) { return LocalField::base(p, BaseKind::Laurent); }

}  // namespace

TEST(BaseElement, IntegerDigits) {
  auto x = BaseElement::from_integer(5, BaseKind::PAdic, 37);  // 37 = 2 + 2*5 + 1*25
  EXPECT_TRUE(x.is_exact());
  EXPECT_EQ(x.digit(0), 2);
  EXPECT_EQ(x.digit(1), 2);
  EXPECT_EQ(x.digit(2), 1);
  EXPECT_EQ(x.digit(3), 0);
}

TEST(BaseElement, NegativeIntegerHasTailOfTopDigits) {
  auto x = BaseElement::from_integer(3, BaseKind::PAdic, -1);
  EXPECT_FALSE(x.is_exact());
  EXPECT_EQ(x.precision(), kDefaultWorkingPrecision);
  for (int k = 0; k < x.precision(); ++k) EXPECT_EQ(x.digit(k), 2);
  EXPECT_THROW(x.digit(x.precision()), PrecisionLoss);
  auto one = BaseElement::from_integer(3, BaseKind::PAdic, 1);
  auto z = x + one;
  EXPECT_TRUE(z.has_no_known_digits());
  EXPECT_THROW(z.valuation(), IndeterminateValuation);
}

TEST(BaseElement, ExactSubtraction) {
  auto a = BaseElement::from_integer(7, BaseKind::PAdic, 100);
  auto b = BaseElement::from_integer(7, BaseKind::PAdic, 51);
  auto d = a - b;
  EXPECT_TRUE(d.is_exact());
  EXPECT_EQ(d, BaseElement::from_integer(7, BaseKind::PAdic, 49));
  EXPECT_EQ(d.valuation(), 2);
  EXPECT_TRUE((a - a).is_exact_zero());
  auto neg = b - a;
  EXPECT_EQ(neg + a, b);
}

TEST(BaseElement, RationalAndInverse) {
  // 1/3 in Q_2: ...010101011.
  auto third = BaseElement::from_rational(2, Rational(1, 3));
  EXPECT_EQ(third.digit(0), 1);
  EXPECT_EQ(third.digit(1), 1);
  EXPECT_EQ(third.digit(2), 0);
  EXPECT_EQ(third.digit(3), 1);
  auto three = BaseElement::from_integer(2, BaseKind::PAdic, 3);
  auto prod = three * third;
  EXPECT_EQ(prod, BaseElement::from_integer(2, BaseKind::PAdic, 1));

  std::mt19937 rng(7);
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 100000)(rng);
      auto x = BaseElement::from_integer(p, BaseKind::PAdic, n);
      auto y = x * x.inverse();
      EXPECT_EQ(y, BaseElement::from_integer(p, BaseKind::PAdic, 1)) << p << " " << n;
      EXPECT_GE(y.precision(), kDefaultWorkingPrecision);
    }
  }
}

TEST(BaseElement, LaurentInverse) {
  // (1 + t)^{-1} = 1 - t + t^2 - ... over F_3.
  auto x = BaseElement::from_digits(3, BaseKind::Laurent, 0, {1, 1});
  auto inv = x.inverse(8);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(inv.digit(k), k % 2 == 0 ? 1 : 2);
  EXPECT_EQ(x * inv, BaseElement::from_integer(3, BaseKind::Laurent, 1));
}

TEST(LocalFields, Valuations) {
  auto Q5 = qp(5);
  EXPECT_EQ(valuation(LocalElement::from_integer(Q5, 5)), 1);
  EXPECT_EQ(valuation(LocalElement::from_rational(Q5, Rational(3, 125))), -3);
  auto F3 = fpt(3);
  EXPECT_EQ(valuation(LocalElement::from_laurent(F3, -1, {1})), -1);

  auto K = LocalField::quadratic(5, BaseKind::PAdic, "x^2-5");
  EXPECT_TRUE(K.is_eisenstein());
  EXPECT_EQ(K.disc_exponent(), 1);
  auto pi = LocalElement::generator(K);
  EXPECT_EQ(valuation(pi), 1);
  EXPECT_EQ(valuation(pi * pi), 2);
  EXPECT_EQ(valuation(LocalElement::from_integer(K, 5)), 2);
  EXPECT_EQ(valuation(LocalElement::uniformizer_power(K, -3)), -3);
  auto prod = LocalElement::uniformizer_power(K, -3) * LocalElement::uniformizer_power(K, 3);
  auto diff = prod - LocalElement::from_integer(K, 1);
  EXPECT_GE(diff.precision(), 20);
  EXPECT_THROW(valuation(diff), IndeterminateValuation);
}

TEST(LocalFields, AbsValue) {
  EXPECT_EQ(abs_value(LocalElement::from_integer(qp(2), 4)), PosRealExact::from_rational(Rational(1, 4)));
  auto F4 = LocalField::quadratic(2, BaseKind::Laurent, "x^2+x+1");
  EXPECT_EQ(F4.residue_cardinality(), 4);
  auto t2 = LocalElement::from_laurent(F4, 2, {1});
  EXPECT_EQ(abs_value(t2), PosRealExact::from_rational(Rational(1, 16)));
  EXPECT_TRUE(abs_value(LocalElement::from_integer(qp(7), 1)).is_one());
}

TEST(LocalFields, Lambda) {
  EXPECT_EQ(lambda_fractional(LocalElement::from_rational(qp(2), Rational(1, 2))), Rational(1, 2));
  EXPECT_EQ(lambda_fractional(LocalElement::from_integer(qp(5), 7)), Rational(0));
  EXPECT_EQ(lambda_fractional(LocalElement::from_rational(qp(5), Rational(7, 25))), Rational(7, 25));
  // -1/3 in Q_3 has fractional part 2/3.
  EXPECT_EQ(lambda_fractional(LocalElement::from_rational(qp(3), Rational(-1, 3))), Rational(2, 3));
  // Adding an integral element does not change it.
  EXPECT_EQ(lambda_fractional(LocalElement::from_rational(qp(5), Rational(7, 25) + 1234)), Rational(7, 25));
  EXPECT_THROW(lambda_fractional(LocalElement::from_integer(fpt(3), 1)), WrongBase);
}

TEST(LocalFields, ResidueCoefficientAngle) {
  auto F3 = fpt(3);
  EXPECT_EQ(residue_coefficient_angle(LocalElement::from_laurent(F3, -1, {2})).value(), Rational(2, 3));
  EXPECT_EQ(residue_coefficient_angle(LocalElement::from_laurent(F3, 0, {1, 1})).value(), Rational(0));
  EXPECT_EQ(residue_coefficient_angle(LocalElement::from_laurent(F3, -2, {1})).value(), Rational(0));
  EXPECT_THROW(residue_coefficient_angle(LocalElement::from_integer(qp(3), 1)), WrongBase);
}

TEST(LocalFields, Trace) {
  auto K = LocalField::quadratic(5, BaseKind::PAdic, "x^2-5");
  auto a = LocalElement::from_integer(K, 3);
  EXPECT_EQ(trace_to_base(a).a(), BaseElement::from_integer(5, BaseKind::PAdic, 6));
  EXPECT_TRUE(trace_to_base(LocalElement::root(K)).a().is_exact_zero());

  // 2 is a non-residue mod 3; 1 + sqrt(2) has conjugate 1 - sqrt(2).
  auto U = LocalField::quadratic(3, BaseKind::PAdic, "x^2-2");
  EXPECT_EQ(U.residue_degree(), 2);
  auto x = LocalElement::from_integer(U, 1) + LocalElement::root(U);
  EXPECT_EQ(trace_to_base(x).a(), BaseElement::from_integer(3, BaseKind::PAdic, 2));
}

TEST(LocalFields, StandardCharacter) {
  EXPECT_EQ(standard_character(LocalElement::from_integer(qp(5), 17)).value(), Rational(0));
  EXPECT_EQ(standard_character(LocalElement::from_rational(qp(2), Rational(1, 2))).value(), Rational(1, 2));
  EXPECT_EQ(standard_character(LocalElement::from_rational(qp(5), Rational(1, 5))).value(), Rational(4, 5));
  EXPECT_EQ(standard_character(LocalElement::from_laurent(fpt(2), -1, {1})).value(), Rational(1, 2));
}

TEST(LocalFields, CharacterIsAdditiveOnCosets) {
  for (const char* cfg : {"p=3 base=padic", "p=2 base=padic poly=x^2-2", "p=3 base=laurent poly=x^2-t",
                          "p=2 base=padic poly=x^2+x+1", "p=5 base=padic poly=x^2-5"}) {
    auto K = LocalField::parse(cfg);
    std::vector<LocalElement> reps;
    for (int d0 = 0; d0 < K.residue_cardinality(); ++d0) {
      for (int d1 = 0; d1 < K.residue_cardinality(); ++d1) {
        reps.push_back(LocalElement::digit_lift(K, d0) * LocalElement::uniformizer_power(K, -4) +
                       LocalElement::digit_lift(K, d1) * LocalElement::uniformizer_power(K, -3));
      }
    }
    for (const auto& x : reps) {
      for (const auto& y : reps) {
        EXPECT_EQ(standard_character(x + y), standard_character(x) + standard_character(y)) << cfg;
      }
    }
  }
}

TEST(LocalFields, CharacterTrivialOnInverseDifferent) {
  for (const char* cfg : {"p=2 base=padic poly=x^2-2", "p=2 base=padic poly=x^2+1", "p=5 base=padic poly=x^2-5",
                          "p=3 base=laurent poly=x^2-t", "p=3 base=padic poly=x^2-2"}) {
    auto K = LocalField::parse(cfg);
    int delta = K.different_exponent();
    auto edge = LocalElement::uniformizer_power(K, -delta);
    for (int d = 0; d < K.residue_cardinality(); ++d) {
      EXPECT_EQ(standard_character(LocalElement::digit_lift(K, d) * edge).value(), Rational(0)) << cfg;
    }
    // One step further out the character is nontrivial somewhere.
    auto out = LocalElement::uniformizer_power(K, -delta - 1);
    bool nontrivial = false;
    for (int d = 0; d < K.residue_cardinality(); ++d) {
      nontrivial |= standard_character(LocalElement::digit_lift(K, d) * out).value() != Rational(0);
    }
    EXPECT_TRUE(nontrivial) << cfg;
  }
}

TEST(LocalFields, Measures) {
  EXPECT_TRUE(local_measure(qp(3)).is_one());
  EXPECT_TRUE(local_measure(fpt(3)).is_one());
  EXPECT_EQ(local_measure(LocalField::quadratic(5, BaseKind::PAdic, "x^2-5")),
            PosRealExact::prime_power(5, Rational(-1, 2)));
  EXPECT_EQ(local_measure(LocalField::quadratic(2, BaseKind::PAdic, "x^2-2")),
            PosRealExact::prime_power(2, Rational(-3, 2)));
}

TEST(LocalFields, ValidatedTwoAdicPolynomials) {
  auto a = LocalField::quadratic(2, BaseKind::PAdic, "x^2-2");
  EXPECT_EQ(a.disc_exponent(), 3);
  auto b = LocalField::quadratic(2, BaseKind::PAdic, "x^2-3");
  EXPECT_TRUE(b.is_eisenstein());
  EXPECT_EQ(b.disc_exponent(), 2);
  auto c = LocalField::quadratic(2, BaseKind::PAdic, "x^2-6");
  EXPECT_EQ(c.disc_exponent(), 3);
  auto d = LocalField::quadratic(2, BaseKind::PAdic, "x^2-5");
  EXPECT_EQ(d.residue_degree(), 2);
  EXPECT_EQ(d.disc_exponent(), 0);
  // The root squares to 5.
  auto r = LocalElement::root(d);
  auto sq = r * r - LocalElement::from_integer(d, 5);
  EXPECT_GE(sq.a().valuation_lower_bound(), 20);
  EXPECT_GE(sq.b().valuation_lower_bound(), 20);
  auto rb = LocalElement::root(b);
  auto sqb = rb * rb - LocalElement::from_integer(b, 3);
  EXPECT_GE(sqb.precision(), 20);
  EXPECT_GE(sqb.a().valuation_lower_bound(), 10);
  EXPECT_THROW(LocalField::quadratic(2, BaseKind::PAdic, "x^2-17"), UnsupportedPolynomial);
  EXPECT_THROW(LocalField::quadratic(5, BaseKind::PAdic, "x^2-4"), UnsupportedPolynomial);
  EXPECT_THROW(LocalField::quadratic(2, BaseKind::Laurent, "x^2-t"), UnsupportedPolynomial);
}

TEST(LocalFields, ConfigRoundTrip) {
  auto K = LocalField::parse("p=3 base=laurent poly=x^2-t");
  EXPECT_EQ(K.to_config(), "p=3 base=laurent poly=x^2-t");
  EXPECT_EQ(LocalField::parse(K.to_config()), K);
  EXPECT_THROW(LocalField::parse("p=4 base=padic"), ParseError);
  EXPECT_THROW(LocalField::parse("p=3 base=real"), ParseError);
  EXPECT_THROW(LocalField::parse("p=3 base=padic poly=x^2-"), ParseError);
}
