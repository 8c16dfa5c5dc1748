#pragma once

// Non-archimedean local fields of degree <= 2 over Q_p or F_p((t)).
//
// Elements of the base field are finite digit expansions sum_i d_i p^i (or
// d_i t^i) known modulo p^N; elements of a quadratic extension are pairs
// a + b*theta over the base, where theta is a root of a monic model
// polynomial that is either Eisenstein (theta is then a uniformizer) or has
// irreducible reduction (unramified). All types are immutable values.

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "adelic/exact.hpp"

namespace adelic {

enum class BaseKind { PAdic, Laurent };

inline constexpr int kExactPrecision = std::numeric_limits<int>::max();
inline constexpr int kDefaultWorkingPrecision = 32;

/// An element of Q_p or F_p((t)).
///
/// Digits cover exponents [start, start + digits.size()); digits above that
/// and below `precision` are zero. An exact element has precision
/// kExactPrecision. The exact zero has no digits and exact precision; an
/// element whose known digits are all zero but whose precision is finite
/// is an inexact zero and has no defined valuation.
class BaseElement {
 public:
  BaseElement(int p, BaseKind kind) : p_(p), kind_(kind) {}

  static BaseElement from_integer(int p, BaseKind kind, std::int64_t n,
                                  int relative_precision = kDefaultWorkingPrecision);
  /// Rational with p-power-free denominator handled by inversion (p-adic only).
  static BaseElement from_rational(int p, const Rational& r,
                                   int relative_precision = kDefaultWorkingPrecision);
  static BaseElement from_digits(int p, BaseKind kind, int start, std::vector<int> digits,
                                 int precision = kExactPrecision);
  /// d * p^k (or d * t^k) for a digit 0 <= d < p.
  static BaseElement monomial(int p, BaseKind kind, int digit, int exponent);

  int prime() const { return p_; }
  BaseKind kind() const { return kind_; }
  int start() const { return start_; }
  const std::vector<int>& digits() const { return digits_; }
  int precision() const { return prec_; }

  bool is_exact() const { return prec_ == kExactPrecision; }
  bool is_exact_zero() const { return digits_.empty() && is_exact(); }
  /// True when no nonzero digit is known (exact or inexact zero).
  bool has_no_known_digits() const { return digits_.empty(); }

  int valuation() const;
  /// Valuation, or the precision when no digit is known.
  int valuation_lower_bound() const;
  /// Digit at exponent k; throws PrecisionLoss when k >= precision.
  int digit(int k) const;

  BaseElement truncated(int absolute_precision) const;
  /// Multiplication by p^k (t^k); exact.
  BaseElement shifted(int k) const;
  BaseElement negated(int relative_precision = kDefaultWorkingPrecision) const;
  BaseElement inverse(int relative_precision = kDefaultWorkingPrecision) const;

  /// Sum_{i<0} a_i p^i in [0, 1) (p-adic only).
  Rational fractional_part() const;
  /// The coefficient a_{-1} (Laurent only).
  int residue_coefficient() const;

  std::string to_string() const;

  friend BaseElement operator+(const BaseElement& x, const BaseElement& y);
  friend BaseElement operator-(const BaseElement& x, const BaseElement& y);
  friend BaseElement operator*(const BaseElement& x, const BaseElement& y);
  BaseElement operator-() const { return negated(); }

  /// Equality of known digits up to the common precision.
  friend bool operator==(const BaseElement& x, const BaseElement& y);

 private:
  void normalize();

  int p_;
  BaseKind kind_;
  int start_ = 0;
  std::vector<int> digits_;
  int prec_ = kExactPrecision;
};

/// A non-archimedean local field of degree 1 or 2 over its base.
///
/// Cheap to copy (shared immutable state).
class LocalField {
 public:
  /// Q_p or F_p((t)).
  static LocalField base(int p, BaseKind kind);
  /// Quadratic extension from a monic polynomial in x with coefficients in
  /// Z (p-adic) or F_p[t] (Laurent), e.g. "x^2-5", "x^2+x+1", "x^2-t".
  static LocalField quadratic(int p, BaseKind kind, const std::string& polynomial);
  /// Parse the text form "p=<p> base=padic|laurent [poly=<polynomial>]".
  static LocalField parse(const std::string& config);
  std::string to_config() const;

  int prime() const;
  BaseKind base_kind() const;
  int rel_degree() const;
  int ramification_index() const;
  int residue_degree() const;
  int disc_exponent() const;
  /// Exponent of the different in the uniformizer (disc_exponent / f).
  int different_exponent() const;
  /// #k(v) = p^f.
  std::int64_t residue_cardinality() const;
  bool is_eisenstein() const;
  const std::string& polynomial() const;

  /// The base field Q_p or F_p((t)) of this field.
  LocalField base_field() const;

  /// Model polynomial theta^2 + c1 theta + c0 (degree 2 only).
  const BaseElement& model_c1() const;
  const BaseElement& model_c0() const;
  /// The root of the user polynomial is root_form().first + root_form().second * theta.
  std::pair<int, int> root_form() const;
  /// theta^{-1} for Eisenstein models.
  const BaseElement& c0_inverse() const;

  std::string name() const;

  friend bool operator==(const LocalField& a, const LocalField& b);

 private:
  struct Data;
  explicit LocalField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// An element a + b*theta of a local field (b = 0 in degree 1).
class LocalElement {
 public:
  explicit LocalElement(LocalField field);
  LocalElement(LocalField field, BaseElement a);
  LocalElement(LocalField field, BaseElement a, BaseElement b);

  static LocalElement from_integer(const LocalField& field, std::int64_t n);
  static LocalElement from_rational(const LocalField& field, const Rational& r);
  /// sum_i digits[i] t^(start+i) in the Laurent base.
  static LocalElement from_laurent(const LocalField& field, int start, std::vector<int> digits);
  /// theta: the model generator.
  static LocalElement generator(const LocalField& field);
  /// The root of the polynomial the field was defined with.
  static LocalElement root(const LocalField& field);
  static LocalElement uniformizer_power(const LocalField& field, int k);
  /// Canonical lift of a residue digit index in [0, #k(v)): the lowest
  /// integer lift for degree 1 and Eisenstein fields, s + t*theta with
  /// index = s + t*p for unramified quadratic fields.
  static LocalElement digit_lift(const LocalField& field, int index);

  const LocalField& field() const { return field_; }
  const BaseElement& a() const { return a_; }
  const BaseElement& b() const { return b_; }

  bool is_exact_zero() const { return a_.is_exact_zero() && b_.is_exact_zero(); }
  bool in_base() const { return b_.is_exact_zero(); }
  /// Absolute precision in powers of the uniformizer.
  int precision() const;
  /// Valuation in the normalized valuation of this field.
  int valuation() const;
  /// Residue digit index of a unit (valuation 0).
  int residue_index() const;

  LocalElement truncated(int precision) const;

  std::string to_string() const;

  friend LocalElement operator+(const LocalElement& x, const LocalElement& y);
  friend LocalElement operator-(const LocalElement& x, const LocalElement& y);
  friend LocalElement operator*(const LocalElement& x, const LocalElement& y);
  LocalElement operator-() const;

 private:
  LocalField field_;
  BaseElement a_;
  BaseElement b_;
};

/// A point e^{2 pi i r} of the unit circle, r in [0, 1).
class UnitAngle {
 public:
  UnitAngle() = default;
  explicit UnitAngle(const Rational& r);
  const Rational& value() const { return r_; }
  friend UnitAngle operator+(const UnitAngle& a, const UnitAngle& b) { return UnitAngle(a.r_ + b.r_); }
  friend UnitAngle operator-(const UnitAngle& a) { return UnitAngle(-a.r_); }
  friend bool operator==(const UnitAngle& a, const UnitAngle& b) = default;
  friend bool operator<(const UnitAngle& a, const UnitAngle& b) { return a.r_ < b.r_; }

 private:
  Rational r_{0};
};

int valuation(const LocalElement& x);
/// (#k(v))^{-v(x)}.
PosRealExact abs_value(const LocalElement& x);
/// The fractional part sum_{i<0} a_i p^i of an element of Q_p.
Rational lambda_fractional(const LocalElement& x);
/// a_{-1}/p for an element of F_p((t)).
UnitAngle residue_coefficient_angle(const LocalElement& x);
/// Trace to the base field (identity in degree 1).
LocalElement trace_to_base(const LocalElement& x);
/// chi_v(x) = psi(tr x), psi(y) = exp(-2 pi i Lambda(y)) on Q_p and
/// exp(2 pi i a_{-1}/p) on F_p((t)).
UnitAngle standard_character(const LocalElement& x);
/// mu(O_v) = p^{-disc_exponent/2}.
PosRealExact local_measure(const LocalField& field);

/// Defining polynomials of the quadratic models accepted by
/// LocalField::quadratic over the given base, one per isomorphism class
/// for odd p and a representative set for p = 2.
std::vector<std::string> standard_quadratic_models(int p, BaseKind kind);

}  // namespace adelic
