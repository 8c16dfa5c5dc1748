#pragma once

// Exact integration and Fourier transforms of locally constant, compactly
// supported functions on a local field.
//
// Values are CycScalars: finite rational combinations of roots of unity
// e^{2 pi i r}, times a positive real measure factor. Character sums over
// residue classes stay exact this way.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/exact.hpp"
#include "adelic/local_fields.hpp"

namespace adelic {

/// (sum_r c_r e^{2 pi i r}) * m, kept in a normal form.
///
/// Angles with denominator p^k are expressed in the basis of angles r with
/// floor(p r) != p - 1; a term outside the basis is rewritten as minus the
/// other members of its 1/p-cycle. The measure factor carries only
/// exponents in (0, 1); integral powers are folded into the coefficients.
class CycScalar {
 public:
  CycScalar() = default;

  static CycScalar rational(const Rational& q);
  static CycScalar root(const Rational& angle, const Rational& coefficient = Rational(1));
  static CycScalar root(const UnitAngle& angle) { return root(angle.value()); }
  static CycScalar measure(const PosRealExact& m);
  /// sum of c * e^{2 pi i r} over the given terms, times m.
  static CycScalar from_terms(std::map<Rational, Rational> terms, const PosRealExact& m = PosRealExact());
  /// from_terms without normalization: angles already in [0, 1) and in the
  /// basis, no zero coefficients, and m with all exponents in (0, 1).
  static CycScalar from_reduced_terms(std::map<Rational, Rational> terms, const PosRealExact& m);

  const std::map<Rational, Rational>& terms() const { return terms_; }
  const PosRealExact& measure_factor() const { return measure_; }

  bool is_zero() const { return terms_.empty(); }
  /// The value when it is rational.
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;

  CycScalar scaled(const PosRealExact& m) const;
  CycScalar times_root(const Rational& angle) const;

  std::string to_string() const;

  /// Throws adelic::Error when the measure factors differ (e.g. 1 + sqrt 2).
  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const Rational& c, const CycScalar& a);
  CycScalar operator-() const;
  friend bool operator==(const CycScalar& a, const CycScalar& b) = default;

 private:
  void canonicalize();

  std::map<Rational, Rational> terms_;
  PosRealExact measure_;
};

/// A function on K_v supported on pi^{-M} O and constant on cosets of pi^N O.
///
/// Cosets are indexed by their digit vectors (d_{-M}, ..., d_{N-1}) with
/// x = sum_i lift(d_i) pi^i; index = sum_j d_{-M+j} q^j with q = #k(v).
/// Only nonzero values are stored.
class StepFunction {
 public:
  StepFunction(LocalField field, int support_bound, int level);

  const LocalField& field() const { return field_; }
  int support_bound() const { return M_; }
  int level() const { return N_; }
  /// q^{M+N}.
  std::int64_t coset_count() const { return count_; }
  const std::map<std::int64_t, CycScalar>& values() const { return values_; }

  CycScalar value(std::int64_t index) const;
  void set(std::int64_t index, const CycScalar& v);
  void set(std::int64_t index, CycScalar&& v);

  std::vector<int> digits_of(std::int64_t index) const;
  std::int64_t index_of(const std::vector<int>& digits) const;
  /// The canonical coset representative sum_i lift(d_i) pi^i.
  LocalElement representative(std::int64_t index) const;
  /// Index of the coset containing x, or nullopt when x lies outside the support.
  std::optional<std::int64_t> locate(const LocalElement& x) const;
  CycScalar evaluate(const LocalElement& x) const;

  /// The same function on a larger support and a finer level.
  StepFunction reshaped(int support_bound, int level) const;

  std::string to_string() const;

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  friend StepFunction operator*(const Rational& c, const StepFunction& f);
  /// Equality of values on the common refinement.
  friend bool operator==(const StepFunction& f, const StepFunction& g);

 private:
  LocalField field_;
  int M_;
  int N_;
  std::int64_t count_;
  std::map<std::int64_t, CycScalar> values_;
};

/// Characteristic function of pi^m O_v.
StepFunction indicator(const LocalField& field, int m);

/// mu(pi^N O) = q^{-N} mu(O).
PosRealExact coset_measure(const LocalField& field, int level);

/// sum over cosets of value * mu(pi^N O).
CycScalar integrate(const StepFunction& f);

/// Integral of the standard character over pi^m O_v, by summing its values
/// over the cosets of the largest lattice on which it is constant.
CycScalar character_coset_integral(const LocalField& field, int m);

/// hat f(x) = int f(y) chi(-xy) dy. The result has support bound N + delta
/// and level M - delta, where delta is the different exponent.
StepFunction fourier(const StepFunction& f);

/// Coset index of -x for every coset index x of a function's shape.
std::vector<std::int64_t> negation_permutation(const StepFunction& f);

struct InversionWitness {
  std::vector<int> digits;
  CycScalar expected;
  CycScalar actual;
};

struct InversionReport {
  bool pass = true;
  std::size_t cosets_checked = 0;
  std::vector<InversionWitness> witnesses;
};

/// Compares f(x) with the double transform at -x on every coset.
InversionReport compare_inversion(const StepFunction& f, const StepFunction& double_transform,
                                  std::size_t max_witnesses = 8);
/// compare_inversion(f, fourier(fourier(f))).
InversionReport verify_inversion(const StepFunction& f);

struct LemmaCheck {
  int m = 0;
  bool character_ok = false;
  bool transform_ok = false;
  CycScalar character_integral;
  CycScalar character_expected;
};

/// Checks, for each m in [m_lo, m_hi], that the character integral over
/// pi^m O equals mu(pi^m O) when m >= -delta and 0 otherwise, and that the
/// transform of 1_{pi^m O} is mu(pi^m O) 1_{pi^{-m-delta} O}.
std::vector<LemmaCheck> verify_lemmas(const LocalField& field, int m_lo, int m_hi);

}  // namespace adelic
