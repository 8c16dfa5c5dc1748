#pragma once

// Global fields of degree at most 2 over Q or F_q(t), their places,
// discriminants, ideles with finite support and Arakelov divisors.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/exact.hpp"
#include "adelic/fp_poly.hpp"
#include "adelic/local_fields.hpp"
#include "adelic/quadratic_ideal.hpp"

namespace adelic {

enum class FieldKind { Rational, QuadraticNumber, RationalFunction, Hyperelliptic };

class GlobalField {
 public:
  static GlobalField rational();
  /// Q(sqrt d), d squarefree and d != 0, 1.
  static GlobalField quadratic(std::int64_t d);
  /// F_q(t) for a prime power q.
  static GlobalField rational_function(std::int64_t q);
  /// F_q(t)[y]/(y^2 - f) for an odd prime q and monic squarefree f of degree >= 1.
  static GlobalField hyperelliptic(FpPoly f);

  /// "Q", "Q(i)", "Q(sqrt -3)", "Fq(t) q=9", "F3(t)", "hyperelliptic q=3 f=1,0,-1,0"
  /// (coefficients of f listed from the top degree down).
  static GlobalField parse(const std::string& text);
  std::string to_string() const;

  FieldKind kind() const { return kind_; }
  bool is_number_field() const { return kind_ == FieldKind::Rational || kind_ == FieldKind::QuadraticNumber; }
  bool is_function_field() const { return !is_number_field(); }
  /// Degree over Q or over F_q(t).
  int degree() const { return kind_ == FieldKind::QuadraticNumber || kind_ == FieldKind::Hyperelliptic ? 2 : 1; }
  /// The prime field Q or F_q(t) below this field.
  GlobalField base() const;

  std::int64_t d() const { return d_; }
  const QuadraticOrder& order() const { return order_; }
  /// (r1, r2) for number fields.
  std::pair<int, int> signature() const;

  std::int64_t q() const { return q_; }
  /// Characteristic and exponent with q = p^k.
  std::int64_t characteristic() const { return qp_; }
  int q_exponent() const { return qk_; }
  const FpPoly& f() const { return f_; }
  int genus() const;

  friend bool operator==(const GlobalField& a, const GlobalField& b) {
    return a.kind_ == b.kind_ && a.d_ == b.d_ && a.q_ == b.q_ && a.f_ == b.f_;
  }

 private:
  FieldKind kind_ = FieldKind::Rational;
  std::int64_t d_ = 1;
  QuadraticOrder order_;
  std::int64_t q_ = 0;
  std::int64_t qp_ = 0;
  int qk_ = 0;
  FpPoly f_;
};

enum class PlaceKind { Finite, Real, Complex, Infinite };
enum class Splitting { Split, Inert, Ramified };

/// A place of a global field. Finite places of number fields sit over a
/// rational prime; finite places of function fields sit over a monic
/// irreducible P(t). `index` separates the places over the same base place.
struct Place {
  PlaceKind kind = PlaceKind::Finite;
  std::int64_t prime = 0;  // rational prime below (number fields)
  FpPoly below;            // P(t) below (finite places of function fields)
  int index = 0;
  Splitting splitting = Splitting::Split;
  int e = 1;  // ramification index over the base place
  int f = 1;  // residue degree over the base place
  /// Norm Nv = p^(norm_exponent) with p = norm_prime.
  std::int64_t norm_prime = 0;
  int norm_exponent = 0;

  bool is_archimedean() const { return kind == PlaceKind::Real || kind == PlaceKind::Complex; }
  /// e_v = 1 for real places, 2 for complex ones.
  int arch_weight() const { return kind == PlaceKind::Complex ? 2 : 1; }
  LogValue log_norm() const { return LogValue::log_prime(norm_prime, Rational(norm_exponent)); }
  /// "p5#0", "inf#1", "p[1,0,1]#0".
  std::string label() const;

  friend bool operator==(const Place& a, const Place& b) {
    return a.kind == b.kind && a.prime == b.prime && a.below == b.below && a.index == b.index;
  }
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.prime <=> b.prime; c != 0) return c;
    if (a.below != b.below) return a.below < b.below ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.index <=> b.index;
  }
};

std::vector<Place> places_above(const GlobalField& K, std::int64_t p);
std::vector<Place> places_above(const GlobalField& K, const FpPoly& P);
/// Archimedean places of number fields, places over the degree place of F_q(t).
std::vector<Place> infinite_places(const GlobalField& K);
/// Resolves a label produced by Place::label().
Place place_from_label(const GlobalField& K, const std::string& label);

/// Prime ideal of a finite place of a quadratic number field.
FractionalIdeal prime_ideal(const GlobalField& K, const Place& v);

/// Completion at a finite place, as a quadratic local field or its base.
/// Function-field places must have degree 1 over a prime constant field.
LocalField completion(const GlobalField& K, const Place& v);

/// Different exponent of a finite or infinite place in the place's own
/// valuation, with the degree place of F_q(t) carrying -2.
int different_exponent(const GlobalField& K, const Place& v);

PosRealExact absolute_discriminant(const GlobalField& K);
/// d_L / d_K^[L:K]; K must be L or its prime field.
PosRealExact relative_discriminant_norm(const GlobalField& L, const GlobalField& K);
/// Product over finite places of p^(local discriminant exponent), read off
/// completions (quadratic number fields only).
PosRealExact discriminant_from_completions(const GlobalField& L);

/// A positive real archimedean component. Exact when its value is known to
/// be of the form prod p^(e_p).
struct ArchComponent {
  double value = 1.0;
  std::optional<PosRealExact> exact = PosRealExact();

  static ArchComponent from_exact(const PosRealExact& x) { return {x.to_double(), x}; }
  static ArchComponent from_double(double x);
  LogValue log() const;
  friend ArchComponent operator*(const ArchComponent& a, const ArchComponent& b);
  ArchComponent inverse() const;
  bool operator==(const ArchComponent& o) const { return value == o.value && exact == o.exact; }
};

/// An idele up to units: valuation n_v at finite and function-field infinite
/// places and a positive real at archimedean places.
class Idele {
 public:
  explicit Idele(GlobalField K) : field_(std::move(K)) {}

  /// "trivial" or "p5#0:2, inf#0:3.5, p[1,1]#0:-1".
  static Idele parse(const GlobalField& K, const std::string& text);
  std::string to_string() const;

  const GlobalField& field() const { return field_; }
  const std::map<Place, int>& valuations() const { return n_; }
  const std::map<Place, ArchComponent>& archimedean() const { return arch_; }

  int valuation_at(const Place& v) const;
  ArchComponent archimedean_at(const Place& v) const;
  void set_valuation(const Place& v, int n);
  void set_archimedean(const Place& v, ArchComponent a);
  bool is_trivial() const { return n_.empty() && arch_.empty(); }

  Idele inverse() const;
  friend Idele operator*(const Idele& a, const Idele& b);
  friend bool operator==(const Idele& a, const Idele& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.arch_ == b.arch_;
  }

 private:
  GlobalField field_;
  std::map<Place, int> n_;
  std::map<Place, ArchComponent> arch_;
};

/// Arakelov divisor: integer coefficients at non-archimedean places and the
/// real coefficient -log alpha_v at archimedean ones.
struct Divisor {
  GlobalField field;
  std::map<Place, int> finite;
  std::map<Place, LogValue> archimedean;

  /// -sum c_v log Nv - sum e_v c_v; equals the log norm of any preimage idele.
  LogValue degree() const;
  /// Classical degree of the function-field divisor sum(-c_v)[v], in units of deg.
  int classical_degree() const;
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor& a, const Divisor& b);
};

Divisor divisor_of_idele(const Idele& alpha);
/// A preimage of D under divisor_of_idele.
Idele idele_of_divisor(const Divisor& D);

/// log |alpha| = sum over finite v of -n_v log Nv plus sum over archimedean v
/// of e_v log alpha_v.
LogValue idele_log_norm(const Idele& alpha);

/// Idele of a nonzero x in Q or a quadratic number field.
Idele principal_idele(const GlobalField& K, const QuadElement& x);
/// Idele of num/den in F_q(t), q prime.
Idele principal_idele(const GlobalField& K, const FpPoly& num, const FpPoly& den);

/// The inverse different: valuation -delta_v at every place with nonzero
/// different exponent and 1 at archimedean places. log|kappa| = log d_K.
Idele canonical_idele(const GlobalField& K);

/// Fractional ideal prod P_v^(n_v) of a number-field idele.
FractionalIdeal ideal_of_idele(const Idele& alpha);

}  // namespace adelic
