#pragma once

// Exact carriers shared by every module: rationals, positive reals of the
// form prod p^(e_p) with rational exponents, and logarithms of those plus a
// floating remainder.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace adelic {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// floor(r) as an integer.
std::int64_t floor_of(const Rational& r);

bool is_prime(std::int64_t n);

/// Prime factorization of |n| (n != 0) by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation_of(std::int64_t n, std::int64_t p);

/// Integer power; throws std::overflow_error beyond int64.
std::int64_t ipow(std::int64_t base, int exp);

/// If q = p^k for a prime p, returns (p, k).
std::optional<std::pair<std::int64_t, int>> as_prime_power(std::int64_t q);

class LogValue;

/// A positive real prod_p p^(e_p) with finitely many rational exponents.
/// Used for measures, discriminant roots and finite-place absolute values.
class PosRealExact {
 public:
  PosRealExact() = default;

  static PosRealExact from_rational(const Rational& r);
  static PosRealExact prime_power(std::int64_t p, const Rational& exponent);

  const std::map<std::int64_t, Rational>& exponents() const { return exponents_; }
  Rational exponent_of(std::int64_t p) const;

  bool is_one() const { return exponents_.empty(); }

  /// The value as a rational number when all exponents are integers.
  std::optional<Rational> as_rational() const;

  double to_double() const;
  LogValue log() const;

  PosRealExact pow(const Rational& e) const;
  PosRealExact inverse() const { return pow(Rational(-1)); }

  /// Integer part of each exponent as a rational, and the remaining factor
  /// whose exponents all lie in [0, 1).
  std::pair<Rational, PosRealExact> split_integral() const;

  std::string to_string() const;

  friend PosRealExact operator*(const PosRealExact& a, const PosRealExact& b);
  friend PosRealExact operator/(const PosRealExact& a, const PosRealExact& b);
  friend bool operator==(const PosRealExact& a, const PosRealExact& b) = default;

 private:
  void add_exponent(std::int64_t p, const Rational& e);

  std::map<std::int64_t, Rational> exponents_;
};

/// sum_p c_p log p with rational c_p, plus a real remainder.
///
/// The symbolic part is canonical (log p for distinct primes are linearly
/// independent over Q), so symbolic equality is exact equality.
class LogValue {
 public:
  LogValue() = default;

  static LogValue log_prime(std::int64_t p, const Rational& coefficient = Rational(1));
  static LogValue real(double value);
  /// log |r| for a nonzero rational r.
  static LogValue log_rational(const Rational& r);

  const std::map<std::int64_t, Rational>& symbolic() const { return symbolic_; }
  double real_part() const { return real_; }
  Rational coefficient_of(std::int64_t p) const;

  bool is_exact() const { return real_ == 0.0; }
  double to_double() const;

  /// Symbolic parts identical and |real - other.real| <= tau.
  bool equals(const LogValue& other, double tau = 1e-9) const;
  bool symbolic_equals(const LogValue& other) const { return symbolic_ == other.symbolic_; }

  std::string to_string() const;

  LogValue& operator+=(const LogValue& other);
  LogValue& operator-=(const LogValue& other);
  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  friend LogValue operator-(const LogValue& a);
  friend LogValue operator*(const Rational& c, const LogValue& a);

 private:
  void add_symbolic(std::int64_t p, const Rational& c);

  std::map<std::int64_t, Rational> symbolic_;
  double real_ = 0.0;
};

}  // namespace adelic
