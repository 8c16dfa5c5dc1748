#pragma once

// Elements and fractional ideals of a quadratic number field Q(sqrt d),
// written in the integral basis {1, w} with w = sqrt d, or (1 + sqrt d)/2
// when d = 1 mod 4. w satisfies w^2 = T w - N.

#include <complex>
#include <cstdint>
#include <string>

#include "adelic/exact.hpp"

namespace adelic {

struct QuadraticOrder {
  std::int64_t d = -1;
  std::int64_t T = 0;
  std::int64_t N = 1;

  static QuadraticOrder of(std::int64_t d);
  /// Field discriminant: d or 4d.
  std::int64_t discriminant() const { return ((d % 4) + 4) % 4 == 1 ? d : 4 * d; }
  /// Image of w under the embedding that sends sqrt d to +sqrt d (sign = +1)
  /// or -sqrt d (sign = -1).
  std::complex<double> embed_w(int sign) const;
  friend bool operator==(const QuadraticOrder&, const QuadraticOrder&) = default;
};

/// x0 + x1 w with rational coordinates.
struct QuadElement {
  Rational x0{0};
  Rational x1{0};

  bool is_zero() const { return x0 == Rational(0) && x1 == Rational(0); }
  friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

QuadElement add(const QuadraticOrder& O, const QuadElement& a, const QuadElement& b);
QuadElement multiply(const QuadraticOrder& O, const QuadElement& a, const QuadElement& b);
QuadElement conjugate(const QuadraticOrder& O, const QuadElement& a);
Rational norm(const QuadraticOrder& O, const QuadElement& a);
std::complex<double> embed(const QuadraticOrder& O, const QuadElement& a, int sign);

/// A fractional ideal (a Z + (b + c w) Z) / den in Hermite normal form:
/// a, c > 0, 0 <= b < a, gcd(a, b, c, den) = 1.
class FractionalIdeal {
 public:
  explicit FractionalIdeal(QuadraticOrder O);  // the unit ideal O_K

  /// The prime (p, w - r) for a root r of w's minimal polynomial mod p.
  static FractionalIdeal prime_with_root(const QuadraticOrder& O, std::int64_t p, std::int64_t r);
  /// The inert prime pO_K.
  static FractionalIdeal inert_prime(const QuadraticOrder& O, std::int64_t p);
  static FractionalIdeal principal(const QuadraticOrder& O, const QuadElement& x);

  const QuadraticOrder& order() const { return O_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t den() const { return den_; }

  /// Z-basis {a/den, (b + c w)/den}.
  QuadElement basis(int i) const;
  /// Absolute norm [O_K : I] extended multiplicatively.
  Rational norm() const;
  bool contains(const QuadElement& x) const;

  FractionalIdeal conjugate() const;
  FractionalIdeal inverse() const;
  FractionalIdeal pow(int k) const;

  std::string to_string() const;

  friend FractionalIdeal operator*(const FractionalIdeal& I, const FractionalIdeal& J);
  friend bool operator==(const FractionalIdeal&, const FractionalIdeal&) = default;

 private:
  // Lattice spanned by integer vectors (u, v) ~ u + v w, divided by den.
  static FractionalIdeal from_generators(const QuadraticOrder& O, const std::int64_t (*vecs)[2], std::size_t n,
                                         std::int64_t den);

  QuadraticOrder O_;
  std::int64_t a_ = 1;
  std::int64_t b_ = 0;
  std::int64_t c_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace adelic
