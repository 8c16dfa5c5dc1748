#pragma once

// Dense polynomials over a prime field F_p, coefficients low to high.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace adelic {

class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(int p, std::vector<int> coeffs);
  static FpPoly constant(int p, int c);
  /// t - c.
  static FpPoly linear(int p, int c);
  static FpPoly monomial(int p, int degree);

  int prime() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<int>& coeffs() const { return c_; }
  int coeff(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[static_cast<std::size_t>(i)] : 0; }
  int leading() const { return c_.empty() ? 0 : c_.back(); }

  int evaluate(int x) const;
  FpPoly derivative() const;
  FpPoly monic() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;
  friend auto operator<=>(const FpPoly& a, const FpPoly& b) = default;

  /// Quotient and remainder; b must be nonzero.
  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
  static FpPoly gcd(FpPoly a, FpPoly b);
  /// base^e mod m.
  static FpPoly pow_mod(FpPoly base, std::int64_t e, const FpPoly& m);

  bool is_squarefree() const;
  bool is_irreducible() const;
  /// Multiplicity of the irreducible factor P in this (nonzero) polynomial.
  int valuation_at(const FpPoly& P) const;

  /// "[c0,c1,...]".
  std::string to_string() const;
  /// Human-readable "t^2 + 2*t + 1".
  std::string to_pretty() const;
  static FpPoly parse(int p, const std::string& text);

  /// All monic irreducible polynomials of the given degree, in lexicographic
  /// order of coefficient vectors read from the top.
  static std::vector<FpPoly> monic_irreducibles(int p, int degree);
  /// Monic irreducible factors with multiplicities, by trial division.
  /// The leading coefficient is dropped.
  static std::vector<std::pair<FpPoly, int>> factor(const FpPoly& a);

 private:
  void trim();

  int p_ = 2;
  std::vector<int> c_;
};

int fp_inverse(int a, int p);

}  // namespace adelic
