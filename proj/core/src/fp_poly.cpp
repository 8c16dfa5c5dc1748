#include "adelic/fp_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

int reduce(std::int64_t a, int p) {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void check_same(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("polynomials over different prime fields");
}

}  // namespace

int fp_inverse(int a, int p) {
  a = reduce(a, p);
  if (a == 0) throw std::domain_error("inverse of 0 in F_p");
  // Fermat: a^{p-2}.
  std::int64_t r = 1;
  std::int64_t b = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

FpPoly::FpPoly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c = reduce(c, p_);
  trim();
}

FpPoly FpPoly::constant(int p, int c) { return FpPoly(p, {c}); }
FpPoly FpPoly::linear(int p, int c) { return FpPoly(p, {-c, 1}); }

FpPoly FpPoly::monomial(int p, int degree) {
  std::vector<int> c(static_cast<std::size_t>(degree + 1), 0);
  c.back() = 1;
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::evaluate(int x) const {
  std::int64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (r * reduce(x, p_) + c_[i]) % p_;
  return static_cast<int>(r);
}

FpPoly FpPoly::derivative() const {
  std::vector<int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(reduce(static_cast<std::int64_t>(i) * c_[i], p_));
  return FpPoly(p_, std::move(d));
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  int inv = fp_inverse(c_.back(), p_);
  std::vector<int> d(c_);
  for (auto& x : d) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % p_);
  return FpPoly(p_, std::move(d));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  std::vector<int> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  std::vector<int> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + static_cast<std::int64_t>(a.c_[i]) * b.c_[j]) % a.p_;
  }
  std::vector<int> out(c.begin(), c.end());
  return FpPoly(a.p_, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int p = a.p_;
  std::vector<int> r(a.c_);
  int db = b.degree();
  if (a.degree() < db) return {FpPoly(p, {}), a};
  std::vector<int> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  int inv = fp_inverse(b.leading(), p);
  for (int i = a.degree(); i >= db; --i) {
    int coef = static_cast<int>(static_cast<std::int64_t>(r[static_cast<std::size_t>(i)]) * inv % p);
    q[static_cast<std::size_t>(i - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i - db + j)];
      x = reduce(x - static_cast<std::int64_t>(coef) * b.c_[static_cast<std::size_t>(j)], p);
    }
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return FpPoly::divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return FpPoly::divmod(a, b).first; }

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly FpPoly::pow_mod(FpPoly base, std::int64_t e, const FpPoly& m) {
  FpPoly result = constant(m.prime(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

bool FpPoly::is_squarefree() const {
  if (is_zero()) return false;
  FpPoly d = derivative();
  if (d.is_zero()) return degree() == 0;
  return gcd(*this, d).degree() == 0;
}

bool FpPoly::is_irreducible() const {
  const int n = degree();
  if (n < 1) return false;
  // Ben-Or: no factor of degree i divides f for i <= n/2.
  FpPoly t = monomial(p_, 1);
  FpPoly power = t;
  for (int i = 1; i <= n / 2; ++i) {
    power = pow_mod(power, p_, *this);
    if (gcd(*this, power - t).degree() != 0) return false;
  }
  return true;
}

int FpPoly::valuation_at(const FpPoly& P) const {
  if (is_zero()) throw std::domain_error("valuation of the zero polynomial");
  int k = 0;
  FpPoly a = *this;
  while (true) {
    auto [q, r] = divmod(a, P);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

std::string FpPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

std::string FpPoly::to_pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*t" : "t");
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

FpPoly FpPoly::parse(int p, const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("polynomial must look like [c0,c1,...]: '" + text + "'");
  std::vector<int> c;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw ParseError("bad coefficient '" + item + "'");
      c.push_back(reduce(v, p));
    } catch (const std::logic_error&) {
      throw ParseError("bad coefficient '" + item + "' in '" + text + "'");
    }
  }
  return FpPoly(p, std::move(c));
}

std::vector<FpPoly> FpPoly::monic_irreducibles(int p, int degree) {
  std::vector<FpPoly> out;
  std::int64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<int> c(static_cast<std::size_t>(degree + 1), 0);
    std::int64_t x = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
      x /= p;
    }
    c.back() = 1;
    FpPoly f(p, std::move(c));
    if (f.is_irreducible()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::pair<FpPoly, int>> FpPoly::factor(const FpPoly& a) {
  if (a.is_zero()) throw std::domain_error("factor of the zero polynomial");
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = a.monic();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& P : monic_irreducibles(a.p_, d)) {
      int k = 0;
      while (rest.degree() >= d) {
        auto [q, r] = divmod(rest, P);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++k;
      }
      if (k > 0) out.emplace_back(P, k);
    }
  }
  if (rest.degree() > 0) {
    bool merged = false;
    for (auto& [P, k] : out) {
      if (P == rest) {
        ++k;
        merged = true;
      }
    }
    if (!merged) out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace adelic
