#include "adelic/exact.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "adelic/errors.hpp"

namespace adelic {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t n = r.numerator();
  std::int64_t d = r.denominator();
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("factorize(0)");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation_of(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation_of(0)");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("ipow overflow");
  }
  return r;
}

std::optional<std::pair<std::int64_t, int>> as_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

// ---------------------------------------------------------------------------
// PosRealExact

void PosRealExact::add_exponent(std::int64_t p, const Rational& e) {
  if (e == Rational(0)) return;
  auto [it, inserted] = exponents_.emplace(p, e);
  if (!inserted) {
    it->second += e;
    if (it->second == Rational(0)) exponents_.erase(it);
  }
}

PosRealExact PosRealExact::from_rational(const Rational& r) {
  if (r <= Rational(0)) throw std::domain_error("PosRealExact requires a positive value");
  PosRealExact out;
  if (r.numerator() != 1) {
    for (auto [p, k] : factorize(r.numerator())) out.add_exponent(p, Rational(k));
  }
  if (r.denominator() != 1) {
    for (auto [p, k] : factorize(r.denominator())) out.add_exponent(p, Rational(-k));
  }
  return out;
}

PosRealExact PosRealExact::prime_power(std::int64_t p, const Rational& exponent) {
  if (!is_prime(p)) throw std::invalid_argument("prime_power: " + std::to_string(p) + " is not prime");
  PosRealExact out;
  out.add_exponent(p, exponent);
  return out;
}

Rational PosRealExact::exponent_of(std::int64_t p) const {
  auto it = exponents_.find(p);
  return it == exponents_.end() ? Rational(0) : it->second;
}

std::optional<Rational> PosRealExact::as_rational() const {
  Rational r(1);
  for (const auto& [p, e] : exponents_) {
    if (e.denominator() != 1) return std::nullopt;
    std::int64_t k = e.numerator();
    std::int64_t pk = ipow(p, static_cast<int>(k < 0 ? -k : k));
    r *= (k < 0) ? Rational(1, pk) : Rational(pk);
  }
  return r;
}

double PosRealExact::to_double() const {
  double logv = 0.0;
  for (const auto& [p, e] : exponents_) {
    logv += boost::rational_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return std::exp(logv);
}

LogValue PosRealExact::log() const {
  LogValue out;
  for (const auto& [p, e] : exponents_) out += LogValue::log_prime(p, e);
  return out;
}

PosRealExact PosRealExact::pow(const Rational& e) const {
  PosRealExact out;
  for (const auto& [p, x] : exponents_) out.add_exponent(p, x * e);
  return out;
}

std::pair<Rational, PosRealExact> PosRealExact::split_integral() const {
  PosRealExact integral;
  PosRealExact rest;
  for (const auto& [p, e] : exponents_) {
    Rational whole(floor_of(e));
    integral.add_exponent(p, whole);
    rest.add_exponent(p, e - whole);
  }
  return {*integral.as_rational(), rest};
}

std::string PosRealExact::to_string() const {
  if (exponents_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : exponents_) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e != Rational(1)) os << "^(" << adelic::to_string(e) << ')';
  }
  return os.str();
}

PosRealExact operator*(const PosRealExact& a, const PosRealExact& b) {
  PosRealExact out = a;
  for (const auto& [p, e] : b.exponents_) out.add_exponent(p, e);
  return out;
}

PosRealExact operator/(const PosRealExact& a, const PosRealExact& b) { return a * b.inverse(); }

// ---------------------------------------------------------------------------
// LogValue

void LogValue::add_symbolic(std::int64_t p, const Rational& c) {
  if (c == Rational(0)) return;
  auto [it, inserted] = symbolic_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) symbolic_.erase(it);
  }
}

LogValue LogValue::log_prime(std::int64_t p, const Rational& coefficient) {
  if (!is_prime(p)) throw std::invalid_argument("log_prime: " + std::to_string(p) + " is not prime");
  LogValue out;
  out.add_symbolic(p, coefficient);
  return out;
}

LogValue LogValue::real(double value) {
  LogValue out;
  out.real_ = value;
  return out;
}

LogValue LogValue::log_rational(const Rational& r) {
  if (r == Rational(0)) throw std::domain_error("log of zero");
  return PosRealExact::from_rational(r < Rational(0) ? -r : r).log();
}

Rational LogValue::coefficient_of(std::int64_t p) const {
  auto it = symbolic_.find(p);
  return it == symbolic_.end() ? Rational(0) : it->second;
}

double LogValue::to_double() const {
  double v = real_;
  for (const auto& [p, c] : symbolic_) {
    v += boost::rational_cast<double>(c) * std::log(static_cast<double>(p));
  }
  return v;
}

bool LogValue::equals(const LogValue& other, double tau) const {
  return symbolic_ == other.symbolic_ && std::abs(real_ - other.real_) <= tau;
}

std::string LogValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : symbolic_) {
    if (!first) os << " + ";
    first = false;
    os << adelic::to_string(c) << "*log(" << p << ')';
  }
  if (real_ != 0.0 || first) {
    if (!first) os << " + ";
    os.precision(17);
    os << real_;
  }
  return os.str();
}

LogValue& LogValue::operator+=(const LogValue& other) {
  for (const auto& [p, c] : other.symbolic_) add_symbolic(p, c);
  real_ += other.real_;
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& other) {
  for (const auto& [p, c] : other.symbolic_) add_symbolic(p, -c);
  real_ -= other.real_;
  return *this;
}

LogValue operator-(const LogValue& a) {
  LogValue out;
  out -= a;
  return out;
}

LogValue operator*(const Rational& c, const LogValue& a) {
  LogValue out;
  for (const auto& [p, x] : a.symbolic_) out.add_symbolic(p, c * x);
  out.real_ = boost::rational_cast<double>(c) * a.real_;
  return out;
}

}  // namespace adelic
