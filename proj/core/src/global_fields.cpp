#include "adelic/global_fields.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

std::int64_t pmod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = pmod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

bool squarefree(std::int64_t d) {
  for (auto [p, k] : factorize(d)) {
    if (k > 1) return false;
  }
  return true;
}

// Roots of w^2 - T w + N modulo p, ascending.
std::vector<std::int64_t> roots_mod(const QuadraticOrder& O, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < p; ++r) {
    __int128 v = static_cast<__int128>(r) * r - static_cast<__int128>(O.T) * r + O.N;
    if (v % p == 0) out.push_back(r);
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string signed_term(std::int64_t c, const std::string& var) {
  if (c == 0) return "";
  std::string out = c < 0 ? "-" : "+";
  std::int64_t a = c < 0 ? -c : c;
  if (var.empty()) return out + std::to_string(a);
  if (a != 1) out += std::to_string(a) + "*";
  return out + var;
}

std::string quadratic_poly(std::int64_t c1, std::int64_t c0) { return "x^2" + signed_term(c1, "x") + signed_term(c0, ""); }

void require_prime_q(const GlobalField& K) {
  if (K.q_exponent() != 1)
    throw UnsupportedField("finite places of " + K.to_string() + " need a prime constant field");
}

Place make_place(PlaceKind kind, std::int64_t norm_prime, int norm_exponent) {
  Place v;
  v.kind = kind;
  v.norm_prime = norm_prime;
  v.norm_exponent = norm_exponent;
  return v;
}

// Exact rational from a decimal literal such as "3.25" when it fits.
std::optional<Rational> exact_decimal(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    try {
      return parse_rational(s);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  std::size_t i = 0;
  std::int64_t num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.' && !dot) {
      dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    digits = true;
    if (num > 100000000000LL || den > 100000000000LL) return std::nullopt;
    num = num * 10 + (c - '0');
    if (dot) den *= 10;
  }
  if (!digits) return std::nullopt;
  return Rational(num, den);
}

}  // namespace

// ---- fields ---------------------------------------------------------------

GlobalField GlobalField::rational() { return GlobalField(); }

GlobalField GlobalField::quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !squarefree(d)) throw ParseError("Q(sqrt d) needs squarefree d != 0, 1, got " + std::to_string(d));
  GlobalField K;
  K.kind_ = FieldKind::QuadraticNumber;
  K.d_ = d;
  K.order_ = QuadraticOrder::of(d);
  return K;
}

GlobalField GlobalField::rational_function(std::int64_t q) {
  auto pk = as_prime_power(q);
  if (!pk) throw ParseError("F_q(t) needs a prime power q, got " + std::to_string(q));
  GlobalField K;
  K.kind_ = FieldKind::RationalFunction;
  K.q_ = q;
  K.qp_ = pk->first;
  K.qk_ = pk->second;
  return K;
}

GlobalField GlobalField::hyperelliptic(FpPoly f) {
  const int q = f.prime();
  if (q == 2 || !is_prime(q)) throw UnsupportedField("hyperelliptic fields need an odd prime q, got " + std::to_string(q));
  if (f.degree() < 1 || !f.is_monic() || !f.is_squarefree())
    throw ParseError("hyperelliptic f must be monic, squarefree and nonconstant: " + f.to_pretty());
  GlobalField K;
  K.kind_ = FieldKind::Hyperelliptic;
  K.q_ = q;
  K.qp_ = q;
  K.qk_ = 1;
  K.f_ = std::move(f);
  return K;
}

GlobalField GlobalField::parse(const std::string& text) {
  std::string s = trim(text);
  std::string compact;
  for (char c : s) {
    if (c != ' ') compact.push_back(c);
  }
  if (compact == "Q") return rational();
  if (compact == "Q(i)") return quadratic(-1);
  if (compact.rfind("Q(sqrt", 0) == 0 && compact.back() == ')') {
    std::string n = compact.substr(6, compact.size() - 7);
    try {
      std::size_t used = 0;
      long long d = std::stoll(n, &used);
      if (used != n.size()) throw ParseError("");
      return quadratic(d);
    } catch (const std::logic_error&) {
      throw ParseError("bad quadratic field literal '" + text + "'");
    }
  }
  auto key_value = [&](const std::string& key) -> std::optional<std::string> {
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    }
    return std::nullopt;
  };
  auto to_int = [&](const std::string& v) -> std::int64_t {
    try {
      std::size_t used = 0;
      long long x = std::stoll(v, &used);
      if (used != v.size()) throw ParseError("");
      return x;
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + v + "' in '" + text + "'");
    }
  };
  if (compact.rfind("Fq(t)", 0) == 0) {
    auto q = key_value("q");
    if (!q) throw ParseError("Fq(t) literal needs q=<prime power>: '" + text + "'");
    return rational_function(to_int(*q));
  }
  if (compact.size() > 4 && compact[0] == 'F' && compact.substr(compact.size() - 3) == "(t)") {
    return rational_function(to_int(compact.substr(1, compact.size() - 4)));
  }
  if (s.rfind("hyperelliptic", 0) == 0) {
    auto q = key_value("q");
    auto f = key_value("f");
    if (!q || !f) throw ParseError("hyperelliptic literal needs q=<q> f=<coefficients>: '" + text + "'");
    std::int64_t qq = to_int(*q);
    if (!as_prime_power(qq)) throw ParseError("q must be a prime power in '" + text + "'");
    if (!is_prime(qq) || qq == 2) throw UnsupportedField("hyperelliptic fields need an odd prime q, got " + *q);
    std::vector<int> high_to_low;
    std::stringstream ss(*f);
    std::string item;
    while (std::getline(ss, item, ',')) high_to_low.push_back(static_cast<int>(to_int(item)));
    std::reverse(high_to_low.begin(), high_to_low.end());
    return hyperelliptic(FpPoly(static_cast<int>(qq), high_to_low));
  }
  throw ParseError("unrecognized field literal '" + text + "'");
}

std::string GlobalField::to_string() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::QuadraticNumber:
      return d_ == -1 ? "Q(i)" : "Q(sqrt " + std::to_string(d_) + ")";
    case FieldKind::RationalFunction:
      return "Fq(t) q=" + std::to_string(q_);
    case FieldKind::Hyperelliptic: {
      std::string out = "hyperelliptic q=" + std::to_string(q_) + " f=";
      for (int i = f_.degree(); i >= 0; --i) out += std::to_string(f_.coeff(i)) + (i ? "," : "");
      return out;
    }
  }
  return "?";
}

GlobalField GlobalField::base() const {
  if (is_number_field()) return rational();
  return rational_function(q_);
}

std::pair<int, int> GlobalField::signature() const {
  if (kind_ == FieldKind::Rational) return {1, 0};
  if (kind_ == FieldKind::QuadraticNumber) return d_ > 0 ? std::pair{2, 0} : std::pair{0, 1};
  throw UnsupportedField("signature of a function field");
}

int GlobalField::genus() const {
  if (kind_ == FieldKind::RationalFunction) return 0;
  if (kind_ == FieldKind::Hyperelliptic) return (f_.degree() - 1) / 2;
  throw UnsupportedField("genus of a number field");
}

// ---- places ---------------------------------------------------------------

std::string Place::label() const {
  switch (kind) {
    case PlaceKind::Finite:
      if (prime != 0) return "p" + std::to_string(prime) + "#" + std::to_string(index);
      return "p" + below.to_string() + "#" + std::to_string(index);
    default:
      return "inf#" + std::to_string(index);
  }
}

std::vector<Place> places_above(const GlobalField& K, std::int64_t p) {
  if (!K.is_number_field()) throw UnsupportedField("rational primes index places of number fields only");
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  auto base = [&](Splitting s, int index, int e, int f) {
    Place v = make_place(PlaceKind::Finite, p, f);
    v.prime = p;
    v.splitting = s;
    v.index = index;
    v.e = e;
    v.f = f;
    return v;
  };
  if (K.kind() == FieldKind::Rational) return {base(Splitting::Split, 0, 1, 1)};
  const std::int64_t D = K.order().discriminant();
  Splitting s;
  if (D % p == 0) {
    s = Splitting::Ramified;
  } else if (p == 2) {
    s = pmod(D, 8) == 1 ? Splitting::Split : Splitting::Inert;
  } else {
    s = powmod(D, (p - 1) / 2, p) == 1 ? Splitting::Split : Splitting::Inert;
  }
  switch (s) {
    case Splitting::Split:
      return {base(s, 0, 1, 1), base(s, 1, 1, 1)};
    case Splitting::Inert:
      return {base(s, 0, 1, 2)};
    case Splitting::Ramified:
      return {base(s, 0, 2, 1)};
  }
  return {};
}

std::vector<Place> places_above(const GlobalField& K, const FpPoly& P) {
  if (!K.is_function_field()) throw UnsupportedField("polynomials index places of function fields only");
  require_prime_q(K);
  if (P.prime() != K.q() || !P.is_monic() || !P.is_irreducible())
    throw ParseError("place must be a monic irreducible polynomial over F_" + std::to_string(K.q()) + ": " + P.to_string());
  auto base = [&](Splitting s, int index, int e, int f) {
    Place v = make_place(PlaceKind::Finite, K.q(), P.degree() * f);
    v.below = P;
    v.splitting = s;
    v.index = index;
    v.e = e;
    v.f = f;
    return v;
  };
  if (K.kind() == FieldKind::RationalFunction) return {base(Splitting::Split, 0, 1, 1)};
  const FpPoly& f = K.f();
  if ((f % P).is_zero()) return {base(Splitting::Ramified, 0, 2, 1)};
  std::int64_t card = ipow(K.q(), P.degree());
  FpPoly chi = FpPoly::pow_mod(f, (card - 1) / 2, P);
  if (chi == FpPoly::constant(K.q(), 1)) return {base(Splitting::Split, 0, 1, 1), base(Splitting::Split, 1, 1, 1)};
  return {base(Splitting::Inert, 0, 1, 2)};
}

std::vector<Place> infinite_places(const GlobalField& K) {
  auto arch = [&](PlaceKind kind, int index) {
    Place v = make_place(kind, 0, 0);
    v.index = index;
    v.e = kind == PlaceKind::Complex ? 2 : 1;
    return v;
  };
  auto inf = [&](Splitting s, int index, int e) {
    Place v = make_place(PlaceKind::Infinite, K.characteristic(), K.q_exponent());
    v.splitting = s;
    v.index = index;
    v.e = e;
    return v;
  };
  switch (K.kind()) {
    case FieldKind::Rational:
      return {arch(PlaceKind::Real, 0)};
    case FieldKind::QuadraticNumber:
      if (K.d() > 0) return {arch(PlaceKind::Real, 0), arch(PlaceKind::Real, 1)};
      return {arch(PlaceKind::Complex, 0)};
    case FieldKind::RationalFunction:
      return {inf(Splitting::Split, 0, 1)};
    case FieldKind::Hyperelliptic:
      if (K.f().degree() % 2 == 1) return {inf(Splitting::Ramified, 0, 2)};
      return {inf(Splitting::Split, 0, 1), inf(Splitting::Split, 1, 1)};
  }
  return {};
}

Place place_from_label(const GlobalField& K, const std::string& label_text) {
  std::string label = trim(label_text);
  auto hash = label.rfind('#');
  if (hash == std::string::npos || hash + 1 >= label.size()) throw ParseError("place label needs '#<index>': '" + label + "'");
  int index = 0;
  try {
    std::size_t used = 0;
    index = std::stoi(label.substr(hash + 1), &used);
    if (used != label.size() - hash - 1) throw ParseError("");
  } catch (const std::logic_error&) {
    throw ParseError("bad place index in '" + label + "'");
  }
  std::string head = label.substr(0, hash);
  std::vector<Place> candidates;
  if (head == "inf") {
    candidates = infinite_places(K);
  } else if (head.size() > 1 && head[0] == 'p' && head[1] == '[') {
    if (!K.is_function_field()) throw ParseError("polynomial place label on a number field: '" + label + "'");
    require_prime_q(K);
    candidates = places_above(K, FpPoly::parse(static_cast<int>(K.q()), head.substr(1)));
  } else if (head.size() > 1 && head[0] == 'p') {
    if (!K.is_number_field()) throw ParseError("prime place label on a function field: '" + label + "'");
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(head.substr(1), &used);
      if (used != head.size() - 1) throw ParseError("");
    } catch (const std::logic_error&) {
      throw ParseError("bad prime in place label '" + label + "'");
    }
    candidates = places_above(K, p);
  } else {
    throw ParseError("unrecognized place label '" + label + "'");
  }
  for (const auto& v : candidates) {
    if (v.index == index) return v;
  }
  throw ParseError("no place '" + label + "' on " + K.to_string());
}

FractionalIdeal prime_ideal(const GlobalField& K, const Place& v) {
  if (K.kind() != FieldKind::QuadraticNumber || v.kind != PlaceKind::Finite)
    throw UnsupportedField("prime ideals are provided for finite places of quadratic number fields");
  if (v.splitting == Splitting::Inert) return FractionalIdeal::inert_prime(K.order(), v.prime);
  auto roots = roots_mod(K.order(), v.prime);
  return FractionalIdeal::prime_with_root(K.order(), v.prime, roots.at(static_cast<std::size_t>(v.index)));
}

LocalField completion(const GlobalField& K, const Place& v) {
  if (K.is_number_field()) {
    if (v.kind != PlaceKind::Finite) throw UnsupportedField("completion at an archimedean place");
    const int p = static_cast<int>(v.prime);
    if (v.splitting == Splitting::Split) return LocalField::base(p, BaseKind::PAdic);
    if (v.splitting == Splitting::Inert && p == 2) {
      return LocalField::quadratic(p, BaseKind::PAdic, quadratic_poly(-1, (1 - K.d()) / 4));
    }
    return LocalField::quadratic(p, BaseKind::PAdic, quadratic_poly(0, -K.d()));
  }
  require_prime_q(K);
  const int p = static_cast<int>(K.q());
  if (v.kind == PlaceKind::Infinite) {
    if (v.splitting == Splitting::Ramified) return LocalField::quadratic(p, BaseKind::Laurent, "x^2-t");
    return LocalField::base(p, BaseKind::Laurent);
  }
  if (v.below.degree() != 1) throw UnsupportedField("completions at places of degree > 1 over F_q(t)");
  const int c = pmod(-v.below.coeff(0), p);
  switch (v.splitting) {
    case Splitting::Split:
      return LocalField::base(p, BaseKind::Laurent);
    case Splitting::Inert:
      return LocalField::quadratic(p, BaseKind::Laurent, quadratic_poly(0, -K.f().evaluate(c)));
    case Splitting::Ramified:
      // f(t + c) = t g(t) and g(0) = f'(c); the unit g(t)/g(0) is a square.
      return LocalField::quadratic(p, BaseKind::Laurent,
                                   "x^2-" + std::to_string(K.f().derivative().evaluate(c)) + "*t");
  }
  throw UnsupportedField("completion");
}

int different_exponent(const GlobalField& K, const Place& v) {
  if (v.is_archimedean()) return 0;
  switch (K.kind()) {
    case FieldKind::Rational:
      return 0;
    case FieldKind::QuadraticNumber:
      return v.splitting == Splitting::Ramified ? valuation_of(K.order().discriminant(), v.prime) : 0;
    case FieldKind::RationalFunction:
      return v.kind == PlaceKind::Infinite ? -2 : 0;
    case FieldKind::Hyperelliptic:
      if (v.kind == PlaceKind::Infinite) return -2 * v.e + (v.e - 1);
      return v.splitting == Splitting::Ramified ? 1 : 0;
  }
  return 0;
}

PosRealExact absolute_discriminant(const GlobalField& K) {
  switch (K.kind()) {
    case FieldKind::Rational:
      return PosRealExact();
    case FieldKind::QuadraticNumber:
      return PosRealExact::from_rational(Rational(std::abs(K.order().discriminant())));
    case FieldKind::RationalFunction:
    case FieldKind::Hyperelliptic:
      return PosRealExact::prime_power(K.characteristic(), Rational(K.q_exponent() * (2 * K.genus() - 2)));
  }
  return PosRealExact();
}

PosRealExact relative_discriminant_norm(const GlobalField& L, const GlobalField& K) {
  if (L == K) return PosRealExact();
  if (!(L.base() == K)) throw NotAnExtension(L.to_string() + " is not a supported extension of " + K.to_string());
  return absolute_discriminant(L) / absolute_discriminant(K).pow(Rational(L.degree()));
}

PosRealExact discriminant_from_completions(const GlobalField& L) {
  if (L.kind() != FieldKind::QuadraticNumber) throw UnsupportedField("discriminant_from_completions needs a quadratic number field");
  PosRealExact out;
  // Only primes dividing 4d can ramify, but every prime up to 4|d| is visited.
  const std::int64_t bound = 4 * std::abs(L.d());
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& w : places_above(L, p)) {
      LocalField C = completion(L, w);
      out = out * PosRealExact::prime_power(p, Rational(C.disc_exponent()));
    }
  }
  return out;
}

// ---- ideles ---------------------------------------------------------------

ArchComponent ArchComponent::from_double(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ParseError("archimedean component must be a positive real");
  return {x, std::nullopt};
}

LogValue ArchComponent::log() const {
  if (exact) return exact->log();
  return LogValue::real(std::log(value));
}

ArchComponent operator*(const ArchComponent& a, const ArchComponent& b) {
  if (a.exact && b.exact) return ArchComponent::from_exact(*a.exact * *b.exact);
  return {a.value * b.value, std::nullopt};
}

ArchComponent ArchComponent::inverse() const {
  if (exact) return from_exact(exact->inverse());
  return {1.0 / value, std::nullopt};
}

int Idele::valuation_at(const Place& v) const {
  auto it = n_.find(v);
  return it == n_.end() ? 0 : it->second;
}

ArchComponent Idele::archimedean_at(const Place& v) const {
  auto it = arch_.find(v);
  return it == arch_.end() ? ArchComponent() : it->second;
}

void Idele::set_valuation(const Place& v, int n) {
  if (v.is_archimedean()) throw std::invalid_argument("integer valuation at an archimedean place");
  if (n == 0) {
    n_.erase(v);
  } else {
    n_[v] = n;
  }
}

void Idele::set_archimedean(const Place& v, ArchComponent a) {
  if (!v.is_archimedean()) throw std::invalid_argument("real component at a non-archimedean place");
  if (!(a.value > 0.0)) throw std::invalid_argument("archimedean component must be positive");
  if (a.exact && a.exact->is_one()) {
    arch_.erase(v);
  } else {
    arch_[v] = a;
  }
}

Idele Idele::parse(const GlobalField& K, const std::string& text) {
  Idele out(K);
  std::string s = trim(text);
  if (s.empty() || s == "trivial" || s == "1") return out;
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  items.push_back(cur);
  for (const auto& raw : items) {
    std::string item = trim(raw);
    if (item.empty()) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw ParseError("idele entry must be '<place>:<value>': '" + item + "'");
    Place v = place_from_label(K, item.substr(0, colon));
    std::string value = trim(item.substr(colon + 1));
    if (v.is_archimedean()) {
      ArchComponent a;
      if (auto r = exact_decimal(value); r && *r > Rational(0)) {
        a = ArchComponent::from_exact(PosRealExact::from_rational(*r));
      } else {
        try {
          std::size_t used = 0;
          double x = std::stod(value, &used);
          if (used != value.size()) throw ParseError("");
          a = ArchComponent::from_double(x);
        } catch (const std::logic_error&) {
          throw ParseError("bad archimedean component '" + value + "'");
        }
      }
      out.set_archimedean(v, a * out.archimedean_at(v));
    } else {
      try {
        std::size_t used = 0;
        int n = std::stoi(value, &used);
        if (used != value.size()) throw ParseError("");
        out.set_valuation(v, out.valuation_at(v) + n);
      } catch (const std::logic_error&) {
        throw ParseError("bad valuation '" + value + "' at " + v.label());
      }
    }
  }
  return out;
}

std::string Idele::to_string() const {
  if (is_trivial()) return "trivial";
  std::vector<std::string> parts;
  for (const auto& [v, n] : n_) parts.push_back(v.label() + ":" + std::to_string(n));
  for (const auto& [v, a] : arch_) {
    std::optional<Rational> r;
    if (a.exact) r = a.exact->as_rational();
    if (r) {
      parts.push_back(v.label() + ":" + adelic::to_string(*r));
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", a.value);
      parts.push_back(v.label() + ":" + buf);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

Idele Idele::inverse() const {
  Idele out(field_);
  for (const auto& [v, n] : n_) out.n_[v] = -n;
  for (const auto& [v, a] : arch_) out.arch_[v] = a.inverse();
  return out;
}

Idele operator*(const Idele& a, const Idele& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("ideles of different fields");
  Idele out = a;
  for (const auto& [v, n] : b.n_) out.set_valuation(v, out.valuation_at(v) + n);
  for (const auto& [v, x] : b.arch_) out.set_archimedean(v, out.archimedean_at(v) * x);
  return out;
}

// ---- divisors -------------------------------------------------------------

LogValue Divisor::degree() const {
  LogValue out;
  for (const auto& [v, c] : finite) out -= Rational(c) * v.log_norm();
  for (const auto& [v, c] : archimedean) out -= Rational(v.arch_weight()) * c;
  return out;
}

int Divisor::classical_degree() const {
  if (!field.is_function_field()) throw UnsupportedField("classical degree of a number-field divisor");
  int out = 0;
  for (const auto& [v, c] : finite) out -= c * v.norm_exponent / field.q_exponent();
  return out;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [v, c] : b.finite) {
    int s = out.finite[v] + c;
    if (s == 0) out.finite.erase(v);
    else out.finite[v] = s;
  }
  for (const auto& [v, c] : b.archimedean) out.archimedean[v] += c;
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  if (!(a.field == b.field) || a.finite != b.finite) return false;
  std::vector<Place> keys;
  for (const auto& [v, c] : a.archimedean) keys.push_back(v);
  for (const auto& [v, c] : b.archimedean) keys.push_back(v);
  for (const auto& v : keys) {
    auto ia = a.archimedean.find(v);
    auto ib = b.archimedean.find(v);
    LogValue ca = ia == a.archimedean.end() ? LogValue() : ia->second;
    LogValue cb = ib == b.archimedean.end() ? LogValue() : ib->second;
    if (!ca.equals(cb, 1e-12)) return false;
  }
  return true;
}

Divisor divisor_of_idele(const Idele& alpha) {
  Divisor D{alpha.field(), alpha.valuations(), {}};
  for (const auto& [v, a] : alpha.archimedean()) D.archimedean[v] = -a.log();
  return D;
}

Idele idele_of_divisor(const Divisor& D) {
  Idele out(D.field);
  for (const auto& [v, c] : D.finite) out.set_valuation(v, c);
  for (const auto& [v, c] : D.archimedean) {
    ArchComponent a;
    if (c.real_part() == 0.0) {
      PosRealExact x;
      for (const auto& [p, e] : c.symbolic()) x = x * PosRealExact::prime_power(p, -e);
      a = ArchComponent::from_exact(x);
    } else {
      a = ArchComponent::from_double(std::exp(-c.to_double()));
    }
    out.set_archimedean(v, a);
  }
  return out;
}

LogValue idele_log_norm(const Idele& alpha) {
  LogValue out;
  for (const auto& [v, n] : alpha.valuations()) out -= Rational(n) * v.log_norm();
  for (const auto& [v, a] : alpha.archimedean()) out += Rational(v.arch_weight()) * a.log();
  return out;
}

Idele principal_idele(const GlobalField& K, const QuadElement& x) {
  if (!K.is_number_field()) throw UnsupportedField("principal_idele(QuadElement) needs a number field");
  if (x.is_zero()) throw std::domain_error("principal idele of zero");
  Idele out(K);
  if (K.kind() == FieldKind::Rational) {
    if (x.x1 != Rational(0)) throw std::invalid_argument("element outside Q");
    for (std::int64_t part : {x.x0.numerator(), x.x0.denominator()}) {
      for (auto [p, k] : factorize(part)) {
        Place v = places_above(K, p).front();
        out.set_valuation(v, valuation_of(x.x0.numerator(), p) - valuation_of(x.x0.denominator(), p));
      }
    }
    Rational a = x.x0 < Rational(0) ? -x.x0 : x.x0;
    out.set_archimedean(infinite_places(K).front(), ArchComponent::from_exact(PosRealExact::from_rational(a)));
    return out;
  }
  const QuadraticOrder& O = K.order();
  std::int64_t D = std::lcm(x.x0.denominator(), x.x1.denominator());
  QuadElement y{x.x0 * Rational(D), x.x1 * Rational(D)};
  Rational Ny = norm(O, y);
  std::vector<std::int64_t> primes;
  for (std::int64_t part : {Ny.numerator(), D}) {
    for (auto [p, k] : factorize(part)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::int64_t p : primes) {
    for (const auto& v : places_above(K, p)) {
      FractionalIdeal P = prime_ideal(K, v);
      int k = 0;
      FractionalIdeal Pk = P;
      while (Pk.contains(y)) {
        ++k;
        Pk = Pk * P;
      }
      out.set_valuation(v, k - v.e * valuation_of(D, p));
    }
  }
  const Rational Nx = norm(O, x);
  const auto arch = infinite_places(K);
  if (K.d() < 0) {
    Rational a = Nx < Rational(0) ? -Nx : Nx;
    out.set_archimedean(arch[0], ArchComponent::from_exact(PosRealExact::from_rational(a).pow(Rational(1, 2))));
  } else if (x.x1 == Rational(0)) {
    Rational a = x.x0 < Rational(0) ? -x.x0 : x.x0;
    for (const auto& v : arch) out.set_archimedean(v, ArchComponent::from_exact(PosRealExact::from_rational(a)));
  } else {
    out.set_archimedean(arch[0], ArchComponent::from_double(std::abs(embed(O, x, +1))));
    out.set_archimedean(arch[1], ArchComponent::from_double(std::abs(embed(O, x, -1))));
  }
  return out;
}

Idele principal_idele(const GlobalField& K, const FpPoly& num, const FpPoly& den) {
  if (K.kind() != FieldKind::RationalFunction) throw UnsupportedField("principal_idele(num, den) needs F_q(t)");
  require_prime_q(K);
  if (num.is_zero() || den.is_zero()) throw std::domain_error("principal idele of zero or infinity");
  Idele out(K);
  for (const auto& [P, k] : FpPoly::factor(num)) {
    Place v = places_above(K, P).front();
    out.set_valuation(v, out.valuation_at(v) + k);
  }
  for (const auto& [P, k] : FpPoly::factor(den)) {
    Place v = places_above(K, P).front();
    out.set_valuation(v, out.valuation_at(v) - k);
  }
  out.set_valuation(infinite_places(K).front(), den.degree() - num.degree());
  return out;
}

Idele canonical_idele(const GlobalField& K) {
  Idele out(K);
  std::vector<Place> candidates;
  switch (K.kind()) {
    case FieldKind::Rational:
      break;
    case FieldKind::QuadraticNumber:
      for (auto [p, k] : factorize(K.order().discriminant())) {
        for (const auto& v : places_above(K, p)) candidates.push_back(v);
      }
      break;
    case FieldKind::RationalFunction:
      candidates = infinite_places(K);
      break;
    case FieldKind::Hyperelliptic:
      candidates = infinite_places(K);
      for (const auto& [P, k] : FpPoly::factor(K.f())) {
        for (const auto& v : places_above(K, P)) candidates.push_back(v);
      }
      break;
  }
  for (const auto& v : candidates) out.set_valuation(v, -different_exponent(K, v));
  return out;
}

FractionalIdeal ideal_of_idele(const Idele& alpha) {
  const GlobalField& K = alpha.field();
  if (K.kind() != FieldKind::QuadraticNumber) throw UnsupportedField("ideal_of_idele needs a quadratic number field");
  FractionalIdeal I(K.order());
  for (const auto& [v, n] : alpha.valuations()) I = I * prime_ideal(K, v).pow(n);
  return I;
}

}  // namespace adelic
