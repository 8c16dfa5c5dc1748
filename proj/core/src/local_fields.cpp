#include "adelic/local_fields.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

int sat_add(int a, int b) {
  if (a == kExactPrecision || b == kExactPrecision) return kExactPrecision;
  return a + b;
}

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw std::domain_error("no inverse modulo " + std::to_string(p));
}

int pmod(std::int64_t a, int p) {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

bool is_square_mod(int a, int p) {
  a = pmod(a, p);
  for (int x = 0; x < p; ++x) {
    if ((x * x) % p == a) return true;
  }
  return false;
}

void check_compatible(const BaseElement& x, const BaseElement& y) {
  if (x.prime() != y.prime() || x.kind() != y.kind()) {
    throw std::invalid_argument("base elements of different fields");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseElement

void BaseElement::normalize() {
  if (prec_ != kExactPrecision) {
    int keep = prec_ - start_;
    if (keep < 0) keep = 0;
    if (static_cast<int>(digits_.size()) > keep) digits_.resize(static_cast<std::size_t>(keep));
  }
  std::size_t lead = 0;
  while (lead < digits_.size() && digits_[lead] == 0) ++lead;
  if (lead > 0) {
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<int>(lead);
  }
  while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  if (digits_.empty()) start_ = (prec_ == kExactPrecision) ? 0 : prec_;
}

BaseElement BaseElement::from_digits(int p, BaseKind kind, int start, std::vector<int> digits, int precision) {
  BaseElement out(p, kind);
  for (int d : digits) {
    if (d < 0 || d >= p) throw std::invalid_argument("digit out of range");
  }
  out.start_ = start;
  out.digits_ = std::move(digits);
  out.prec_ = precision;
  out.normalize();
  return out;
}

BaseElement BaseElement::monomial(int p, BaseKind kind, int digit, int exponent) {
  return from_digits(p, kind, exponent, {pmod(digit, p)});
}

BaseElement BaseElement::from_integer(int p, BaseKind kind, std::int64_t n, int relative_precision) {
  if (kind == BaseKind::Laurent) return monomial(p, kind, pmod(n, p), 0);
  if (n < 0) return from_integer(p, kind, -n).negated(relative_precision);
  std::vector<int> digits;
  while (n > 0) {
    digits.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return from_digits(p, kind, 0, std::move(digits));
}

BaseElement BaseElement::from_rational(int p, const Rational& r, int relative_precision) {
  if (r == Rational(0)) return BaseElement(p, BaseKind::PAdic);
  std::int64_t den = r.denominator();
  int k = valuation_of(den, p);
  std::int64_t rest = den / ipow(p, k);
  BaseElement num = from_integer(p, BaseKind::PAdic, r.numerator(), relative_precision);
  if (rest == 1) return num.shifted(-k);
  BaseElement inv = from_integer(p, BaseKind::PAdic, rest).inverse(relative_precision);
  return (num * inv).shifted(-k);
}

int BaseElement::valuation() const {
  if (digits_.empty()) {
    if (is_exact()) return kExactPrecision;
    throw IndeterminateValuation("all known digits are zero (precision " + std::to_string(prec_) + ")");
  }
  return start_;
}

int BaseElement::valuation_lower_bound() const { return digits_.empty() ? prec_ : start_; }

int BaseElement::digit(int k) const {
  if (k >= prec_) throw PrecisionLoss("digit " + std::to_string(k) + " beyond precision " + std::to_string(prec_));
  if (k < start_ || k >= start_ + static_cast<int>(digits_.size())) return 0;
  return digits_[static_cast<std::size_t>(k - start_)];
}

BaseElement BaseElement::truncated(int absolute_precision) const {
  if (absolute_precision >= prec_) return *this;
  BaseElement out = *this;
  out.prec_ = absolute_precision;
  out.normalize();
  return out;
}

BaseElement BaseElement::shifted(int k) const {
  BaseElement out = *this;
  if (!out.digits_.empty()) out.start_ += k;
  out.prec_ = sat_add(prec_, k);
  if (out.digits_.empty()) out.start_ = out.is_exact() ? 0 : out.prec_;
  return out;
}

BaseElement BaseElement::negated(int relative_precision) const {
  if (digits_.empty()) return *this;
  BaseElement out(p_, kind_);
  out.start_ = start_;
  if (kind_ == BaseKind::Laurent) {
    out.digits_.reserve(digits_.size());
    for (int d : digits_) out.digits_.push_back((p_ - d) % p_);
    out.prec_ = prec_;
    out.normalize();
    return out;
  }
  // p-adic complement: p - d at the leading digit, p - 1 - d above it, and an
  // infinite tail of p - 1 that is cut at the working precision.
  int cap = is_exact() ? start_ + relative_precision : prec_;
  out.prec_ = cap;
  for (int e = start_; e < cap; ++e) {
    int d = (e - start_ < static_cast<int>(digits_.size())) ? digits_[static_cast<std::size_t>(e - start_)] : 0;
    out.digits_.push_back(e == start_ ? p_ - d : p_ - 1 - d);
  }
  out.normalize();
  return out;
}

BaseElement operator+(const BaseElement& x, const BaseElement& y) {
  check_compatible(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const int p = x.p_;
  BaseElement out(p, x.kind_);
  out.prec_ = std::min(x.prec_, y.prec_);
  if (x.digits_.empty() && y.digits_.empty()) {
    out.normalize();
    return out;
  }
  int lo = kExactPrecision;
  int hi = std::numeric_limits<int>::min();
  for (const BaseElement* e : {&x, &y}) {
    if (e->digits_.empty()) continue;
    lo = std::min(lo, e->start_);
    hi = std::max(hi, e->start_ + static_cast<int>(e->digits_.size()));
  }
  if (out.prec_ != kExactPrecision) hi = std::min(hi, out.prec_);
  out.start_ = lo;
  auto at = [](const BaseElement& e, int k) {
    int i = k - e.start_;
    return (i >= 0 && i < static_cast<int>(e.digits_.size())) ? e.digits_[static_cast<std::size_t>(i)] : 0;
  };
  int carry = 0;
  for (int k = lo; k < hi; ++k) {
    int s = at(x, k) + at(y, k) + carry;
    out.digits_.push_back(s % p);
    carry = (x.kind_ == BaseKind::PAdic) ? s / p : 0;
  }
  if (carry != 0 && (out.prec_ == kExactPrecision || hi < out.prec_)) out.digits_.push_back(carry);
  out.normalize();
  return out;
}

BaseElement operator-(const BaseElement& x, const BaseElement& y) {
  check_compatible(x, y);
  if (y.is_exact_zero()) return x;
  if (x.kind_ == BaseKind::Laurent || x.is_exact_zero()) return x + y.negated();
  // Schoolbook subtraction with borrows; a borrow out of the top digit means
  // a negative result, whose expansion ends in an infinite run of p - 1.
  const int p = x.p_;
  BaseElement out(p, x.kind_);
  out.prec_ = std::min(x.prec_, y.prec_);
  if (x.digits_.empty() && y.digits_.empty()) {
    out.normalize();
    return out;
  }
  int lo = kExactPrecision;
  int hi = std::numeric_limits<int>::min();
  for (const BaseElement* e : {&x, &y}) {
    if (e->digits_.empty()) continue;
    lo = std::min(lo, e->start_);
    hi = std::max(hi, e->start_ + static_cast<int>(e->digits_.size()));
  }
  if (out.prec_ != kExactPrecision) hi = std::min(hi, out.prec_);
  out.start_ = lo;
  auto at = [](const BaseElement& e, int k) {
    int i = k - e.start_;
    return (i >= 0 && i < static_cast<int>(e.digits_.size())) ? e.digits_[static_cast<std::size_t>(i)] : 0;
  };
  int borrow = 0;
  int first_nonzero = kExactPrecision;
  for (int k = lo; k < hi; ++k) {
    int s = at(x, k) - at(y, k) - borrow;
    borrow = s < 0 ? 1 : 0;
    if (s < 0) s += p;
    if (s != 0 && first_nonzero == kExactPrecision) first_nonzero = k;
    out.digits_.push_back(s);
  }
  if (borrow != 0 && hi >= lo) {
    if (out.prec_ == kExactPrecision) {
      int v = first_nonzero == kExactPrecision ? hi : first_nonzero;
      out.prec_ = std::max(hi, v + kDefaultWorkingPrecision);
    }
    for (int k = hi; k < out.prec_; ++k) out.digits_.push_back(p - 1);
  }
  out.normalize();
  return out;
}

BaseElement operator*(const BaseElement& x, const BaseElement& y) {
  check_compatible(x, y);
  const int p = x.p_;
  if (x.is_exact_zero() || y.is_exact_zero()) return BaseElement(p, x.kind_);
  BaseElement out(p, x.kind_);
  out.prec_ = std::min(sat_add(x.valuation_lower_bound(), y.prec_), sat_add(y.valuation_lower_bound(), x.prec_));
  if (x.digits_.empty() || y.digits_.empty()) {
    out.normalize();
    return out;
  }
  std::vector<std::int64_t> conv(x.digits_.size() + y.digits_.size() - 1, 0);
  for (std::size_t i = 0; i < x.digits_.size(); ++i) {
    if (x.digits_[i] == 0) continue;
    for (std::size_t j = 0; j < y.digits_.size(); ++j) {
      conv[i + j] += static_cast<std::int64_t>(x.digits_[i]) * y.digits_[j];
    }
  }
  out.start_ = x.start_ + y.start_;
  out.digits_.reserve(conv.size() + 4);
  if (x.kind_ == BaseKind::Laurent) {
    for (auto c : conv) out.digits_.push_back(static_cast<int>(c % p));
  } else {
    std::int64_t carry = 0;
    for (auto c : conv) {
      std::int64_t s = c + carry;
      out.digits_.push_back(static_cast<int>(s % p));
      carry = s / p;
    }
    while (carry > 0) {
      out.digits_.push_back(static_cast<int>(carry % p));
      carry /= p;
    }
  }
  out.normalize();
  return out;
}

bool operator==(const BaseElement& x, const BaseElement& y) {
  if (x.p_ != y.p_ || x.kind_ != y.kind_) return false;
  int prec = std::min(x.prec_, y.prec_);
  if (prec == kExactPrecision) return x.start_ == y.start_ && x.digits_ == y.digits_;
  int lo = std::min(x.valuation_lower_bound(), y.valuation_lower_bound());
  for (int k = lo; k < prec; ++k) {
    if (x.digit(k) != y.digit(k)) return false;
  }
  return true;
}

BaseElement BaseElement::inverse(int relative_precision) const {
  int v = valuation();
  if (v == kExactPrecision) throw std::domain_error("inverse of zero");
  BaseElement unit = shifted(-v);
  int rel = relative_precision;
  if (!is_exact()) rel = std::min(rel, prec_ - v);
  BaseElement u = unit.truncated(rel);
  const int inv0 = mod_inverse(u.digit(0), p_);
  BaseElement r = from_integer(p_, kind_, 1);
  std::vector<int> y;
  y.reserve(static_cast<std::size_t>(rel));
  for (int i = 0; i < rel; ++i) {
    int yi = (r.digits_.empty() ? 0 : r.digit(i)) * inv0 % p_;
    y.push_back(yi);
    if (yi != 0) r = (r - monomial(p_, kind_, yi, i) * u).truncated(rel);
  }
  return from_digits(p_, kind_, -v, std::move(y), rel - v);
}

Rational BaseElement::fractional_part() const {
  if (kind_ != BaseKind::PAdic) throw WrongBase("fractional part requires a p-adic element");
  if (prec_ < 0) throw PrecisionLoss("fractional part needs precision >= 0");
  if (digits_.empty() || start_ >= 0) return Rational(0);
  std::int64_t num = 0;
  for (int k = 0; k < -start_; ++k) {
    num = num + digit(start_ + k) * ipow(p_, k);
  }
  return Rational(num, ipow(p_, -start_));
}

int BaseElement::residue_coefficient() const {
  if (kind_ != BaseKind::Laurent) throw WrongBase("residue coefficient requires a Laurent series");
  if (prec_ < 0) throw PrecisionLoss("residue coefficient needs precision >= 0");
  return digit(-1);
}

std::string BaseElement::to_string() const {
  std::ostringstream os;
  const char* var = kind_ == BaseKind::PAdic ? "" : "t";
  bool first = true;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    int e = start_ + static_cast<int>(i);
    os << digits_[i];
    if (e != 0) {
      if (kind_ == BaseKind::PAdic) os << '*' << p_ << '^' << e;
      else os << '*' << var << '^' << e;
    }
  }
  if (first) os << '0';
  if (!is_exact()) {
    os << " + O(" << (kind_ == BaseKind::PAdic ? std::to_string(p_) : std::string("t")) << '^' << prec_ << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// LocalField

struct LocalField::Data {
  int p = 0;
  BaseKind kind = BaseKind::PAdic;
  int degree = 1;
  std::string poly;
  BaseElement c1{2, BaseKind::PAdic};
  BaseElement c0{2, BaseKind::PAdic};
  BaseElement c0inv{2, BaseKind::PAdic};
  int root0 = 0;
  int root1 = 1;
  int e = 1;
  int f = 1;
  int disc = 0;
};

namespace {

// Coefficients of x^i as integer polynomials in t: coeffs[i][j] is the
// coefficient of x^i t^j.
using Bivariate = std::map<int, std::map<int, std::int64_t>>;

Bivariate parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  Bivariate out;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& v) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return false;
    v = std::stoll(s.substr(i, j - i));
    i = j;
    return true;
  };
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + text + "'");
    }
    std::int64_t coeff = 1;
    bool have_factor = false;
    std::int64_t v = 0;
    if (read_int(v)) {
      coeff = v;
      have_factor = true;
    }
    int xdeg = 0;
    int tdeg = 0;
    while (i < s.size() && (s[i] == '*' || s[i] == 'x' || s[i] == 't')) {
      if (s[i] == '*') {
        ++i;
        if (read_int(v)) {
          coeff *= v;
          have_factor = true;
          continue;
        }
        if (i >= s.size() || (s[i] != 'x' && s[i] != 't')) throw ParseError("dangling '*' in '" + text + "'");
      }
      char var = s[i++];
      std::int64_t power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(power)) throw ParseError("missing exponent in '" + text + "'");
      }
      (var == 'x' ? xdeg : tdeg) += static_cast<int>(power);
      have_factor = true;
    }
    if (!have_factor) throw ParseError("malformed term in polynomial '" + text + "'");
    out[xdeg][tdeg] += sign * coeff;
  }
  return out;
}

BaseElement coefficient_element(int p, BaseKind kind, const std::map<int, std::int64_t>& tpoly) {
  if (kind == BaseKind::PAdic) {
    std::int64_t c = 0;
    for (auto [j, v] : tpoly) {
      if (j != 0 && v != 0) throw UnsupportedPolynomial("t appears in a p-adic polynomial");
      if (j == 0) c = v;
    }
    return BaseElement::from_integer(p, kind, c);
  }
  int top = tpoly.empty() ? 0 : tpoly.rbegin()->first;
  std::vector<int> digits(static_cast<std::size_t>(top + 1), 0);
  for (auto [j, v] : tpoly) {
    if (j < 0) throw UnsupportedPolynomial("negative power of t");
    digits[static_cast<std::size_t>(j)] = pmod(v, p);
  }
  return BaseElement::from_digits(p, kind, 0, std::move(digits));
}

std::int64_t constant_term(const std::map<int, std::int64_t>& tpoly) {
  auto it = tpoly.find(0);
  return it == tpoly.end() ? 0 : it->second;
}

}  // namespace

LocalField LocalField::base(int p, BaseKind kind) {
  if (!is_prime(p)) throw std::invalid_argument("local field needs a prime, got " + std::to_string(p));
  auto d = std::make_shared<Data>();
  d->p = p;
  d->kind = kind;
  d->c1 = BaseElement(p, kind);
  d->c0 = BaseElement(p, kind);
  d->c0inv = BaseElement(p, kind);
  return LocalField(std::move(d));
}

LocalField LocalField::quadratic(int p, BaseKind kind, const std::string& polynomial) {
  if (!is_prime(p)) throw std::invalid_argument("local field needs a prime, got " + std::to_string(p));
  Bivariate poly = parse_polynomial(polynomial);
  for (const auto& [xdeg, tpoly] : poly) {
    if (xdeg > 2) throw UnsupportedPolynomial("degree > 2 in '" + polynomial + "'");
  }
  {
    auto lead = poly[2];
    bool monic = true;
    for (auto [j, v] : lead) {
      if ((j == 0 && v != 1) || (j != 0 && v != 0)) monic = false;
    }
    if (lead.empty() || !monic) throw UnsupportedPolynomial("defining polynomial must be monic of degree 2: '" + polynomial + "'");
  }
  const auto& t1 = poly[1];
  const auto& t0 = poly[0];

  auto d = std::make_shared<Data>();
  d->p = p;
  d->kind = kind;
  d->degree = 2;
  d->poly = polynomial;

  BaseElement c1 = coefficient_element(p, kind, t1);
  BaseElement c0 = coefficient_element(p, kind, t0);
  const int r1 = pmod(constant_term(t1), p);
  const int r0 = pmod(constant_term(t0), p);

  auto base_disc_valuation = [&](const BaseElement& a1, const BaseElement& a0) {
    BaseElement disc = a1 * a1 - BaseElement::from_integer(p, kind, 4) * a0;
    return disc.valuation();
  };

  bool irreducible_mod_p = (p == 2) ? (r1 == 1 && r0 == 1) : !is_square_mod(r1 * r1 - 4 * r0, p);
  bool c0_valuation_one = !c0.is_exact_zero() && c0.valuation() == 1;
  bool c1_divisible = c1.is_exact_zero() || c1.valuation() >= 1;

  if (irreducible_mod_p) {
    d->e = 1;
    d->f = 2;
    d->disc = 0;
    d->c1 = c1;
    d->c0 = c0;
  } else if (c1_divisible && c0_valuation_one) {
    if (kind == BaseKind::Laurent && p == 2) {
      throw UnsupportedPolynomial("wildly ramified extensions of F_2((t)) are not supported");
    }
    d->e = 2;
    d->f = 1;
    d->c1 = c1;
    d->c0 = c0;
    d->disc = base_disc_valuation(c1, c0);
  } else if (kind == BaseKind::PAdic && p == 2 && c1_divisible && !c0.is_exact_zero() && c0.valuation() == 0) {
    std::int64_t a1 = constant_term(t1);
    std::int64_t a0 = constant_term(t0);
    std::int64_t s0 = 1 - a1 + a0;
    if (s0 != 0 && valuation_of(s0, 2) == 1) {
      // theta = x + 1 satisfies an Eisenstein polynomial.
      d->e = 2;
      d->f = 1;
      d->root0 = -1;
      d->c1 = BaseElement::from_integer(p, kind, a1 - 2);
      d->c0 = BaseElement::from_integer(p, kind, s0);
      d->disc = base_disc_valuation(c1, c0);
    } else if (a1 == 0 && pmod(-a0, 8) == 5) {
      // x^2 - u with u = 5 mod 8: theta = (x - 1)/2 is a root of y^2 + y + (1 - u)/4.
      d->e = 1;
      d->f = 2;
      d->disc = 0;
      d->root0 = 1;
      d->root1 = 2;
      d->c1 = BaseElement::from_integer(p, kind, 1);
      d->c0 = BaseElement::from_integer(p, kind, (1 + a0) / 4);
    } else {
      throw UnsupportedPolynomial("2-adic polynomial '" + polynomial + "' is not in the validated list");
    }
  } else {
    throw UnsupportedPolynomial("'" + polynomial + "' is neither Eisenstein nor irreducible modulo the prime");
  }
  if (d->e == 2) d->c0inv = d->c0.inverse();
  else d->c0inv = BaseElement(p, kind);
  return LocalField(std::move(d));
}

LocalField LocalField::parse(const std::string& config) {
  std::istringstream is(config);
  std::string token;
  int p = 0;
  std::optional<BaseKind> kind;
  std::string poly;
  while (is >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      // Allow spaces inside the polynomial: append to the previous poly value.
      if (!poly.empty()) {
        poly += token;
        continue;
      }
      throw ParseError("expected key=value in local field config, got '" + token + "'");
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "p") {
      try {
        p = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError("malformed prime '" + value + "'");
      }
    } else if (key == "base") {
      if (value == "padic") kind = BaseKind::PAdic;
      else if (value == "laurent") kind = BaseKind::Laurent;
      else throw ParseError("unknown base kind '" + value + "'");
    } else if (key == "poly") {
      poly = value;
    } else {
      throw ParseError("unknown key '" + key + "' in local field config");
    }
  }
  if (p == 0 || !kind) throw ParseError("local field config needs p=<prime> and base=padic|laurent");
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  return poly.empty() ? base(p, *kind) : quadratic(p, *kind, poly);
}

std::string LocalField::to_config() const {
  std::string s = "p=" + std::to_string(d_->p) + " base=" + (d_->kind == BaseKind::PAdic ? "padic" : "laurent");
  if (d_->degree == 2) s += " poly=" + d_->poly;
  return s;
}

int LocalField::prime() const { return d_->p; }
BaseKind LocalField::base_kind() const { return d_->kind; }
int LocalField::rel_degree() const { return d_->degree; }
int LocalField::ramification_index() const { return d_->e; }
int LocalField::residue_degree() const { return d_->f; }
int LocalField::disc_exponent() const { return d_->disc; }
int LocalField::different_exponent() const { return d_->disc / d_->f; }
std::int64_t LocalField::residue_cardinality() const { return ipow(d_->p, d_->f); }
bool LocalField::is_eisenstein() const { return d_->degree == 2 && d_->e == 2; }
const std::string& LocalField::polynomial() const { return d_->poly; }
const BaseElement& LocalField::model_c1() const { return d_->c1; }
const BaseElement& LocalField::model_c0() const { return d_->c0; }
std::pair<int, int> LocalField::root_form() const { return {d_->root0, d_->root1}; }
const BaseElement& LocalField::c0_inverse() const { return d_->c0inv; }

LocalField LocalField::base_field() const {
  if (d_->degree == 1) return *this;
  return base(d_->p, d_->kind);
}

std::string LocalField::name() const {
  std::string b = d_->kind == BaseKind::PAdic ? "Q_" + std::to_string(d_->p)
                                              : "F_" + std::to_string(d_->p) + "((t))";
  if (d_->degree == 1) return b;
  return b + "[" + d_->poly + "]";
}

bool operator==(const LocalField& a, const LocalField& b) {
  if (a.d_ == b.d_) return true;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  return x.p == y.p && x.kind == y.kind && x.degree == y.degree && x.root0 == y.root0 && x.root1 == y.root1 && x.c1 == y.c1 &&
         x.c0 == y.c0;
}

// ---------------------------------------------------------------------------
// LocalElement

LocalElement::LocalElement(LocalField field)
    : field_(std::move(field)),
      a_(field_.prime(), field_.base_kind()),
      b_(field_.prime(), field_.base_kind()) {}

LocalElement::LocalElement(LocalField field, BaseElement a)
    : field_(std::move(field)), a_(std::move(a)), b_(field_.prime(), field_.base_kind()) {}

LocalElement::LocalElement(LocalField field, BaseElement a, BaseElement b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
  if (field_.rel_degree() == 1 && !b_.is_exact_zero()) {
    throw std::invalid_argument("degree-1 field element with a theta component");
  }
}

LocalElement LocalElement::from_integer(const LocalField& field, std::int64_t n) {
  return LocalElement(field, BaseElement::from_integer(field.prime(), field.base_kind(), n));
}

LocalElement LocalElement::from_rational(const LocalField& field, const Rational& r) {
  if (field.base_kind() != BaseKind::PAdic) {
    if (r.denominator() % field.prime() == 0) throw std::domain_error("rational not defined in characteristic p");
    auto num = BaseElement::from_integer(field.prime(), field.base_kind(), r.numerator());
    auto den = BaseElement::from_integer(field.prime(), field.base_kind(), r.denominator());
    return LocalElement(field, num * den.inverse());
  }
  return LocalElement(field, BaseElement::from_rational(field.prime(), r));
}

LocalElement LocalElement::from_laurent(const LocalField& field, int start, std::vector<int> digits) {
  if (field.base_kind() != BaseKind::Laurent) throw WrongBase("from_laurent on a p-adic field");
  for (int& d : digits) d = pmod(d, field.prime());
  return LocalElement(field, BaseElement::from_digits(field.prime(), field.base_kind(), start, std::move(digits)));
}

LocalElement LocalElement::generator(const LocalField& field) {
  if (field.rel_degree() != 2) throw std::invalid_argument("generator of a degree-1 field");
  const int p = field.prime();
  return LocalElement(field, BaseElement(p, field.base_kind()), BaseElement::from_integer(p, field.base_kind(), 1));
}

LocalElement LocalElement::root(const LocalField& field) {
  auto [r0, r1] = field.root_form();
  return from_integer(field, r0) + from_integer(field, r1) * generator(field);
}

LocalElement LocalElement::uniformizer_power(const LocalField& field, int k) {
  const int p = field.prime();
  const BaseKind kind = field.base_kind();
  if (!field.is_eisenstein()) return LocalElement(field, BaseElement::monomial(p, kind, 1, k));
  LocalElement step = generator(field);
  if (k < 0) {
    // theta^{-1} = -(theta + c1) / c0.
    const BaseElement& inv = field.c0_inverse();
    step = LocalElement(field, -(field.model_c1() * inv), -inv);
    k = -k;
  }
  LocalElement out = from_integer(field, 1);
  for (int i = 0; i < k; ++i) out = out * step;
  return out;
}

LocalElement LocalElement::digit_lift(const LocalField& field, int index) {
  const int p = field.prime();
  if (index < 0 || index >= field.residue_cardinality()) throw std::out_of_range("residue digit index");
  if (field.rel_degree() == 2 && field.residue_degree() == 2) {
    return LocalElement(field, BaseElement::from_integer(p, field.base_kind(), index % p),
                        BaseElement::from_integer(p, field.base_kind(), index / p));
  }
  return from_integer(field, index);
}

int LocalElement::precision() const {
  if (field_.rel_degree() == 1) return a_.precision();
  if (field_.is_eisenstein()) {
    int pa = a_.precision() == kExactPrecision ? kExactPrecision : 2 * a_.precision();
    int pb = b_.precision() == kExactPrecision ? kExactPrecision : 2 * b_.precision() + 1;
    return std::min(pa, pb);
  }
  return std::min(a_.precision(), b_.precision());
}

int LocalElement::valuation() const {
  if (is_exact_zero()) return kExactPrecision;
  const bool eis = field_.is_eisenstein();
  struct Candidate {
    int value;
    bool exact;
  };
  auto scale = [&](int v, bool is_b) {
    if (v == kExactPrecision) return v;
    return eis ? 2 * v + (is_b ? 1 : 0) : v;
  };
  std::vector<Candidate> cands;
  for (int which = 0; which < 2; ++which) {
    const BaseElement& c = which == 0 ? a_ : b_;
    if (c.is_exact_zero()) continue;
    if (c.has_no_known_digits()) cands.push_back({scale(c.precision(), which == 1), false});
    else cands.push_back({scale(c.start(), which == 1), true});
  }
  int best = kExactPrecision;
  for (const auto& c : cands) {
    if (c.exact) best = std::min(best, c.value);
  }
  for (const auto& c : cands) {
    if (!c.exact && c.value < best) {
      throw IndeterminateValuation("valuation not determined at precision " + std::to_string(precision()));
    }
  }
  if (best == kExactPrecision) {
    throw IndeterminateValuation("all known digits are zero (precision " + std::to_string(precision()) + ")");
  }
  return best;
}

int LocalElement::residue_index() const {
  if (valuation() != 0) throw std::domain_error("residue index of a non-unit");
  if (field_.rel_degree() == 2 && field_.residue_degree() == 2) {
    return a_.digit(0) + field_.prime() * b_.digit(0);
  }
  return a_.digit(0);
}

LocalElement LocalElement::truncated(int precision) const {
  if (field_.rel_degree() == 1) return LocalElement(field_, a_.truncated(precision));
  if (field_.is_eisenstein() && precision != kExactPrecision) {
    // a contributes even exponents, b*theta odd ones.
    auto ceil_half = [](int n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); };
    return LocalElement(field_, a_.truncated(ceil_half(precision)), b_.truncated(ceil_half(precision - 1)));
  }
  return LocalElement(field_, a_.truncated(precision), b_.truncated(precision));
}

std::string LocalElement::to_string() const {
  if (field_.rel_degree() == 1) return a_.to_string();
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*theta";
}

LocalElement operator+(const LocalElement& x, const LocalElement& y) {
  return LocalElement(x.field_, x.a_ + y.a_, x.b_ + y.b_);
}

LocalElement operator-(const LocalElement& x, const LocalElement& y) {
  return LocalElement(x.field_, x.a_ - y.a_, x.b_ - y.b_);
}

LocalElement LocalElement::operator-() const { return LocalElement(field_, -a_, -b_); }

LocalElement operator*(const LocalElement& x, const LocalElement& y) {
  if (x.field_.rel_degree() == 1) return LocalElement(x.field_, x.a_ * y.a_);
  // (a + b theta)(c + d theta) with theta^2 = -c1 theta - c0.
  const BaseElement bd = x.b_ * y.b_;
  BaseElement re = x.a_ * y.a_ - x.field_.model_c0() * bd;
  BaseElement im = x.a_ * y.b_ + x.b_ * y.a_ - x.field_.model_c1() * bd;
  return LocalElement(x.field_, std::move(re), std::move(im));
}

// ---------------------------------------------------------------------------
// Module operations

UnitAngle::UnitAngle(const Rational& r) : r_(r - Rational(floor_of(r))) {}

int valuation(const LocalElement& x) { return x.valuation(); }

PosRealExact abs_value(const LocalElement& x) {
  int v = x.valuation();
  if (v == kExactPrecision) throw std::domain_error("abs_value of zero as PosRealExact");
  return PosRealExact::prime_power(x.field().prime(), Rational(-x.field().residue_degree() * v));
}

Rational lambda_fractional(const LocalElement& x) {
  if (x.field().base_kind() != BaseKind::PAdic) throw WrongBase("Lambda is defined on Q_p");
  if (!x.in_base()) throw WrongBase("Lambda needs an element of the base field Q_p");
  return x.a().fractional_part();
}

UnitAngle residue_coefficient_angle(const LocalElement& x) {
  if (x.field().base_kind() != BaseKind::Laurent) throw WrongBase("residue character is defined on F_p((t))");
  if (!x.in_base()) throw WrongBase("residue character needs an element of the base field");
  return UnitAngle(Rational(x.a().residue_coefficient(), x.field().prime()));
}

LocalElement trace_to_base(const LocalElement& x) {
  const LocalField& F = x.field();
  if (F.rel_degree() == 1) return x;
  // Multiplication by x in the basis (1, theta): [[a, -c0 b], [b, a - c1 b]].
  const BaseElement& a = x.a();
  const BaseElement& b = x.b();
  BaseElement m00 = a;
  BaseElement m11 = a - F.model_c1() * b;
  BaseElement tr = m00 + m11;
  if (tr.precision() < 0) throw PrecisionLoss("trace known only to precision " + std::to_string(tr.precision()));
  return LocalElement(F.base_field(), std::move(tr));
}

UnitAngle standard_character(const LocalElement& x) {
  if (x.is_exact_zero()) return UnitAngle();
  LocalElement tr = trace_to_base(x);
  if (tr.field().base_kind() == BaseKind::PAdic) return UnitAngle(-tr.a().fractional_part());
  return UnitAngle(Rational(tr.a().residue_coefficient(), tr.field().prime()));
}

PosRealExact local_measure(const LocalField& field) {
  if (field.disc_exponent() == 0) return PosRealExact();
  return PosRealExact::prime_power(field.prime(), Rational(-field.disc_exponent(), 2));
}

std::vector<std::string> standard_quadratic_models(int p, BaseKind kind) {
  if (!is_prime(p)) throw std::invalid_argument("standard_quadratic_models needs a prime");
  if (p == 2) {
    if (kind == BaseKind::Laurent) return {"x^2+x+1"};
    return {"x^2+x+1", "x^2-5", "x^2-2", "x^2+2", "x^2-6", "x^2+6", "x^2-3", "x^2+1"};
  }
  int n = 2;
  while (is_square_mod(n, p)) ++n;
  const std::string ns = std::to_string(n);
  if (kind == BaseKind::Laurent) return {"x^2-" + ns, "x^2-t", "x^2-" + ns + "*t"};
  const std::string ps = std::to_string(p);
  return {"x^2-" + ns, "x^2-" + ps, "x^2-" + std::to_string(n * p)};
}

}  // namespace adelic
