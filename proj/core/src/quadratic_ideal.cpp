#include "adelic/quadratic_ideal.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace adelic {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("ideal arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// s*a + t*b = g = gcd(a, b) >= 0.
void ext_gcd(i128 a, i128 b, i128& g, i128& s, i128& t) {
  i128 old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    i128 q = old_r / r;
    i128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

i128 pmod128(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuadraticOrder QuadraticOrder::of(std::int64_t d) {
  QuadraticOrder O;
  O.d = d;
  if (((d % 4) + 4) % 4 == 1) {
    O.T = 1;
    O.N = (1 - d) / 4;
  } else {
    O.T = 0;
    O.N = -d;
  }
  return O;
}

std::complex<double> QuadraticOrder::embed_w(int sign) const {
  std::complex<double> root = d > 0 ? std::complex<double>(std::sqrt(static_cast<double>(d)), 0.0)
                                    : std::complex<double>(0.0, std::sqrt(static_cast<double>(-d)));
  root *= static_cast<double>(sign);
  return T == 1 ? (1.0 + root) / 2.0 : root;
}

QuadElement add(const QuadraticOrder&, const QuadElement& a, const QuadElement& b) {
  return {a.x0 + b.x0, a.x1 + b.x1};
}

QuadElement multiply(const QuadraticOrder& O, const QuadElement& a, const QuadElement& b) {
  // (a0 + a1 w)(b0 + b1 w), w^2 = T w - N.
  Rational t = a.x1 * b.x1;
  return {a.x0 * b.x0 - Rational(O.N) * t, a.x0 * b.x1 + a.x1 * b.x0 + Rational(O.T) * t};
}

QuadElement conjugate(const QuadraticOrder& O, const QuadElement& a) { return {a.x0 + Rational(O.T) * a.x1, -a.x1}; }

Rational norm(const QuadraticOrder& O, const QuadElement& a) {
  // (x0 + x1 w)(x0 + x1 w') = x0^2 + T x0 x1 + N x1^2.
  return a.x0 * a.x0 + Rational(O.T) * a.x0 * a.x1 + Rational(O.N) * a.x1 * a.x1;
}

std::complex<double> embed(const QuadraticOrder& O, const QuadElement& a, int sign) {
  return boost::rational_cast<double>(a.x0) + boost::rational_cast<double>(a.x1) * O.embed_w(sign);
}

FractionalIdeal::FractionalIdeal(QuadraticOrder O) : O_(O) {}

FractionalIdeal FractionalIdeal::from_generators(const QuadraticOrder& O, const std::int64_t (*vecs)[2], std::size_t n,
                                                 std::int64_t den) {
  i128 a = 0, b = 0, c = 0;
  for (std::size_t k = 0; k < n; ++k) {
    i128 u = vecs[k][0];
    i128 v = vecs[k][1];
    if (v == 0) {
      a = gcd128(a, u);
      continue;
    }
    if (c == 0) {
      b = u;
      c = v;
      continue;
    }
    i128 g, s, t;
    ext_gcd(c, v, g, s, t);
    i128 rem = (v / g) * b - (c / g) * u;
    a = gcd128(a, rem);
    b = s * b + t * u;
    c = g;
  }
  if (c < 0) {
    c = -c;
    b = -b;
  }
  if (a == 0 || c == 0) throw std::invalid_argument("generators do not span a full lattice");
  b = pmod128(b, a);
  i128 g = gcd128(gcd128(a, b), gcd128(c, den));
  FractionalIdeal I(O);
  I.a_ = narrow(a / g);
  I.b_ = narrow(b / g);
  I.c_ = narrow(c / g);
  I.den_ = narrow(den / g);
  return I;
}

FractionalIdeal FractionalIdeal::prime_with_root(const QuadraticOrder& O, std::int64_t p, std::int64_t r) {
  const std::int64_t v[2][2] = {{p, 0}, {-r, 1}};
  return from_generators(O, v, 2, 1);
}

FractionalIdeal FractionalIdeal::inert_prime(const QuadraticOrder& O, std::int64_t p) {
  const std::int64_t v[2][2] = {{p, 0}, {0, p}};
  return from_generators(O, v, 2, 1);
}

FractionalIdeal FractionalIdeal::principal(const QuadraticOrder& O, const QuadElement& x) {
  if (x.is_zero()) throw std::domain_error("principal ideal of zero");
  std::int64_t D = std::lcm(x.x0.denominator(), x.x1.denominator());
  std::int64_t u = x.x0.numerator() * (D / x.x0.denominator());
  std::int64_t v = x.x1.numerator() * (D / x.x1.denominator());
  // Generators x and x*w.
  QuadElement xw = multiply(O, {Rational(u), Rational(v)}, {Rational(0), Rational(1)});
  const std::int64_t g[2][2] = {{u, v}, {xw.x0.numerator(), xw.x1.numerator()}};
  return from_generators(O, g, 2, D);
}

QuadElement FractionalIdeal::basis(int i) const {
  if (i == 0) return {Rational(a_, den_), Rational(0)};
  return {Rational(b_, den_), Rational(c_, den_)};
}

Rational FractionalIdeal::norm() const {
  return Rational(a_) * Rational(c_) / (Rational(den_) * Rational(den_));
}

bool FractionalIdeal::contains(const QuadElement& x) const {
  Rational y0 = x.x0 * Rational(den_);
  Rational y1 = x.x1 * Rational(den_);
  if (y0.denominator() != 1 || y1.denominator() != 1) return false;
  if (y1.numerator() % c_ != 0) return false;
  i128 k = y1.numerator() / c_;
  return (static_cast<i128>(y0.numerator()) - k * b_) % a_ == 0;
}

FractionalIdeal FractionalIdeal::conjugate() const {
  // conj(u + v w) = (u + v T) - v w.
  const std::int64_t v[2][2] = {{a_, 0}, {narrow(static_cast<i128>(b_) + static_cast<i128>(c_) * O_.T), -c_}};
  return from_generators(O_, v, 2, den_);
}

FractionalIdeal FractionalIdeal::inverse() const {
  // I * conj(I) = N(I) O.
  Rational n = norm();
  FractionalIdeal J = conjugate();
  const i128 scale = n.denominator();
  const std::int64_t v[2][2] = {{narrow(J.a_ * scale), 0}, {narrow(J.b_ * scale), narrow(J.c_ * scale)}};
  return from_generators(O_, v, 2, narrow(static_cast<i128>(J.den_) * n.numerator()));
}

FractionalIdeal FractionalIdeal::pow(int k) const {
  FractionalIdeal base = k < 0 ? inverse() : *this;
  FractionalIdeal out(O_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

FractionalIdeal operator*(const FractionalIdeal& I, const FractionalIdeal& J) {
  if (!(I.O_ == J.O_)) throw std::invalid_argument("ideals of different fields");
  const QuadraticOrder& O = I.O_;
  auto mul = [&](std::int64_t u1, std::int64_t v1, std::int64_t u2, std::int64_t v2, std::int64_t out[2]) {
    i128 t = static_cast<i128>(v1) * v2;
    out[0] = narrow(static_cast<i128>(u1) * u2 - t * O.N);
    out[1] = narrow(static_cast<i128>(u1) * v2 + static_cast<i128>(v1) * u2 + t * O.T);
  };
  std::int64_t g[4][2];
  mul(I.a_, 0, J.a_, 0, g[0]);
  mul(I.a_, 0, J.b_, J.c_, g[1]);
  mul(I.b_, I.c_, J.a_, 0, g[2]);
  mul(I.b_, I.c_, J.b_, J.c_, g[3]);
  return FractionalIdeal::from_generators(O, g, 4, narrow(static_cast<i128>(I.den_) * J.den_));
}

std::string FractionalIdeal::to_string() const {
  std::ostringstream os;
  os << "<" << a_ << ", " << b_ << " + " << c_ << "w>";
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

}  // namespace adelic
