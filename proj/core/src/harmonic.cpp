#include "adelic/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

const Rational kZero(0);
const Rational kOne(1);

Rational mod1(const Rational& r) { return r - Rational(floor_of(r)); }

// Smallest prime factor of d when d is a prime power, else 0.
std::int64_t prime_of_power(std::int64_t d) {
  std::int64_t p = 0;
  for (std::int64_t c = 2; c * c <= d; ++c) {
    if (d % c == 0) {
      p = c;
      break;
    }
  }
  if (p == 0) return d;
  while (d % p == 0) d /= p;
  return d == 1 ? p : 0;
}

// pi^k for k in [lo, hi).
class PowerTable {
 public:
  PowerTable(const LocalField& field, int lo, int hi) : lo_(lo) {
    for (int k = lo; k < hi; ++k) powers_.push_back(LocalElement::uniformizer_power(field, k));
  }
  const LocalElement& operator[](int k) const { return powers_.at(static_cast<std::size_t>(k - lo_)); }

 private:
  int lo_;
  std::vector<LocalElement> powers_;
};

std::vector<LocalElement> digit_lifts(const LocalField& field) {
  std::vector<LocalElement> out;
  for (int d = 0; d < field.residue_cardinality(); ++d) out.push_back(LocalElement::digit_lift(field, d));
  return out;
}

// Angles of chi(-lift(a) lift(b) pi^k), indexed a * q + b. They depend only
// on the field and k, and computing them dominates small transforms, so rows
// are cached.
struct PairingRow {
  std::vector<Rational> angles;
  std::int64_t denominator = 1;
};

std::shared_ptr<const PairingRow> pairing_row(const LocalField& F, int k) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const PairingRow>> cache;
  const auto key = std::make_pair(F.to_config(), k);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int q = static_cast<int>(F.residue_cardinality());
  auto lifts = digit_lifts(F);
  auto row = std::make_shared<PairingRow>();
  row->angles.assign(static_cast<std::size_t>(q * q), kZero);
  LocalElement pk = LocalElement::uniformizer_power(F, k);
  for (int a = 1; a < q; ++a) {
    LocalElement apk = -(lifts[static_cast<std::size_t>(a)] * pk);
    for (int b = 1; b < q; ++b) {
      Rational r = standard_character(apk * lifts[static_cast<std::size_t>(b)]).value();
      row->angles[static_cast<std::size_t>(a * q + b)] = r;
      row->denominator = std::lcm(row->denominator, r.denominator());
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(row)).first->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// CycScalar

CycScalar CycScalar::rational(const Rational& q) { return root(kZero, q); }

CycScalar CycScalar::root(const Rational& angle, const Rational& coefficient) {
  CycScalar out;
  if (coefficient != kZero) out.terms_[mod1(angle)] = coefficient;
  out.canonicalize();
  return out;
}

CycScalar CycScalar::measure(const PosRealExact& m) {
  CycScalar out = rational(kOne);
  out.measure_ = m;
  out.canonicalize();
  return out;
}

CycScalar CycScalar::from_terms(std::map<Rational, Rational> terms, const PosRealExact& m) {
  CycScalar out;
  for (auto& [r, c] : terms) out.terms_[mod1(r)] += c;
  out.measure_ = m;
  out.canonicalize();
  return out;
}

CycScalar CycScalar::from_reduced_terms(std::map<Rational, Rational> terms, const PosRealExact& m) {
  CycScalar out;
  out.terms_ = std::move(terms);
  if (!out.terms_.empty()) out.measure_ = m;
  return out;
}

void CycScalar::canonicalize() {
  if (!measure_.is_one()) {
    auto [whole, rest] = measure_.split_integral();
    measure_ = rest;
    if (whole != kOne) {
      for (auto& [r, c] : terms_) c *= whole;
    }
  }
  std::map<Rational, Rational> out;
  for (const auto& [r, c] : terms_) {
    if (c == kZero) continue;
    const std::int64_t d = r.denominator();
    const std::int64_t p = d > 1 ? prime_of_power(d) : 0;
    if (p != 0 && r >= Rational(p - 1, p)) {
      for (std::int64_t j = 1; j < p; ++j) out[r - Rational(j, p)] -= c;
    } else {
      out[r] += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == kZero ? out.erase(it) : std::next(it);
  }
  terms_ = std::move(out);
  if (terms_.empty()) measure_ = PosRealExact();
}

std::optional<Rational> CycScalar::as_rational() const {
  if (terms_.empty()) return kZero;
  if (!measure_.is_one() || terms_.size() != 1 || terms_.begin()->first != kZero) return std::nullopt;
  return terms_.begin()->second;
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> z = 0.0;
  for (const auto& [r, c] : terms_) {
    z += boost::rational_cast<double>(c) * std::polar(1.0, 2.0 * M_PI * boost::rational_cast<double>(r));
  }
  return z * measure_.to_double();
}

CycScalar CycScalar::scaled(const PosRealExact& m) const {
  if (is_zero()) return *this;
  CycScalar out = *this;
  out.measure_ = measure_ * m;
  out.canonicalize();
  return out;
}

CycScalar CycScalar::times_root(const Rational& angle) const {
  CycScalar out;
  out.measure_ = measure_;
  for (const auto& [r, c] : terms_) out.terms_[mod1(r + angle)] += c;
  out.canonicalize();
  return out;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  os << '(';
  for (const auto& [r, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << adelic::to_string(c);
    if (r != kZero) os << "*e(" << adelic::to_string(r) << ')';
  }
  os << ')';
  if (!measure_.is_one()) os << '*' << measure_.to_string();
  return os.str();
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!(a.measure_ == b.measure_)) {
    throw Error("cannot add scalars with measure factors " + a.measure_.to_string() + " and " +
                b.measure_.to_string());
  }
  CycScalar out = a;
  for (const auto& [r, c] : b.terms_) out.terms_[r] += c;
  out.canonicalize();
  return out;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar CycScalar::operator-() const { return Rational(-1) * *this; }

CycScalar operator*(const Rational& c, const CycScalar& a) {
  if (c == kZero) return CycScalar();
  CycScalar out = a;
  for (auto& [r, x] : out.terms_) x *= c;
  return out;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.is_zero() || b.is_zero()) return CycScalar();
  CycScalar out;
  for (const auto& [r, c] : a.terms_) {
    for (const auto& [s, d] : b.terms_) out.terms_[mod1(r + s)] += c * d;
  }
  out.measure_ = a.measure_ * b.measure_;
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// StepFunction

StepFunction::StepFunction(LocalField field, int support_bound, int level)
    : field_(std::move(field)), M_(support_bound), N_(level) {
  if (M_ + N_ < 0) throw std::invalid_argument("step function needs support_bound + level >= 0");
  count_ = ipow(field_.residue_cardinality(), M_ + N_);
}

CycScalar StepFunction::value(std::int64_t index) const {
  auto it = values_.find(index);
  return it == values_.end() ? CycScalar() : it->second;
}

void StepFunction::set(std::int64_t index, const CycScalar& v) {
  if (index < 0 || index >= count_) throw std::out_of_range("coset index");
  if (v.is_zero()) values_.erase(index);
  else values_[index] = v;
}

void StepFunction::set(std::int64_t index, CycScalar&& v) {
  if (index < 0 || index >= count_) throw std::out_of_range("coset index");
  if (v.is_zero()) {
    values_.erase(index);
  } else if (values_.empty() || values_.rbegin()->first < index) {
    values_.emplace_hint(values_.end(), index, std::move(v));
  } else {
    values_[index] = std::move(v);
  }
}

std::vector<int> StepFunction::digits_of(std::int64_t index) const {
  const std::int64_t q = field_.residue_cardinality();
  std::vector<int> d(static_cast<std::size_t>(M_ + N_));
  for (auto& x : d) {
    x = static_cast<int>(index % q);
    index /= q;
  }
  return d;
}

std::int64_t StepFunction::index_of(const std::vector<int>& digits) const {
  const std::int64_t q = field_.residue_cardinality();
  std::int64_t idx = 0;
  for (std::size_t j = digits.size(); j-- > 0;) idx = idx * q + digits[j];
  return idx;
}

LocalElement StepFunction::representative(std::int64_t index) const {
  auto digits = digits_of(index);
  LocalElement x(field_);
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] == 0) continue;
    x = x + LocalElement::digit_lift(field_, digits[j]) *
                LocalElement::uniformizer_power(field_, -M_ + static_cast<int>(j));
  }
  return x;
}

std::optional<std::int64_t> StepFunction::locate(const LocalElement& x) const {
  if (x.is_exact_zero()) return 0;
  const int n = M_ + N_;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  const int p = field_.prime();
  if (!field_.is_eisenstein()) {
    // Digits of a and b in the base are the residue digits directly.
    for (const BaseElement* c : {&x.a(), &x.b()}) {
      if (!c->has_no_known_digits() && c->start() < -M_) return std::nullopt;
    }
    for (int j = 0; j < n; ++j) {
      int k = -M_ + j;
      int d = x.a().digit(k);
      if (field_.rel_degree() == 2) d += p * x.b().digit(k);
      digits[static_cast<std::size_t>(j)] = d;
    }
    return index_of(digits);
  }
  if (x.valuation() < -M_) return std::nullopt;
  LocalElement z = x;
  for (int j = 0; j < n; ++j) {
    if (z.is_exact_zero()) break;
    int k = -M_ + j;
    LocalElement w = z * LocalElement::uniformizer_power(field_, -k);
    int d = w.a().digit(0);
    digits[static_cast<std::size_t>(j)] = d;
    if (d != 0) z = z - LocalElement::digit_lift(field_, d) * LocalElement::uniformizer_power(field_, k);
  }
  return index_of(digits);
}

CycScalar StepFunction::evaluate(const LocalElement& x) const {
  auto idx = locate(x);
  return idx ? value(*idx) : CycScalar();
}

StepFunction StepFunction::reshaped(int support_bound, int level) const {
  if (support_bound < M_ || level < N_) throw std::invalid_argument("reshape can only enlarge support and refine level");
  StepFunction out(field_, support_bound, level);
  const std::int64_t q = field_.residue_cardinality();
  const std::int64_t low = ipow(q, support_bound - M_);
  const std::int64_t high = ipow(q, level - N_);
  for (const auto& [idx, v] : values_) {
    for (std::int64_t t = 0; t < high; ++t) out.values_[idx * low + t * low * count_] = v;
  }
  return out;
}

std::string StepFunction::to_string() const {
  std::ostringstream os;
  os << "StepFunction(" << field_.name() << ", M=" << M_ << ", N=" << N_ << ") {";
  bool first = true;
  for (const auto& [idx, v] : values_) {
    os << (first ? " " : ", ");
    first = false;
    auto d = digits_of(idx);
    os << '[';
    for (std::size_t j = 0; j < d.size(); ++j) os << (j ? "," : "") << d[j];
    os << "]: " << v.to_string();
  }
  os << " }";
  return os.str();
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  if (!(f.field_ == g.field_)) throw std::invalid_argument("step functions on different fields");
  int M = std::max(f.M_, g.M_);
  int N = std::max(f.N_, g.N_);
  StepFunction a = f.reshaped(M, N);
  StepFunction b = g.reshaped(M, N);
  for (const auto& [idx, v] : b.values_) a.set(idx, a.value(idx) + v);
  return a;
}

StepFunction operator*(const Rational& c, const StepFunction& f) {
  StepFunction out(f.field_, f.M_, f.N_);
  for (const auto& [idx, v] : f.values_) out.set(idx, c * v);
  return out;
}

bool operator==(const StepFunction& f, const StepFunction& g) {
  if (!(f.field_ == g.field_)) return false;
  int M = std::max(f.M_, g.M_);
  int N = std::max(f.N_, g.N_);
  return f.reshaped(M, N).values_ == g.reshaped(M, N).values_;
}

// ---------------------------------------------------------------------------
// Integration and transforms

StepFunction indicator(const LocalField& field, int m) {
  StepFunction f(field, -m, m);
  f.set(0, CycScalar::rational(kOne));
  return f;
}

PosRealExact coset_measure(const LocalField& field, int level) {
  PosRealExact q = PosRealExact::from_rational(Rational(field.residue_cardinality()));
  return q.pow(Rational(-level)) * local_measure(field);
}

CycScalar integrate(const StepFunction& f) {
  CycScalar sum;
  for (const auto& [idx, v] : f.values()) sum = sum + v;
  return sum.scaled(coset_measure(f.field(), f.level()));
}

CycScalar character_coset_integral(const LocalField& field, int m) {
  const int delta = field.different_exponent();
  const int level = std::max(m, -delta);
  StepFunction shape(field, -m, level);
  PowerTable pw(field, m, level);
  auto lifts = digit_lifts(field);
  CycScalar sum;
  for (std::int64_t idx = 0; idx < shape.coset_count(); ++idx) {
    auto digits = shape.digits_of(idx);
    LocalElement x(field);
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (digits[j] != 0) x = x + lifts[static_cast<std::size_t>(digits[j])] * pw[m + static_cast<int>(j)];
    }
    sum = sum + CycScalar::root(standard_character(x));
  }
  return sum.scaled(coset_measure(field, level));
}

StepFunction fourier(const StepFunction& f) {
  const LocalField& F = f.field();
  const int delta = F.different_exponent();
  const int M = f.support_bound();
  const int N = f.level();
  const int n = M + N;
  const int q = static_cast<int>(F.residue_cardinality());
  StepFunction out(F, N + delta, M - delta);
  if (f.values().empty()) return out;

  // Pairing table: angle of chi(-lift(a) lift(b) pi^k), nonzero only for
  // k < -delta since chi is trivial on the inverse different.
  const int kmin = -n - delta;
  const int kmax = -delta;  // exclusive
  std::vector<std::shared_ptr<const PairingRow>> table;
  std::int64_t D = 1;
  for (int k = kmin; k < kmax; ++k) {
    table.push_back(pairing_row(F, k));
    D = std::lcm(D, table.back()->denominator);
  }

  // Common denominators for the input values.
  std::optional<PosRealExact> m_common;
  std::int64_t L = 1;
  for (const auto& [idx, v] : f.values()) {
    if (!m_common) m_common = v.measure_factor();
    else if (!(*m_common == v.measure_factor())) throw Error("step function values have incommensurable measure factors");
    for (const auto& [r, c] : v.terms()) {
      D = std::lcm(D, r.denominator());
      L = std::lcm(L, c.denominator());
    }
  }
  if (D > (1 << 24)) throw Error("angle denominator too large for the dense transform");

  // Integral powers of the measure are folded into the common denominator
  // so emitted scalars are already normalized.
  auto [whole, scale] = (coset_measure(F, N) * *m_common).split_integral();
  const std::int64_t cosets = f.coset_count();

  // Turns a dense vector of numerators (over L) indexed by angle s / D into a
  // CycScalar. When D is a power of p the basis reduction is done here so the
  // map handed to from_terms is already small.
  const std::int64_t Dp = D > 1 ? prime_of_power(D) : 0;
  auto emit = [&](std::int64_t x, std::int64_t* acc) {
    if (Dp != 0) {
      const std::int64_t step = D / Dp;
      for (std::int64_t s = (Dp - 1) * step; s < D; ++s) {
        if (acc[s] == 0) continue;
        for (std::int64_t j = 1; j < Dp; ++j) acc[s - j * step] -= acc[s];
        acc[s] = 0;
      }
    }
    std::map<Rational, Rational> terms;
    for (std::int64_t s = 0; s < D; ++s) {
      if (acc[s] != 0) terms.emplace_hint(terms.end(), Rational(s, D), Rational(acc[s], L) * whole);
    }
    if (Dp == 0) {
      if (!terms.empty()) out.set(x, CycScalar::from_terms(std::move(terms), scale));
    } else if (!terms.empty()) {
      out.set(x, CycScalar::from_reduced_terms(std::move(terms), scale));
    }
  };
  // Angle numerator (over D) of chi(-lift(a) lift(b) pi^k) for output digit i
  // against input digit j; zero once i + j >= n.
  auto pair_phase = [&](int i, int a, int j, int b) -> std::int64_t {
    if (a == 0 || b == 0 || i + j >= n) return 0;
    const Rational& r = table[static_cast<std::size_t>(i + j)]->angles[static_cast<std::size_t>(a * q + b)];
    return r.numerator() * (D / r.denominator());
  };
  auto add_shifted = [D](std::int64_t* dst, const std::int64_t* src, std::int64_t shift) {
    // dst[(s + shift) mod D] += src[s]
    const std::int64_t head = D - shift;
    for (std::int64_t s = 0; s < head; ++s) dst[s + shift] += src[s];
    for (std::int64_t s = head; s < D; ++s) dst[s - head] += src[s];
  };

  if (cosets * D <= (std::int64_t{1} << 22)) {
    // Digit-by-digit evaluation. Output digit i meets input digit j only when
    // i + j < n, so input digit n-1-t can be summed out as soon as output
    // digits 0..t are known. The state after t stages is indexed by
    // Y + q^(n-t) X with X the known output digits and Y the remaining
    // input digits.
    std::vector<std::int64_t> cur(static_cast<std::size_t>(cosets * D), 0);
    std::vector<char> live(static_cast<std::size_t>(cosets), 0);
    for (const auto& [idx, v] : f.values()) {
      std::int64_t* row = cur.data() + idx * D;
      for (const auto& [r, c] : v.terms()) row[r.numerator() * (D / r.denominator())] += c.numerator() * (L / c.denominator());
      live[static_cast<std::size_t>(idx)] = 1;
    }
    std::vector<std::int64_t> next(cur.size());
    std::vector<char> next_live(live.size());
    std::vector<std::int64_t> qpow(static_cast<std::size_t>(n + 1), 1);
    for (int i = 1; i <= n; ++i) qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
    std::vector<int> xd(static_cast<std::size_t>(n));
    std::vector<std::int64_t> shift(static_cast<std::size_t>(q));
    for (int t = 0; t < n; ++t) {
      const int j = n - 1 - t;
      const std::int64_t qj = qpow[static_cast<std::size_t>(j)];
      std::fill(next.begin(), next.end(), 0);
      std::fill(next_live.begin(), next_live.end(), 0);
      for (std::int64_t X = 0; X < qpow[static_cast<std::size_t>(t + 1)]; ++X) {
        std::int64_t rest = X;
        for (int i = 0; i <= t; ++i) {
          xd[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
          rest /= q;
        }
        for (int b = 0; b < q; ++b) {
          std::int64_t ph = 0;
          for (int i = 0; i <= t; ++i) ph += pair_phase(i, xd[static_cast<std::size_t>(i)], j, b);
          shift[static_cast<std::size_t>(b)] = ph % D;
        }
        const std::int64_t X_old = X % qpow[static_cast<std::size_t>(t)];
        for (std::int64_t Y = 0; Y < qj; ++Y) {
          const std::int64_t dst = Y + qj * X;
          for (int b = 0; b < q; ++b) {
            const std::int64_t src = Y + b * qj + qj * q * X_old;
            if (!live[static_cast<std::size_t>(src)]) continue;
            add_shifted(next.data() + dst * D, cur.data() + src * D, shift[static_cast<std::size_t>(b)]);
            next_live[static_cast<std::size_t>(dst)] = 1;
          }
        }
      }
      cur.swap(next);
      live.swap(next_live);
    }
    for (std::int64_t x = 0; x < cosets; ++x) {
      if (live[static_cast<std::size_t>(x)]) emit(x, cur.data() + x * D);
    }
    return out;
  }

  // Direct evaluation for shapes whose staged state would not fit in memory.
  struct Input {
    std::vector<int> digits;
    std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (slot, numerator over L)
  };
  std::vector<Input> inputs;
  inputs.reserve(f.values().size());
  for (const auto& [idx, v] : f.values()) {
    Input in{f.digits_of(idx), {}};
    for (const auto& [r, c] : v.terms()) {
      in.terms.emplace_back(r.numerator() * (D / r.denominator()), c.numerator() * (L / c.denominator()));
    }
    inputs.push_back(std::move(in));
  }
  std::vector<std::int64_t> acc(static_cast<std::size_t>(D), 0);
  for (std::int64_t x = 0; x < out.coset_count(); ++x) {
    auto xd = out.digits_of(x);
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& in : inputs) {
      std::int64_t ph = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) ph += pair_phase(i, xd[static_cast<std::size_t>(i)], j, in.digits[static_cast<std::size_t>(j)]);
      }
      for (const auto& [slot, num] : in.terms) acc[static_cast<std::size_t>((ph + slot) % D)] += num;
    }
    emit(x, acc.data());
  }
  return out;
}

std::vector<std::int64_t> negation_permutation(const StepFunction& f) {
  const LocalField& F = f.field();
  const int p = F.prime();
  const bool laurent = F.base_kind() == BaseKind::Laurent;
  std::vector<std::int64_t> perm(static_cast<std::size_t>(f.coset_count()));
  if (!F.is_eisenstein()) {
    // Negate base digits of each component directly (complement with
    // carry for Z_p, digitwise for F_p[[t]]).
    auto negate = [&](std::vector<int> c) {
      bool seen = false;
      for (auto& d : c) {
        if (laurent) d = (p - d) % p;
        else if (seen) d = p - 1 - d;
        else if (d != 0) {
          d = p - d;
          seen = true;
        }
      }
      return c;
    };
    for (std::int64_t idx = 0; idx < f.coset_count(); ++idx) {
      auto d = f.digits_of(idx);
      std::vector<int> a(d.size());
      std::vector<int> b(d.size());
      for (std::size_t j = 0; j < d.size(); ++j) {
        a[j] = d[j] % p;
        b[j] = d[j] / p;
      }
      a = negate(std::move(a));
      b = negate(std::move(b));
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = a[j] + p * b[j];
      perm[static_cast<std::size_t>(idx)] = f.index_of(d);
    }
    return perm;
  }
  for (std::int64_t idx = 0; idx < f.coset_count(); ++idx) {
    auto loc = f.locate(-f.representative(idx));
    if (!loc) throw Error("negation left the support");
    perm[static_cast<std::size_t>(idx)] = *loc;
  }
  return perm;
}

InversionReport compare_inversion(const StepFunction& f, const StepFunction& double_transform,
                                  std::size_t max_witnesses) {
  InversionReport report;
  const StepFunction g = double_transform.reshaped(std::max(f.support_bound(), double_transform.support_bound()),
                                                   std::max(f.level(), double_transform.level()));
  const StepFunction h = f.reshaped(g.support_bound(), g.level());
  auto perm = negation_permutation(h);
  for (std::int64_t idx = 0; idx < h.coset_count(); ++idx) {
    ++report.cosets_checked;
    CycScalar expected = h.value(idx);
    CycScalar actual = g.value(perm[static_cast<std::size_t>(idx)]);
    if (!(expected == actual)) {
      report.pass = false;
      if (report.witnesses.size() < max_witnesses) report.witnesses.push_back({h.digits_of(idx), expected, actual});
    }
  }
  return report;
}

InversionReport verify_inversion(const StepFunction& f) { return compare_inversion(f, fourier(fourier(f))); }

std::vector<LemmaCheck> verify_lemmas(const LocalField& field, int m_lo, int m_hi) {
  const int delta = field.different_exponent();
  std::vector<LemmaCheck> out;
  for (int m = m_lo; m <= m_hi; ++m) {
    LemmaCheck c;
    c.m = m;
    const PosRealExact mu = coset_measure(field, m);
    c.character_integral = character_coset_integral(field, m);
    c.character_expected = m >= -delta ? CycScalar::measure(mu) : CycScalar();
    c.character_ok = c.character_integral == c.character_expected;
    StepFunction expected = indicator(field, -m - delta);
    StepFunction scaled(field, expected.support_bound(), expected.level());
    scaled.set(0, CycScalar::measure(mu));
    c.transform_ok = fourier(indicator(field, m)) == scaled;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace adelic
