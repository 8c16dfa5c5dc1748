#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "adelic/euler.hpp"
#include "adelic/global_fields.hpp"
#include "adelic/harmonic.hpp"
#include "adelic/local_fields.hpp"
#include "cli.hpp"
#include "random_inputs.hpp"

namespace adelic::cli {

namespace {

// Runs a check body and times it. The body fills `detail` and returns pass.
CheckResult timed(const std::string& name, const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<LocalField> local_fields_over(int p) {
  std::vector<LocalField> out;
  for (BaseKind kind : {BaseKind::PAdic, BaseKind::Laurent}) {
    out.push_back(LocalField::base(p, kind));
    for (const auto& poly : standard_quadratic_models(p, kind)) out.push_back(LocalField::quadratic(p, kind, poly));
  }
  return out;
}

// Theta checks enumerate about exp(|log norm|) lattice points, so keep the
// random ideles near norm 1.
Idele moderate_idele(const GlobalField& K, std::mt19937_64& rng) {
  for (;;) {
    Idele a = random_idele(K, rng, 2);
    if (std::abs(idele_log_norm(a).to_double()) <= std::log(30.0)) return a;
  }
}

const char* const kNumberFields[] = {"Q", "Q(i)", "Q(sqrt 5)", "Q(sqrt -3)", "Q(sqrt 2)", "Q(sqrt -5)"};
const char* const kFunctionFields[] = {"F2(t)", "F3(t)", "F5(t)"};

}  // namespace

std::vector<CheckResult> run_suite(const RunConfig& config) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(config.seed);
  const ThetaParams theta{1e-12, 4000};

  for (int p : {2, 3, 5}) {
    out.push_back(timed("lemmas/p=" + std::to_string(p), [&](std::string& detail) {
      int checks = 0, bad = 0;
      auto fields = local_fields_over(p);
      for (const auto& F : fields) {
        for (const auto& c : verify_lemmas(F, -3, 3)) {
          ++checks;
          if (!(c.character_ok && c.transform_ok)) {
            if (bad++ == 0) detail = "first failure " + F.name() + " m=" + std::to_string(c.m) + "; ";
          }
        }
      }
      detail += std::to_string(fields.size()) + " fields, " + std::to_string(checks - bad) + "/" + std::to_string(checks) + " ok";
      return bad == 0;
    }));
  }

  for (int p : {2, 3}) {
    for (const auto& F : local_fields_over(p)) {
      out.push_back(timed("inversion/" + F.to_config(), [&](std::string& detail) {
        std::size_t cosets = 0;
        for (int trial = 0; trial < 3; ++trial) {
          auto rep = verify_inversion(random_step_function(F, rng, 729));
          cosets += rep.cosets_checked;
          if (!rep.pass) {
            detail = "mismatch in trial " + std::to_string(trial);
            return false;
          }
        }
        detail = std::to_string(cosets) + " cosets";
        return true;
      }));
    }
  }

  out.push_back(timed("discriminant/completions |d|<=50", [&](std::string& detail) {
    int n = 0;
    for (std::int64_t d = -50; d <= 50; ++d) {
      if (d == 0 || d == 1) continue;
      bool squarefree = true;
      for (const auto& [p, k] : factorize(d)) squarefree = squarefree && k == 1;
      if (!squarefree) continue;
      auto K = GlobalField::quadratic(d);
      ++n;
      if (!(discriminant_from_completions(K) == absolute_discriminant(K))) {
        detail = "d=" + std::to_string(d);
        return false;
      }
    }
    detail = std::to_string(n) + " fields";
    return true;
  }));

  auto all_fields = std::vector<std::string>(std::begin(kNumberFields), std::end(kNumberFields));
  all_fields.insert(all_fields.end(), std::begin(kFunctionFields), std::end(kFunctionFields));
  all_fields.push_back("hyperelliptic q=3 f=1,0,-1,0");
  all_fields.push_back("hyperelliptic q=5 f=1,0,0,0,1");

  for (const auto& lit : all_fields) {
    out.push_back(timed("rr/" + lit, [&](std::string& detail) {
      auto K = GlobalField::parse(lit);
      for (int trial = 0; trial < 50; ++trial) {
        auto a = random_idele(K, rng, 4);
        auto r = verify_rr(K, a);
        if (!r.pass) {
          detail = "idele " + a.to_string();
          return false;
        }
      }
      detail = "50 random ideles";
      return true;
    }));
  }

  for (const auto& lit : all_fields) {
    auto L = GlobalField::parse(lit);
    if (L.degree() != 2) continue;
    out.push_back(timed("rr-rel/" + lit + " over " + L.base().to_string(), [&](std::string& detail) {
      for (int trial = 0; trial < 30; ++trial) {
        auto a = random_idele(L, rng, 4);
        auto r = verify_rr_relative(L, L.base(), a);
        if (!r.pass) {
          detail = "idele " + a.to_string() + ": " + r.detail;
          return false;
        }
      }
      detail = "30 random ideles";
      return true;
    }));
  }

  std::vector<std::string> theta_fields(std::begin(kNumberFields), std::end(kNumberFields));
  theta_fields.insert(theta_fields.end(), std::begin(kFunctionFields), std::end(kFunctionFields));
  for (const auto& lit : theta_fields) {
    out.push_back(timed("serre/" + lit, [&](std::string& detail) {
      auto K = GlobalField::parse(lit);
      double worst = 0.0;
      for (int trial = 0; trial < 8; ++trial) {
        auto a = trial == 0 ? Idele(K) : moderate_idele(K, rng);
        auto r = verify_serre(K, a, theta);
        worst = std::max(worst, std::abs((r.lhs - r.rhs).to_double()));
        if (!r.pass) {
          detail = "idele " + a.to_string() + ", difference " + std::to_string((r.lhs - r.rhs).to_double());
          return false;
        }
      }
      std::ostringstream s;
      s << "8 ideles, max |difference| " << worst;
      detail = s.str();
      return true;
    }));
  }

  for (const char* lit : {"Q", "Q(i)", "Q(sqrt 5)", "Q(sqrt -3)"}) {
    out.push_back(timed(std::string("poisson/") + lit, [&](std::string& detail) {
      auto K = GlobalField::parse(lit);
      for (int trial = 0; trial < 5; ++trial) {
        auto a = trial == 0 ? Idele(K) : moderate_idele(K, rng);
        auto r = verify_poisson(K, a, theta, 1e-9);
        if (!r.pass) {
          detail = "idele " + a.to_string();
          return false;
        }
      }
      detail = "5 ideles";
      return true;
    }));
  }

  for (const char* lit : {"F2(t)", "F3(t)"}) {
    out.push_back(timed(std::string("sections/") + lit, [&](std::string& detail) {
      auto K = GlobalField::parse(lit);
      const std::int64_t q = K.q();
      int n = 0;
      for (int trial = 0; trial < 20; ++trial) {
        auto a = random_idele(K, rng, 2);
        std::int64_t count;
        try {
          count = count_sections_brute_force(K, a, 1 << 16);
        } catch (const std::length_error&) {
          continue;
        }
        ++n;
        Rational ell = h0(K, a).coefficient_of(q);
        std::int64_t expected = ipow(q, static_cast<int>(ell.numerator() / ell.denominator()));
        if (ell.denominator() != 1 || count != expected) {
          detail = "idele " + a.to_string() + ": counted " + std::to_string(count) + ", h0 gives q^" + to_string(ell);
          return false;
        }
      }
      detail = std::to_string(n) + " divisors counted";
      return true;
    }));
  }

  out.push_back(timed("oracle/theta-Q", [&](std::string& detail) {
    auto Q = GlobalField::rational();
    double oracle = 0.0;
    for (int n = 50; n >= -50; --n) oracle += std::exp(-M_PI * n * n);
    double got = h0(Q, Idele(Q), theta).to_double();
    std::ostringstream s;
    s.precision(15);
    s << "h0(Q, 1) = " << got << ", oracle log " << oracle;
    detail = s.str();
    return std::abs(got - std::log(oracle)) < 1e-12;
  }));

  if (config.negative_control) {
    out.push_back(timed("negative-control/serre-trivial-kappa", [&](std::string& detail) {
      // Serre with the canonical idele replaced by 1: h0(1/alpha) against h1(alpha).
      auto K = GlobalField::parse("Q(i)");
      auto a = Idele::parse(K, "p5#0:1");
      double lhs = h0(K, a.inverse(), theta).to_double();
      double rhs = h1(K, a, theta).to_double();
      std::ostringstream s;
      s << "lhs " << lhs << ", rhs " << rhs;
      detail = s.str();
      return std::abs(lhs - rhs) < 1e-8;
    }));
  }
  return out;
}

}  // namespace adelic::cli
