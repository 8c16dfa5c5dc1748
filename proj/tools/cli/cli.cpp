#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adelic/errors.hpp"
#include "adelic/euler.hpp"
#include "adelic/global_fields.hpp"
#include "adelic/harmonic.hpp"
#include "adelic/local_fields.hpp"
#include "random_inputs.hpp"

namespace adelic::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json value_json(const LogValue& v, const std::string& provenance) {
  Json sym = Json::array();
  for (const auto& [p, c] : v.symbolic()) sym.push_back({p, to_string(c)});
  return {{"symbolic", sym}, {"real", v.real_part()}, {"value", v.to_double()}, {"provenance", provenance}};
}

// A field argument naming a readable file is a descriptor: key = value lines
// with kind (rational, quadratic, rational-function, hyperelliptic) and d, q
// or q and f as needed. '#' starts a comment.
std::string field_literal(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::map<std::string, std::string> kv;
  std::string line;
  auto trim = [](std::string x) {
    auto b = x.find_first_not_of(" \t\r");
    auto e = x.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("field descriptor line without '=': " + line);
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("field descriptor lacks '") + key + "'");
    return it->second;
  };
  const std::string kind = need("kind");
  if (kind == "rational") return "Q";
  if (kind == "quadratic") return "Q(sqrt " + need("d") + ")";
  if (kind == "rational-function") return "Fq(t) q=" + need("q");
  if (kind == "hyperelliptic") return "hyperelliptic q=" + need("q") + " f=" + need("f");
  throw ParseError("unknown field kind '" + kind + "'");
}

GlobalField parse_field(const std::string& arg) { return GlobalField::parse(field_literal(arg)); }

GlobalField base_field_of(const RunConfig& c, const GlobalField& L) {
  if (c.base.empty()) return L.base();
  return parse_field(c.base);
}

ThetaParams theta_params(const RunConfig& c) { return {c.tolerance, c.max_radius}; }

void print_report(const Report& r, const RunConfig& c, std::ostream& out) {
  if (c.output == "json") {
    out << report_json(r, c.seed) << "\n";
    return;
  }
  out << "check:      " << r.check << "\n"
      << "field:      " << r.field << "\n"
      << "idele:      " << r.idele << "\n"
      << "lhs:        " << log_value_text(r.lhs) << "\n"
      << "rhs:        " << log_value_text(r.rhs) << "\n"
      << "difference: " << fmt((r.lhs - r.rhs).to_double()) << "\n"
      << "comparison: " << (r.exact ? "exact-symbolic" : "float") << ", tolerance " << fmt(r.tolerance) << "\n";
  if (r.lattice_points_used) out << "lattice points: " << r.lattice_points_used << "\n";
  if (!r.detail.empty()) out << "detail:     " << r.detail << "\n";
  out << "result:     " << (r.pass ? "PASS" : "FAIL") << "\n";
}

int describe(const RunConfig& c, std::ostream& out) {
  GlobalField K = parse_field(c.field);
  PosRealExact d = absolute_discriminant(K);
  Idele kappa = canonical_idele(K);
  std::vector<std::string> inf;
  for (const auto& v : infinite_places(K)) {
    std::string kind = v.kind == PlaceKind::Real ? "real" : v.kind == PlaceKind::Complex ? "complex" : "infinite";
    if (v.kind == PlaceKind::Infinite) kind += v.splitting == Splitting::Ramified ? ", ramified" : ", unramified";
    inf.push_back(v.label() + " (" + kind + ")");
  }
  const char* kinds[] = {"rational", "quadratic number field", "rational function field", "hyperelliptic function field"};
  const LogValue chi1 = chi(K, Idele(K));
  if (c.output == "json") {
    Json j;
    j["field"] = K.to_string();
    j["kind"] = kinds[static_cast<int>(K.kind())];
    j["degree"] = K.degree();
    if (K.is_number_field()) {
      auto [r1, r2] = K.signature();
      j["signature"] = {r1, r2};
    } else {
      j["q"] = K.q();
      j["genus"] = K.genus();
    }
    j["discriminant"] = value_json(d.log(), "exact-symbolic");
    j["kappa"] = kappa.to_string();
    j["infinite_places"] = inf;
    j["chi_trivial"] = value_json(chi1, "exact-symbolic");
    out << j.dump() << "\n";
    return kOk;
  }
  out << "field:         " << K.to_string() << "\n"
      << "kind:          " << kinds[static_cast<int>(K.kind())] << "\n"
      << "degree:        " << K.degree() << "\n";
  if (K.is_number_field()) {
    auto [r1, r2] = K.signature();
    out << "signature:     (" << r1 << ", " << r2 << ")\n";
  } else {
    out << "q:             " << K.q() << "\n"
        << "genus:         " << K.genus() << "\n";
  }
  out << "d_K:           " << d.to_string() << " (= " << fmt(d.to_double()) << ")\n"
      << "kappa:         " << kappa.to_string() << "\n"
      << "infinite:      ";
  for (std::size_t i = 0; i < inf.size(); ++i) out << (i ? ", " : "") << inf[i];
  out << "\n"
      << "chi(D_1):      " << log_value_text(chi1) << "\n";
  return kOk;
}

int value_command(const RunConfig& c, std::ostream& out) {
  GlobalField K = parse_field(c.field);
  Idele a = Idele::parse(K, c.idele);
  LogValue v;
  std::string provenance = "exact-symbolic";
  std::size_t points = 0;
  std::string label = K.to_string();
  if (c.command == "chi") {
    v = chi(K, a);
  } else if (c.command == "chi-rel") {
    GlobalField B = base_field_of(c, K);
    v = chi_relative(K, B, a);
    label += " / " + B.to_string();
  } else {
    SectionSum s = h0_detail(K, a, theta_params(c));
    points = s.lattice_points;
    v = s.value;
    if (c.command == "h1") v = v - chi(K, a);
    if (K.is_number_field()) provenance = "float(" + fmt(c.tolerance) + ")";
  }
  if (c.output == "json") {
    Json j;
    j["command"] = c.command;
    j["field"] = label;
    j["idele"] = a.to_string();
    j["value"] = value_json(v, provenance);
    if (points) j["lattice_points_used"] = points;
    out << j.dump() << "\n";
  } else {
    out << c.command << "(" << label << ", " << a.to_string() << ") = " << log_value_text(v) << "\n";
  }
  return kOk;
}

int verify_lemmas_command(const RunConfig& c, std::ostream& out) {
  bool all = true;
  std::vector<LocalField> fields;
  if (!c.local.empty()) {
    fields.push_back(LocalField::parse(c.local));
  } else {
    for (BaseKind kind : {BaseKind::PAdic, BaseKind::Laurent}) {
      fields.push_back(LocalField::base(c.p, kind));
      for (const auto& poly : standard_quadratic_models(c.p, kind)) fields.push_back(LocalField::quadratic(c.p, kind, poly));
    }
  }
  for (const auto& F : fields) {
    for (const auto& chk : verify_lemmas(F, c.range_lo, c.range_hi)) {
      bool ok = chk.character_ok && chk.transform_ok;
      all = all && ok;
      if (c.output == "json") {
        Json j;
        j["check"] = "lemmas";
        j["field"] = F.to_config();
        j["m"] = chk.m;
        j["character_integral"] = chk.character_integral.to_string();
        j["character_expected"] = chk.character_expected.to_string();
        j["character_ok"] = chk.character_ok;
        j["transform_ok"] = chk.transform_ok;
        j["pass"] = ok;
        out << j.dump() << "\n";
      } else {
        out << (ok ? "PASS " : "FAIL ") << F.name() << " m=" << chk.m << "  integral " << chk.character_integral.to_string()
            << (chk.character_ok ? "" : " expected " + chk.character_expected.to_string())
            << (chk.transform_ok ? "" : "  transform mismatch") << "\n";
      }
    }
  }
  if (c.output != "json") out << (all ? "all lemma checks passed" : "lemma checks FAILED") << "\n";
  return all ? kOk : kVerificationFailed;
}

int verify_inversion_command(const RunConfig& c, std::ostream& out) {
  LocalField F = LocalField::parse(c.local.empty() ? "p=" + std::to_string(c.p) + " base=padic" : c.local);
  std::mt19937_64 rng(c.seed);
  bool all = true;
  for (int trial = 0; trial < c.trials; ++trial) {
    StepFunction f = random_step_function(F, rng);
    InversionReport rep = verify_inversion(f);
    all = all && rep.pass;
    if (c.output == "json") {
      Json j;
      j["check"] = "inversion";
      j["field"] = F.to_config();
      j["trial"] = trial;
      j["support_bound"] = f.support_bound();
      j["level"] = f.level();
      j["cosets_checked"] = rep.cosets_checked;
      j["pass"] = rep.pass;
      j["seed"] = c.seed;
      Json w = Json::array();
      for (const auto& x : rep.witnesses) w.push_back({{"digits", x.digits}, {"expected", x.expected.to_string()}, {"actual", x.actual.to_string()}});
      j["witnesses"] = w;
      out << j.dump() << "\n";
    } else {
      out << (rep.pass ? "PASS " : "FAIL ") << F.name() << " trial " << trial << " (M=" << f.support_bound()
          << ", N=" << f.level() << ", " << rep.cosets_checked << " cosets)\n";
      for (const auto& x : rep.witnesses) {
        out << "  witness digits [";
        for (std::size_t i = 0; i < x.digits.size(); ++i) out << (i ? "," : "") << x.digits[i];
        out << "] expected " << x.expected.to_string() << " got " << x.actual.to_string() << "\n";
      }
    }
  }
  return all ? kOk : kVerificationFailed;
}

int verify_command(const RunConfig& c, std::ostream& out) {
  const std::string& s = c.subcommand;
  if (s == "lemmas") return verify_lemmas_command(c, out);
  if (s == "inversion") return verify_inversion_command(c, out);
  GlobalField K = parse_field(c.field);
  Idele a = Idele::parse(K, c.idele);
  Report r;
  if (s == "rr") {
    r = verify_rr(K, a);
  } else if (s == "rr-rel") {
    r = verify_rr_relative(K, base_field_of(c, K), a);
  } else if (s == "serre") {
    r = verify_serre(K, a, theta_params(c), c.serre_tolerance);
  } else if (s == "poisson") {
    r = verify_poisson(K, a, theta_params(c), std::max(c.tolerance, 1e-12) * 10);
  } else {
    throw ParseError("unknown verification '" + s + "'");
  }
  print_report(r, c, out);
  return r.pass ? kOk : kVerificationFailed;
}

int suite_command(const RunConfig& c, std::ostream& out) {
  auto results = run_suite(c);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (c.output == "json") {
      Json j;
      j["check"] = r.name;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      j["seed"] = c.seed;
      j["runtime_ms"] = r.runtime_ms;
      out << j.dump() << "\n";
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    }
  }
  if (c.output == "json") {
    Json j;
    j["summary"] = {{"checks", results.size()}, {"failed", failed}, {"seed", c.seed}};
    out << j.dump() << "\n";
  } else {
    out << results.size() - failed << "/" << results.size() << " checks passed (seed " << c.seed << ")\n";
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

int fourier_command(const RunConfig& c, std::ostream& out) {
  LocalField F = LocalField::parse(c.local.empty() ? "p=" + std::to_string(c.p) + " base=padic" : c.local);
  StepFunction hat = fourier(indicator(F, c.m));
  if (c.output == "json") {
    Json j;
    j["field"] = F.to_config();
    j["m"] = c.m;
    j["support_bound"] = hat.support_bound();
    j["level"] = hat.level();
    Json values = Json::array();
    for (const auto& [i, v] : hat.values()) values.push_back({i, v.to_string()});
    j["values"] = values;
    out << j.dump() << "\n";
  } else {
    out << "transform of 1_{pi^" << c.m << " O} on " << F.name() << ":\n" << hat.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like a..b: '" + text + "'");
  try {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw ParseError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + text + "'");
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (!(c.tolerance > 0.0)) throw ParseError("--tol must be positive");
    if (c.output != "text" && c.output != "json") throw ParseError("--output must be text or json");
    if (c.command == "describe") return describe(c, out);
    if (c.command == "chi" || c.command == "h0" || c.command == "h1" || c.command == "chi-rel") return value_command(c, out);
    if (c.command == "verify") return verify_command(c, out);
    if (c.command == "suite") return suite_command(c, out);
    if (c.command == "fourier") return fourier_command(c, out);
    throw ParseError("unknown command '" + c.command + "'");
  } catch (const UnsupportedField& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const NotAnExtension& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedPolynomial& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics, h0 and h1 of Arakelov divisors on global fields of degree <= 2"};
  app.set_config("--config", "", "Read flags from a TOML/INI file");
  app.require_subcommand(1);
  RunConfig c;
  std::string range = "-3..3";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "Field literal (Q, Q(i), Q(sqrt d), Fq(t) q=<q>, hyperelliptic q=<q> f=<coeffs>) or descriptor file")
        ->capture_default_str();
    sub->add_option("--idele", c.idele, "Idele literal: trivial, or 'p5#0:2, inf#0:3.5'")->capture_default_str();
    sub->add_option("--tol", c.tolerance, "Theta truncation tolerance")->capture_default_str();
    sub->add_option("--max-radius", c.max_radius, "Largest coordinate range of theta enumeration")->capture_default_str();
    sub->add_option("--output", c.output, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", c.seed, "Seed for randomized checks")->capture_default_str();
  };
  std::vector<CLI::App*> subs;
  for (const char* name : {"describe", "chi", "h0", "h1", "chi-rel"}) {
    auto* sub = app.add_subcommand(name, std::string("Compute ") + name);
    common(sub);
    if (std::string(name) == "chi-rel") sub->add_option("--base", c.base, "Base field K (default: prime field)");
    subs.push_back(sub);
  }
  auto* verify = app.add_subcommand("verify", "Run one identity check");
  verify->add_option("check", c.subcommand, "rr, rr-rel, serre, poisson, lemmas, inversion")
      ->required()
      ->check(CLI::IsMember({"rr", "rr-rel", "serre", "poisson", "lemmas", "inversion"}));
  common(verify);
  verify->add_option("--base", c.base, "Base field for rr-rel");
  verify->add_option("--serre-tol", c.serre_tolerance, "Acceptance threshold for serre")->capture_default_str();
  verify->add_option("--p", c.p, "Residue characteristic for lemmas and inversion")->capture_default_str();
  verify->add_option("--range", range, "m range a..b for lemmas")->capture_default_str();
  verify->add_option("--local", c.local, "Local field config, e.g. 'p=5 base=padic poly=x^2-5'");
  verify->add_option("--trials", c.trials, "Random functions for inversion")->capture_default_str();

  auto* suite = app.add_subcommand("suite", "Run the full verification battery");
  suite->add_option("--output", c.output, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  suite->add_option("--seed", c.seed, "Seed")->capture_default_str();
  suite->add_flag("--negative-control", c.negative_control, "Append a check that must fail");

  auto* fourier_cmd = app.add_subcommand("fourier", "Transform of an indicator 1_{pi^m O}");
  fourier_cmd->add_option("--local", c.local, "Local field config");
  fourier_cmd->add_option("--p", c.p, "Prime for Q_p when --local is absent")->capture_default_str();
  fourier_cmd->add_option("--m", c.m, "Exponent m")->capture_default_str();
  fourier_cmd->add_option("--output", c.output, "text or json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    std::tie(c.range_lo, c.range_hi) = parse_range(range);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace adelic::cli
