#pragma once

// Euler characteristic, h^0 and h^1 of Arakelov divisors given by ideles,
// and the identity checks relating them.

#include <cstdint>
#include <optional>
#include <string>

#include "adelic/exact.hpp"
#include "adelic/global_fields.hpp"
#include "adelic/theta.hpp"

namespace adelic {

/// log of the adelic integral of f_alpha, as a product of local factors
/// mu(O_v) |alpha_v|_v. Equals log|alpha| - (1/2) log d_K.
LogValue chi(const GlobalField& K, const Idele& alpha);

/// log(int_{A_L} f_alpha) with the measure normalized by d_{L/K}.
LogValue chi_relative(const GlobalField& L, const GlobalField& K, const Idele& alpha);

struct SectionSum {
  LogValue value;
  std::size_t lattice_points = 0;
  double tail_bound = 0.0;
};

/// h^0 with the truncation data. Number fields sum f_alpha over the lattice
/// prod P_v^(n_v); F_q(t) uses l(D) = max(0, deg D + 1).
SectionSum h0_detail(const GlobalField& K, const Idele& alpha, const ThetaParams& params = {});
LogValue h0(const GlobalField& K, const Idele& alpha, const ThetaParams& params = {});
/// h^0 - chi.
LogValue h1(const GlobalField& K, const Idele& alpha, const ThetaParams& params = {});

/// Counts the elements x of F_q(t), q prime, with v(x) >= n_v everywhere
/// (including 0) by enumerating polynomials. Throws std::length_error when
/// more than `cap` candidates would be needed.
std::int64_t count_sections_brute_force(const GlobalField& K, const Idele& alpha, std::int64_t cap = 1 << 22);

/// Outcome of one identity check. lhs and rhs are log values; an exact check
/// compares symbolic parts exactly and real parts to `tolerance`.
struct Report {
  std::string check;
  std::string field;
  std::string idele;
  LogValue lhs;
  LogValue rhs;
  bool pass = false;
  bool exact = true;
  double tolerance = 0.0;
  std::size_t lattice_points_used = 0;
  double runtime_ms = 0.0;
  std::string detail;
};

/// chi(D_alpha) - chi(D_1) against log|alpha|.
Report verify_rr(const GlobalField& K, const Idele& alpha);
/// Relative RR and chi_{L/K}(D_alpha) = chi_L(D_alpha) - [L:K] chi_K(D_1).
Report verify_rr_relative(const GlobalField& L, const GlobalField& K, const Idele& alpha);
/// h^0(D_{alpha^-1 kappa}) against h^1(D_alpha).
Report verify_serre(const GlobalField& K, const Idele& alpha, const ThetaParams& params = {},
                    double tolerance = 1e-8);
/// -(1/2) log d_K - log|alpha| + h^0(D_{alpha kappa}) against h^0(D_{alpha^-1}),
/// both from direct lattice sums.
Report verify_poisson(const GlobalField& K, const Idele& alpha, const ThetaParams& params = {},
                      double tolerance = 1e-10);

/// One JSON object per report: field, idele, lhs, rhs, pass, tolerance,
/// lattice_points_used, runtime_ms (omitted when include_runtime is false),
/// and seed when given.
std::string report_json(const Report& r, std::optional<std::uint64_t> seed = std::nullopt,
                        bool include_runtime = true);
/// "symbolic + real" rendering used by text output.
std::string log_value_text(const LogValue& v);

}  // namespace adelic
