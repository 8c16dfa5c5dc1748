#pragma once

// Gaussian lattice sums  sum_{x in Z^n} exp(-pi |B x|^2)  for n = 1, 2 with
// a certified truncation bound.

#include <cstddef>
#include <vector>

namespace adelic {

struct ThetaParams {
  /// Target absolute error of the truncated sum.
  double tolerance = 1e-10;
  /// Largest allowed coordinate range |x_i| of the enumeration.
  double max_radius = 2000.0;
};

struct ThetaResult {
  double sum = 0.0;
  /// Upper bound on the omitted tail.
  double tail_bound = 0.0;
  double radius = 0.0;
  std::size_t points = 0;
};

/// `columns[j]` is the image of the j-th basis vector. The Gram matrix must be
/// positive definite.
ThetaResult theta_sum(const std::vector<std::vector<double>>& columns, const ThetaParams& params);

/// Smallest eigenvalue of a symmetric positive definite 1x1 or 2x2 matrix.
double smallest_eigenvalue(const std::vector<std::vector<double>>& gram);

}  // namespace adelic
