#include "adelic/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "adelic/errors.hpp"

namespace adelic {

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      c += (sum - t) + x;
    } else {
      c += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + c; }
};

}  // namespace

double smallest_eigenvalue(const std::vector<std::vector<double>>& g) {
  if (g.size() == 1) return g[0][0];
  if (g.size() != 2) throw std::invalid_argument("smallest_eigenvalue supports dimension 1 and 2");
  double tr = g[0][0] + g[1][1];
  double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  double hi = tr / 2 + disc;
  // det / hi avoids cancellation in tr/2 - disc.
  return det / hi;
}

ThetaResult theta_sum(const std::vector<std::vector<double>>& columns, const ThetaParams& params) {
  if (!(params.tolerance > 0.0)) throw std::invalid_argument("theta tolerance must be positive");
  const std::size_t n = columns.size();
  if (n != 1 && n != 2) throw std::invalid_argument("theta_sum supports lattices of rank 1 and 2");
  std::vector<std::vector<double>> G(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < columns[i].size(); ++k) G[i][j] += columns[i][k] * columns[j][k];
    }
  }
  const double lambda = smallest_eigenvalue(G);
  if (!(lambda > 0.0)) throw std::invalid_argument("theta lattice is degenerate");

  // sum_{Q(x) > R^2} e^{-pi Q} <= e^{-pi R^2 / 2} sum_x e^{-pi Q / 2}
  //                            <= e^{-pi R^2 / 2} (1 + sqrt(2 / lambda))^n.
  const double C = std::pow(1.0 + std::sqrt(2.0 / lambda), static_cast<double>(n));
  const double R2 = std::max(0.0, 2.0 / M_PI * std::log(C / params.tolerance));
  ThetaResult out;
  out.radius = std::sqrt(R2);
  out.tail_bound = std::exp(-M_PI * R2 / 2) * C;

  CompensatedSum acc;
  if (n == 1) {
    const double g = G[0][0];
    const double bound = std::sqrt(R2 / g);
    if (bound > params.max_radius) throw RadiusExceeded("theta enumeration range exceeds max_radius");
    const long k = static_cast<long>(std::floor(bound));
    for (long x = -k; x <= k; ++x) {
      acc.add(std::exp(-M_PI * g * static_cast<double>(x) * static_cast<double>(x)));
      ++out.points;
    }
  } else {
    const double g00 = G[0][0], g01 = G[0][1], g11 = G[1][1];
    const double det = g00 * g11 - g01 * g01;
    // |x_i| <= R sqrt((G^{-1})_ii).
    const double b0 = std::sqrt(R2 * g11 / det);
    const double b1 = std::sqrt(R2 * g00 / det);
    if (b0 > params.max_radius || b1 > params.max_radius)
      throw RadiusExceeded("theta enumeration range exceeds max_radius");
    const long k0 = static_cast<long>(std::floor(b0));
    const double schur = det / g11;
    for (long x0 = -k0; x0 <= k0; ++x0) {
      const double a = static_cast<double>(x0);
      const double rest = R2 - schur * a * a;
      if (rest < 0) continue;
      const double center = -g01 * a / g11;
      const double half = std::sqrt(rest / g11);
      const long lo = static_cast<long>(std::ceil(center - half));
      const long hi = static_cast<long>(std::floor(center + half));
      for (long x1 = lo; x1 <= hi; ++x1) {
        const double b = static_cast<double>(x1);
        acc.add(std::exp(-M_PI * (g00 * a * a + 2 * g01 * a * b + g11 * b * b)));
        ++out.points;
      }
    }
  }
  out.sum = acc.value();
  return out;
}

}  // namespace adelic
