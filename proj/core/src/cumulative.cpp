#include "kglab/cumulative.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "kglab/errors.hpp"

namespace kglab {

namespace {

constexpr int kStencil = 8;

// Weights w[o][m] = int_o^{o+1} l_m(tau) d tau for Lagrange basis on nodes 0..7.
using WeightTable = std::array<std::array<double, kStencil>, kStencil - 1>;

const WeightTable& cell_weights() {
  static const WeightTable table = [] {
    WeightTable t{};
    // 4-point Gauss-Legendre is exact for degree 7.
    const std::array<double, 4> gx = {-0.8611363115940526, -0.3399810435848563,
                                      0.3399810435848563, 0.8611363115940526};
    const std::array<double, 4> gw = {0.3478548451374538, 0.6521451548625461,
                                      0.6521451548625461, 0.3478548451374538};
    for (int o = 0; o < kStencil - 1; ++o) {
      for (int m = 0; m < kStencil; ++m) {
        double acc = 0.0;
        for (int q = 0; q < 4; ++q) {
          const double tau = o + 0.5 * (gx[q] + 1.0);
          double l = 1.0;
          for (int i = 0; i < kStencil; ++i) {
            if (i != m) l *= (tau - i) / static_cast<double>(m - i);
          }
          acc += 0.5 * gw[q] * l;
        }
        t[o][m] = acc;
      }
    }
    return t;
  }();
  return table;
}

double log_cosh(double y) {
  const double a = std::fabs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

double log_abs_sinh(double y) {
  const double a = std::fabs(y);
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  if (a < 0.5) return std::log(std::sinh(a));
  return a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0);
}

struct LogWeight {
  double log_mag;
  double sign;
};

LogWeight weight_at(HyperbolicWeight w, double y) {
  double lm = 0.0;
  double sg = 1.0;
  if (w.cosh_power != 0) lm += w.cosh_power * log_cosh(y);
  if (w.sinh_power != 0) {
    lm += w.sinh_power * log_abs_sinh(y);
    if (y < 0.0 && (w.sinh_power % 2 != 0)) sg = -1.0;
  }
  return {lm, sg};
}

}  // namespace

RealVector hyperbolic_cumulative(const Grid& grid, std::span<const double> g,
                                 HyperbolicWeight num, HyperbolicWeight den, double scale) {
  const std::size_t n = grid.size();
  if (g.size() != n) throw DomainError("cumulative integral: field size mismatch");
  if (den.sinh_power != 0) throw DomainError("cumulative integral: denominator must be cosh^k");
  if (n < static_cast<std::size_t>(kStencil)) {
    throw DomainError("cumulative integral: grid too small for the local rule");
  }

  std::vector<double> lnum(n), snum(n), lden(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto wn = weight_at(num, grid.x(j));
    lnum[j] = wn.log_mag;
    snum[j] = wn.sign;
    lden[j] = weight_at(den, grid.x(j)).log_mag;
  }

  const auto& table = cell_weights();
  const double dx = grid.dx();
  // int over cell [x_c, x_{c+1}] of num(y) g(y) / den(x_t).
  auto cell_integral = [&](std::size_t c, std::size_t t) {
    std::size_t s = c >= 3 ? c - 3 : 0;
    if (s + kStencil > n) s = n - kStencil;
    const auto& w = table[c - s];
    double acc = 0.0;
    for (int m = 0; m < kStencil; ++m) {
      const std::size_t i = s + static_cast<std::size_t>(m);
      if (g[i] == 0.0) continue;
      acc += w[m] * snum[i] * std::exp(lnum[i] - lden[t]) * g[i];
    }
    return acc * dx;
  };

  RealVector out(n, 0.0);
  const std::size_t z = grid.zero_index();
  for (std::size_t j = z; j + 1 < n; ++j) {
    out[j + 1] = std::exp(lden[j] - lden[j + 1]) * out[j] + cell_integral(j, j + 1);
  }
  for (std::size_t j = z; j > 0; --j) {
    out[j - 1] = std::exp(lden[j] - lden[j - 1]) * out[j] - cell_integral(j - 1, j - 1);
  }
  if (scale != 1.0) {
    for (double& v : out) v *= scale;
  }
  return out;
}

RealVector cumulative_integral(const Grid& grid, std::span<const double> g) {
  return hyperbolic_cumulative(grid, g, {}, {});
}

}  // namespace kglab
