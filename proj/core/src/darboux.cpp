#include "kglab/darboux.hpp"

#include <cmath>
#include <numbers>

#include "kglab/cumulative.hpp"
#include "kglab/errors.hpp"

namespace kglab {

namespace {
constexpr double kPi = std::numbers::pi;
}

RealVector apply_darboux(const Spectral& sp, const SolitonFrame& fr, DarbouxKind kind,
                         std::span<const double> u) {
  RealVector du = sp.derivative(u, 1);
  const double sgn = (kind == DarbouxKind::D1 || kind == DarbouxKind::D2) ? 1.0 : -1.0;
  const double c = (kind == DarbouxKind::D1 || kind == DarbouxKind::D1Adj) ? 1.0 : 2.0;
  for (std::size_t j = 0; j < du.size(); ++j) du[j] = sgn * du[j] + c * fr.K[j] * u[j];
  return du;
}

RealVector apply_d1d2(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u) {
  const RealVector d1 = sp.derivative(u, 1);
  RealVector out = sp.derivative(u, 2);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += 3.0 * fr.K[j] * d1[j] + 2.0 * u[j];
  return out;
}

RealVector apply_d2adj_d1adj(const Spectral& sp, const SolitonFrame& fr,
                             std::span<const double> u) {
  const RealVector d1 = sp.derivative(u, 1);
  RealVector out = sp.derivative(u, 2);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double k = fr.K[j];
    out[j] += -3.0 * k * d1[j] + (2.0 * k * k - fr.sech2[j]) * u[j];
  }
  return out;
}

RealVector i1_apply(const Grid& grid, std::span<const double> g) {
  return hyperbolic_cumulative(grid, g, {1, 0}, {1, 0});
}

RealVector i2_apply(const Grid& grid, std::span<const double> g) {
  return hyperbolic_cumulative(grid, g, {2, 0}, {2, 0});
}

RealVector j_apply(const Grid& grid, std::span<const double> g) {
  RealVector a = i1_apply(grid, g);
  const RealVector b = hyperbolic_cumulative(grid, g, {1, 1}, {2, 0});
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = std::tanh(grid.x(j)) * a[j] - b[j];
  return a;
}

RealVector i1_tilde_apply(const Grid& grid, std::span<const double> h) {
  return hyperbolic_cumulative(grid, h, {0, 1}, {1, 0}, -1.0);
}

RealVector j_tilde_apply(const Grid& grid, std::span<const double> h) {
  return hyperbolic_cumulative(grid, h, {0, 2}, {2, 0}, -0.5);
}

RealVector reconstruct(const SolitonFrame& fr, std::span<const double> w, double f0, double fp0) {
  RealVector f = j_apply(fr.grid, w);
  for (std::size_t j = 0; j < f.size(); ++j) f[j] += f0 / kC0 * fr.Y0[j] + fp0 / kC1 * fr.Y1[j];
  return f;
}

TildeSplitResiduals tilde_split_check(const Spectral& sp, const SolitonFrame& fr,
                                      std::span<const double> g) {
  const Grid& grid = fr.grid;
  const RealVector dg = sp.derivative(g, 1);
  const RealVector i1 = i1_apply(grid, g);
  const RealVector i1t = i1_tilde_apply(grid, dg);
  const RealVector jj = j_apply(grid, g);
  const RealVector jt = j_tilde_apply(grid, dg);
  const RealVector tail = i2_apply(grid, i1_tilde_apply(grid, dg));
  TildeSplitResiduals r;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double k = fr.K[j];
    r.i1 = std::max(r.i1, std::fabs(i1[j] - (k * g[j] + i1t[j])));
    r.j = std::max(r.j, std::fabs(jj[j] - (0.5 * k * k * g[j] + jt[j] + tail[j])));
    r.j_short = std::max(r.j_short, std::fabs(jj[j] - (0.5 * k * k * g[j] + jt[j])));
  }
  return r;
}

namespace multipliers {

double m(int j, double xi) {
  const double x2 = xi * xi;
  switch (j) {
    case 0: return -1.0 / (2.0 * (1.0 + x2));
    case 1: return xi / (2.0 * (1.0 + x2));
    case 2: return 1.0 / (2.0 * (4.0 + x2));
    case 3: return xi / (2.0 * (1.0 + x2));
    case 4: return (2.0 - x2) / ((1.0 + x2) * (4.0 + x2));
    case 5: return -3.0 * xi / (2.0 * (1.0 + x2) * (4.0 + x2));
    case 6: return -3.0 / (2.0 * (1.0 + x2) * (4.0 + x2));
    default: throw DomainError("multiplier index must be in 0..6");
  }
}

double omega(int j, double xi) {
  const double a = 0.5 * kPi * xi;
  switch (j) {
    case 1: return 1.0 / std::cosh(a);
    case 2: return xi / std::cosh(a);
    case 3: return std::fabs(a) < 1e-8 ? 2.0 / kPi : xi / std::sinh(a);
    default: throw DomainError("omega index must be 1, 2 or 3");
  }
}

double Omega(double xi) { return 1.0 / std::sinh(0.5 * kPi * xi); }

}  // namespace multipliers

SpectralFunction continuous_ft(const Grid& grid, std::span<const double> f) {
  RealVector xs = grid.xs();
  RealVector vals(f.begin(), f.end());
  const double norm = grid.dx() / std::sqrt(2.0 * kPi);
  return [xs = std::move(xs), vals = std::move(vals), norm](double eta) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (vals[j] == 0.0) continue;
      acc += vals[j] * Complex(std::cos(xs[j] * eta), -std::sin(xs[j] * eta));
    }
    return acc * norm;
  };
}

namespace {

// int m_j(eta) fhat(eta) d eta on a uniform midpoint grid.
Complex moment(int j, const SpectralFunction& fhat, const PvQuadratureOptions& opt) {
  const auto nodes = static_cast<long>(std::ceil(opt.cutoff / opt.step));
  Complex acc = 0.0;
  for (long i = -nodes; i < nodes; ++i) {
    const double eta = (static_cast<double>(i) + 0.5) * opt.step;
    acc += multipliers::m(j, eta) * fhat(eta);
  }
  return acc * opt.step;
}

Complex pv_complex(const std::function<Complex(double)>& h, double xi,
                   const PvQuadratureOptions& opt) {
  const double re = pv_omega_convolution([&](double e) { return h(e).real(); }, xi, opt);
  const double im = pv_omega_convolution([&](double e) { return h(e).imag(); }, xi, opt);
  return {re, im};
}

}  // namespace

Complex i1_fourier_regular_part(const SpectralFunction& fhat, double xi,
                                const PvQuadratureOptions& opt) {
  return Complex(0.0, 1.0) * multipliers::omega(1, xi) * moment(1, fhat, opt);
}

Complex i1_fourier_via_kernel(const SpectralFunction& fhat, double xi,
                              const PvQuadratureOptions& opt) {
  return Complex(0.0, -2.0 * multipliers::m(1, xi)) * fhat(xi) +
         i1_fourier_without_local_term(fhat, xi, opt);
}

Complex i1_fourier_without_local_term(const SpectralFunction& fhat, double xi,
                                      const PvQuadratureOptions& opt) {
  const Complex sing =
      pv_complex([&](double eta) { return multipliers::m(0, eta) * fhat(eta); }, xi, opt);
  return Complex(0.0, 1.0) * sing + i1_fourier_regular_part(fhat, xi, opt);
}

Complex j_fourier_via_kernel(const SpectralFunction& fhat, double xi,
                             const PvQuadratureOptions& opt) {
  const Complex delta_part = multipliers::m(4, xi) * fhat(xi);
  const Complex pv_part =
      pv_complex([&](double eta) { return multipliers::m(5, eta) * fhat(eta); }, xi, opt);
  // omega3 * (m6 fhat), a regular convolution.
  Complex reg = 0.0;
  const auto nodes = static_cast<long>(std::ceil(opt.cutoff / opt.step));
  for (long i = -nodes; i < nodes; ++i) {
    const double eta = xi + (static_cast<double>(i) + 0.5) * opt.step;
    reg += multipliers::omega(3, xi - eta) * multipliers::m(6, eta) * fhat(eta);
  }
  reg *= opt.step;
  return delta_part + pv_part + reg + multipliers::omega(3, xi) * moment(2, fhat, opt) +
         multipliers::omega(2, xi) * moment(3, fhat, opt);
}

KernelCheck fourier_kernel_check(const Spectral& sp, KernelOperator op, std::span<const double> f,
                                 const SpectralFunction& fhat, std::size_t k,
                                 const PvQuadratureOptions& opt) {
  const Grid& grid = sp.grid();
  if (k >= grid.size()) throw DomainError("kernel check: lattice index out of range");
  const RealVector image = op == KernelOperator::I1 ? i1_apply(grid, f) : j_apply(grid, f);
  const ComplexVector hat = sp.forward(std::span<const double>(image));
  KernelCheck r;
  r.xi = grid.xi(k);
  r.direct = hat[k];
  r.via_kernel = op == KernelOperator::I1 ? i1_fourier_via_kernel(fhat, r.xi, opt)
                                          : j_fourier_via_kernel(fhat, r.xi, opt);
  r.residual = std::abs(r.direct - r.via_kernel);
  return r;
}

}  // namespace kglab
