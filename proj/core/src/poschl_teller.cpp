#include "kglab/poschl_teller.hpp"

#include <cmath>
#include <numbers>

#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(std::numbers::pi);

// Overflow-free sech.
double sech_of(double x) {
  const double e = std::exp(-std::fabs(x));
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double soliton(double x) { return kSqrt2 * sech_of(x); }
double y0_profile(double x) { const double s = sech_of(x); return kC0 * s * s; }
double y1_profile(double x) { return kC1 * sech_of(x) * std::tanh(x); }
double y2_profile(double x) { const double s = sech_of(x); return 1.0 - 1.5 * s * s; }

double alpha_profile(int j, double x) {
  const double s = sech_of(x);
  const double s3 = s * s * s;
  const double s5 = s3 * s * s;
  const double s7 = s5 * s * s;
  const double t = std::tanh(x);
  switch (j) {
    case 1:  // -(9 sqrt2 / 4) sinh^2 (cosh^2 - 5) sech^7
      return -(9.0 * kSqrt2 / 4.0) * t * t * (s3 - 5.0 * s5);
    case 2:  // -(3 sqrt6 / 4) (2 cosh^4 - 15 cosh^2 + 15) sech^7
      return -(3.0 * std::sqrt(6.0) / 4.0) * (2.0 * s3 - 15.0 * s5 + 15.0 * s7);
    case 3:  // (27 sqrt2 / 16) (4 cosh^2 - 5) sech^7
      return (27.0 * kSqrt2 / 16.0) * (4.0 * s5 - 5.0 * s7);
    default:
      throw DomainError("alpha index must be 1, 2 or 3");
  }
}

SolitonFrame SolitonFrame::build(const Grid& grid) {
  SolitonFrame fr;
  fr.grid = grid;
  fr.sech = grid.sample([](double x) { return sech_of(x); });
  fr.sech2 = grid.sample([](double x) { const double s = sech_of(x); return s * s; });
  fr.K = grid.sample([](double x) { return std::tanh(x); });
  fr.Q = grid.sample(soliton);
  fr.Q_x = grid.sample([](double x) { return -kSqrt2 * sech_of(x) * std::tanh(x); });
  fr.Y0 = grid.sample(y0_profile);
  fr.Y1 = grid.sample(y1_profile);
  fr.Y2 = grid.sample(y2_profile);
  fr.Z = grid.sample([](double x) { return kC1 * sech_of(x); });
  fr.G = grid.sample([](double x) { const double t = std::tanh(x); return t * t * y0_profile(x); });
  fr.alpha1 = grid.sample([](double x) { return alpha_profile(1, x); });
  fr.alpha2 = grid.sample([](double x) { return alpha_profile(2, x); });
  fr.alpha3 = grid.sample([](double x) { return alpha_profile(3, x); });
  return fr;
}

RealVector apply_H(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u) {
  RealVector out = sp.derivative(u, 2);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = -out[j] - 6.0 * fr.sech2[j] * u[j];
  return out;
}

RealVector apply_L(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u) {
  RealVector out = apply_H(sp, fr, u);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += u[j];
  return out;
}

ProjectionResult project_pc_even(const SolitonFrame& fr, std::span<const double> u,
                                 double parity_tol) {
  ProjectionResult r;
  r.odd_part = odd_part_inf(fr.grid, u);
  r.parity_warning = r.odd_part > parity_tol * std::max(1.0, norm_inf(u));
  const double a = inner(fr.grid, fr.Y0, u);
  r.value.assign(u.begin(), u.end());
  axpy(-a, fr.Y0, r.value);
  return r;
}

Complex c_coeff(double xi) { return 1.0 / Complex(2.0 - xi * xi, -3.0 * xi); }

Complex transmission(double xi) {
  return Complex(xi * xi - 2.0, 3.0 * xi) / Complex(xi * xi - 2.0, -3.0 * xi);
}

namespace {

Complex plane(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

Complex jost_plus(double x, double xi) {
  const double k = std::tanh(x);
  const Complex poly(3.0 * k * k - 1.0 - xi * xi, -3.0 * xi * k);
  return c_coeff(xi) * poly * plane(x * xi);
}

Complex jost_minus(double x, double xi) {
  const double k = std::tanh(x);
  const Complex poly(3.0 * k * k - 1.0 - xi * xi, 3.0 * xi * k);
  return c_coeff(xi) * poly * plane(-x * xi);
}

Complex jost_plus_dx(double x, double xi) {
  const double k = std::tanh(x);
  const double s = sech_of(x);
  const double kp = s * s;
  const Complex poly(3.0 * k * k - 1.0 - xi * xi, -3.0 * xi * k);
  const Complex dpoly(6.0 * k * kp, -3.0 * xi * kp);
  return c_coeff(xi) * (dpoly + Complex(0.0, xi) * poly) * plane(x * xi);
}

Complex jost_minus_dx(double x, double xi) {
  const double k = std::tanh(x);
  const double s = sech_of(x);
  const double kp = s * s;
  const Complex poly(3.0 * k * k - 1.0 - xi * xi, 3.0 * xi * k);
  const Complex dpoly(6.0 * k * kp, 3.0 * xi * kp);
  return c_coeff(xi) * (dpoly - Complex(0.0, xi) * poly) * plane(-x * xi);
}

Complex jost_wronskian(double x, double xi) {
  return jost_plus(x, xi) * jost_minus_dx(x, xi) - jost_plus_dx(x, xi) * jost_minus(x, xi);
}

Complex distorted_basis(double x, double xi) {
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  if (xi >= 0.0) return norm * transmission(xi) * jost_plus(x, xi);
  return norm * transmission(-xi) * jost_minus(x, -xi);
}

DistortedFtResult distorted_ft(const Grid& g, std::span<const double> u, double xi) {
  if (u.size() != g.size()) throw DomainError("distorted_ft: field size mismatch");
  DistortedFtResult r;
  Complex acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) acc += std::conj(distorted_basis(g.x(j), xi)) * u[j];
  r.value = acc * g.dx();
  const double edge = boundary_mass_fraction(u, 5);
  if (edge > 1e-8) {
    r.warning = "distorted_ft: input carries relative mass " + std::to_string(edge) +
                " within 5 dx of the box boundary";
  }
  return r;
}

double resonance_polynomial_ft(double xi) {
  const double x2 = xi * xi;
  const double poly = -29.0 - 23.0 * x2 + 9.0 * x2 * x2 + 3.0 * x2 * x2 * x2;
  return -(3.0 * kSqrtPi / 64.0) * poly * sech_of(kPi * xi / 2.0);
}

Complex resonance_constant() {
  const double r = std::numbers::sqrt3;
  return Complex(1.0, -3.0 * r) * (3.0 / 28.0) * kSqrtPi * sech_of(kPi * r / 2.0);
}

double alpha_ft(int j, double xi) {
  const double x2 = xi * xi;
  const double w = sech_of(kPi * xi / 2.0);
  const double r7 = std::sqrt(7.0);
  switch (j) {
    case 1:
      return -(kSqrtPi / 64.0) * (1.0 + x2) * (-1.0 + 2.0 * r7 + x2) * (-1.0 - 2.0 * r7 + x2) * w;
    case 2:
      return -(std::sqrt(3.0 * kPi) / 64.0) * (1.0 + x2) * (1.0 + x2) * (3.0 + x2) * w;
    case 3:
      return -(3.0 * kSqrtPi / 256.0) * (1.0 + x2) * (1.0 + x2) * (9.0 + x2) * w;
    default:
      throw DomainError("alpha index must be 1, 2 or 3");
  }
}

double alpha_combined(double xi) {
  return alpha_ft(1, xi) + alpha_ft(2, xi) * kIntegralG + alpha_ft(3, xi) * kIntegralG * kIntegralG;
}

double alpha_combined_closed_form() {
  return -(3.0 * kSqrtPi / 4.0) * sech_of(std::numbers::sqrt3 * kPi / 2.0);
}

}  // namespace kglab
