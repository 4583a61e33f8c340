#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "kglab/grid.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

inline constexpr double kNuSquared = 3.0;
inline constexpr double kNu = std::numbers::sqrt3;
inline constexpr double kC0 = std::numbers::sqrt3 / 2.0;  // sqrt(3/4)
inline constexpr double kC1 = 1.2247448713915890491;       // sqrt(3/2)
inline constexpr double kIntegralG = 1.0 / std::numbers::sqrt3;

// Soliton and the spectral objects of the linearized operator sampled on a grid.
struct SolitonFrame {
  Grid grid;
  RealVector sech;
  RealVector sech2;
  RealVector Q;
  RealVector Q_x;
  RealVector K;
  RealVector Y0;
  RealVector Y1;
  RealVector Y2;
  RealVector Z;
  RealVector G;
  RealVector alpha1;
  RealVector alpha2;
  RealVector alpha3;

  static SolitonFrame build(const Grid& grid);
  double nu() const { return kNu; }
};

// Closed-form profiles, usable off-grid.
double soliton(double x);
double y0_profile(double x);
double y1_profile(double x);
double y2_profile(double x);
double alpha_profile(int j, double x);

// -u'' - 6 sech^2 u + u.
RealVector apply_L(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u);
// -u'' - 6 sech^2 u (no mass term).
RealVector apply_H(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u);

struct ProjectionResult {
  RealVector value;
  double odd_part = 0.0;
  bool parity_warning = false;
};
// P_c u = u - <Y0, u> Y0 on even fields.
ProjectionResult project_pc_even(const SolitonFrame& fr, std::span<const double> u,
                                 double parity_tol = 1e-8);

// Scattering data of the reflectionless well.
Complex c_coeff(double xi);
Complex transmission(double xi);

// f_+(x, xi) = c(xi) (3K^2 - 3 i xi K - 1 - xi^2) e^{i x xi};
// f_-(x, xi) = c(xi) (3K^2 + 3 i xi K - 1 - xi^2) e^{-i x xi}.
Complex jost_plus(double x, double xi);
Complex jost_minus(double x, double xi);
Complex jost_plus_dx(double x, double xi);
Complex jost_minus_dx(double x, double xi);
// W(f, g) = f g' - f' g evaluated at x.
Complex jost_wronskian(double x, double xi);

// Distorted plane wave e(x, xi): (2 pi)^(-1/2) T(xi) f_+(x, xi) for xi >= 0 and
// (2 pi)^(-1/2) T(-xi) f_-(x, -xi) for xi < 0.
Complex distorted_basis(double x, double xi);

struct DistortedFtResult {
  Complex value;
  std::optional<std::string> warning;
};
DistortedFtResult distorted_ft(const Grid& g, std::span<const double> u, double xi);

// F[D1 D2 (3 Q Y2^2)](xi) closed form.
double resonance_polynomial_ft(double xi);
// (3/28)(1 - 3 i sqrt 3) sqrt(pi) sech(pi sqrt(3) / 2).
Complex resonance_constant();
// Closed-form hat alpha_j(xi), j = 1, 2, 3.
double alpha_ft(int j, double xi);
// alpha1^ + alpha2^ / sqrt 3 + alpha3^ / 3 at xi.
double alpha_combined(double xi);
// -(3 sqrt(pi) / 4) sech(sqrt(3) pi / 2).
double alpha_combined_closed_form();

}  // namespace kglab
