#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kglab/grid.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

struct NtNormReport {
  double energy_part = 0.0;
  double sup_part = 0.0;
  int argmax_n = 0;
  int argmax_l = 0;
  // Annuli narrower than the lattice spacing are skipped and flagged.
  bool resolution_warning = false;
  int finest_resolved_l = 0;
};

// || <D>^2 f ||_2 + sup_{n, l} 2^{-l/2} tau_n(t) || phi_l^(n) <xi>^2 d_xi fhat ||_{L2}.
// fhat on the centered lattice; only n <= n_max with tau_n(t) > 0 and l <= l_max enter.
double nt_norm(const Grid& grid, std::span<const Complex> fhat, double t, int n_max,
               double sharpness = 0.0, NtNormReport* report = nullptr, int l_max = 1 << 20);

// Centered lattice differences of fhat, one-sided at the ends.
ComplexVector xi_derivative(const Grid& grid, std::span<const Complex> fhat);

enum class DecayModel { PurePower, PowerLog };
std::string to_string(DecayModel m);

struct WindowMax {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double t_at_max = 0.0;
  double value = 0.0;
};

// Per-window maxima over [2^j, 2^{j+1}] intersected with [t0, t1].
std::vector<WindowMax> dyadic_window_maxima(std::span<const double> t, std::span<const double> y,
                                            double t0, double t1);

struct DecayFit {
  double t0 = 0.0;
  double t1 = 0.0;
  DecayModel model = DecayModel::PowerLog;
  double constant = 0.0;   // fitted C
  double exponent = 0.0;   // fitted or fixed power
  double residual = 0.0;   // rms of log residuals over windows
  std::vector<WindowMax> windows;
};

// Regression of log y on log t over window maxima (free exponent).
DecayFit fit_pure_power(std::span<const double> t, std::span<const double> y, double t0, double t1);
// C in y <= C eps log(2+t) / <t>^{1/2}; constant is the sup over frames in [t0, t1].
DecayFit linf_decay_ratio(std::span<const double> t, std::span<const double> linf, double eps,
                          double t0, double t1);

struct AMinusEnvelope {
  double early_slope = 0.0;  // d log|a-| / dt on the early window
  double c1 = 0.0;           // e^{intercept} / eps
  double c2 = 0.0;           // sup |a-| <t> / (log(2+t)^2 eps^2) on the late window
  std::vector<WindowMax> late_windows;
};

AMinusEnvelope a_minus_envelope(std::span<const double> t, std::span<const double> a_minus,
                                double eps, double early_t0, double early_t1, double late_t0,
                                double late_t1);

enum class LocalDecayVariant { Dx, JapaneseMinusOne, StrongDx };

// Dx: || <x>^{-1} d_x v ||_{H^1}; JapaneseMinusOne: || <x>^{-1} (<D> - 1) v ||_{H^1};
// StrongDx: || <x>^{-a} d_x <D>^{-1} v ||_{L^2} with a = weight_power.
double local_decay_norm(const Spectral& sp, std::span<const Complex> v, LocalDecayVariant variant,
                        double weight_power = 2.0);

// e^{it<D>} applied to a complex field on the grid.
ComplexVector free_evolve(const Spectral& sp, std::span<const Complex> v, double t);

// (e^{it<D>} f)(x) = (2 pi)^{-1/2} int_{xi_lo}^{xi_hi} e^{i(x xi + t <xi>)} fhat(xi) d xi
// by the midpoint rule; fhat must vanish at both ends.
Complex oscillatory_evolution(const std::function<Complex(double)>& fhat, double x, double t,
                              double xi_lo, double xi_hi, std::size_t nodes = 0);

// sup_x |e^{it<D>} f| for fhat supported in [xi_lo, xi_hi], scanning the
// stationary rays x = -t xi / <xi> and refining the best candidate.
double oscillatory_sup(const std::function<Complex(double)>& fhat, double t, double xi_lo,
                       double xi_hi, std::size_t scan_points = 96);

}  // namespace kglab
