#pragma once

#include <functional>

namespace kglab {

struct PvQuadratureOptions {
  double step = 0.01;    // node spacing in eta
  double cutoff = 40.0;  // |eta - xi| truncation
};

// p.v. int cosech(pi (xi - eta) / 2) h(eta) d eta on nodes placed
// symmetrically about eta = xi (midpoints, so the singular point is never a
// node). The odd singular part cancels pairwise.
double pv_omega_convolution(const std::function<double(double)>& h, double xi,
                            const PvQuadratureOptions& opt = {});

struct PvEstimate {
  double value = 0.0;
  double error_estimate = 0.0;  // |Q(h) - Q(2h)|
};
// Same quadrature with a step-doubling error estimate, so a coarse step is
// reported rather than silently accepted.
PvEstimate pv_omega_convolution_checked(const std::function<double(double)>& h, double xi,
                                        const PvQuadratureOptions& opt = {});

// Closed-form right-hand sides for (Omega * omega_j)(xi), j = 1, 2, 3.
double omega_convolution_closed_form(int j, double xi);

// <Omega * Omega, psi> computed as -int Omega(eta) (Omega * psi)(eta) d eta.
double omega_omega_smeared(const std::function<double(double)>& psi,
                           const PvQuadratureOptions& opt = {});
// -4 psi(0) + 2 <omega_3, psi>.
double omega_omega_smeared_closed_form(const std::function<double(double)>& psi,
                                       const PvQuadratureOptions& opt = {});

}  // namespace kglab
