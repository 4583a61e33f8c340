#include "kglab/pv_quadrature.hpp"

#include <cmath>
#include <numbers>

#include "kglab/darboux.hpp"
#include "kglab/errors.hpp"

namespace kglab {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const PvQuadratureOptions& opt) {
  if (!(opt.step > 0.0) || !(opt.cutoff > opt.step)) {
    throw ConfigError("p.v. quadrature: need 0 < step < cutoff");
  }
}

long node_count(const PvQuadratureOptions& opt) {
  return static_cast<long>(std::ceil(opt.cutoff / opt.step));
}

}  // namespace

double pv_omega_convolution(const std::function<double(double)>& h, double xi,
                            const PvQuadratureOptions& opt) {
  validate(opt);
  const long m = node_count(opt);
  double acc = 0.0;
  for (long i = 0; i < m; ++i) {
    const double s = (static_cast<double>(i) + 0.5) * opt.step;
    acc += (h(xi - s) - h(xi + s)) / std::sinh(0.5 * kPi * s);
  }
  return acc * opt.step;
}

PvEstimate pv_omega_convolution_checked(const std::function<double(double)>& h, double xi,
                                        const PvQuadratureOptions& opt) {
  PvEstimate e;
  e.value = pv_omega_convolution(h, xi, opt);
  PvQuadratureOptions coarse = opt;
  coarse.step *= 2.0;
  e.error_estimate = std::fabs(e.value - pv_omega_convolution(h, xi, coarse));
  return e;
}

double omega_convolution_closed_form(int j, double xi) {
  const double a = 0.5 * kPi * xi;
  switch (j) {
    case 1: return 2.0 * xi / std::cosh(a);
    case 2: return (xi * xi - 1.0) / std::cosh(a);
    case 3: return xi == 0.0 ? 0.0 : xi * xi / std::sinh(a);
    default: throw DomainError("convolution identity index must be 1, 2 or 3");
  }
}

double omega_omega_smeared(const std::function<double(double)>& psi,
                           const PvQuadratureOptions& opt) {
  validate(opt);
  // (Omega * psi)(eta) - (Omega * psi)(-eta) vanishes at eta = 0, so pairing
  // midpoint nodes about 0 handles the outer principal value.
  const long m = node_count(opt);
  double acc = 0.0;
  for (long i = 0; i < m; ++i) {
    const double eta = (static_cast<double>(i) + 0.5) * opt.step;
    acc += multipliers::Omega(eta) *
           (pv_omega_convolution(psi, eta, opt) - pv_omega_convolution(psi, -eta, opt));
  }
  return -acc * opt.step;
}

double omega_omega_smeared_closed_form(const std::function<double(double)>& psi,
                                       const PvQuadratureOptions& opt) {
  validate(opt);
  const long m = node_count(opt);
  double acc = 0.0;
  for (long i = -m; i < m; ++i) {
    const double eta = (static_cast<double>(i) + 0.5) * opt.step;
    acc += multipliers::omega(3, eta) * psi(eta);
  }
  return -4.0 * psi(0.0) + 2.0 * acc * opt.step;
}

}  // namespace kglab
