#pragma once

#include <functional>
#include <span>

#include "kglab/grid.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/pv_quadrature.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

// D1 = d/dx + tanh, D2 = d/dx + 2 tanh and their adjoints -d/dx + tanh, -d/dx + 2 tanh.
enum class DarbouxKind { D1, D2, D1Adj, D2Adj };

RealVector apply_darboux(const Spectral& sp, const SolitonFrame& fr, DarbouxKind kind,
                         std::span<const double> u);
// D1 D2 u = u'' + 3 tanh u' + 2 u, computed in one pass.
RealVector apply_d1d2(const Spectral& sp, const SolitonFrame& fr, std::span<const double> u);
// D2* D1* u.
RealVector apply_d2adj_d1adj(const Spectral& sp, const SolitonFrame& fr,
                             std::span<const double> u);

// I1[g] = sech x int_0^x cosh y g.
RealVector i1_apply(const Grid& grid, std::span<const double> g);
// I2[g] = sech^2 x int_0^x cosh^2 y g.
RealVector i2_apply(const Grid& grid, std::span<const double> g);
// J = I2 o I1, evaluated as tanh I1[g] - sech^2 x int_0^x cosh sinh g.
RealVector j_apply(const Grid& grid, std::span<const double> g);
// tilde I1[h] = -sech x int_0^x sinh y h.
RealVector i1_tilde_apply(const Grid& grid, std::span<const double> h);
// tilde J[h] = -(1/2) sech^2 x int_0^x sinh^2 y h.
RealVector j_tilde_apply(const Grid& grid, std::span<const double> h);

// f = J[w] + c0^{-1} f(0) Y0 + c1^{-1} f'(0) Y1.
RealVector reconstruct(const SolitonFrame& fr, std::span<const double> w, double f0,
                       double fp0);

// i1: I1[g] - (K g + I1~[g']).
// j: J[g] - (K^2 g / 2 + J~[g'] + I2[I1~[g']]). Integrating I2[K g] by parts
// leaves the I2 I1~ term; the shorter form without it is off by O(1).
// j_short: J[g] - (K^2 g / 2 + J~[g']), kept to document that gap.
struct TildeSplitResiduals {
  double i1 = 0.0;
  double j = 0.0;
  double j_short = 0.0;
};
TildeSplitResiduals tilde_split_check(const Spectral& sp, const SolitonFrame& fr,
                                      std::span<const double> g);

// Symbols appearing in the Fourier kernels of I1 and J.
namespace multipliers {
double m(int j, double xi);
double omega(int j, double xi);
// cosech(pi xi / 2) away from 0; principal value handled by the quadrature.
double Omega(double xi);
}  // namespace multipliers

using SpectralFunction = std::function<Complex(double)>;

// Band-limited continuation of the grid transform: evaluates
// dx (2 pi)^(-1/2) sum_j e^{-i x_j eta} f_j at arbitrary eta.
SpectralFunction continuous_ft(const Grid& grid, std::span<const double> f);

// -2i m1(xi) f^(xi) + i Omega * (m0 f^) + i omega1 B1(f^) at xi. The local
// term is the delta part of the boundary value of sech(pi/2 (s + i)).
Complex i1_fourier_via_kernel(const SpectralFunction& fhat, double xi,
                              const PvQuadratureOptions& opt = {});
// The same without the local term.
Complex i1_fourier_without_local_term(const SpectralFunction& fhat, double xi,
                                      const PvQuadratureOptions& opt = {});
// Regular part i omega1(xi) B1(f^).
Complex i1_fourier_regular_part(const SpectralFunction& fhat, double xi,
                                const PvQuadratureOptions& opt = {});
// m4 f^ + Omega * (m5 f^) + omega3 * (m6 f^) + omega3 B2 + omega2 B3 at xi.
Complex j_fourier_via_kernel(const SpectralFunction& fhat, double xi,
                             const PvQuadratureOptions& opt = {});

struct KernelCheck {
  double xi = 0.0;
  Complex direct;
  Complex via_kernel;
  double residual = 0.0;
};

enum class KernelOperator { I1, J };

// Compares forward_ft(I1[f]) (or J[f]) at lattice index k with the kernel
// quadrature applied to fhat.
KernelCheck fourier_kernel_check(const Spectral& sp, KernelOperator op, std::span<const double> f,
                                 const SpectralFunction& fhat, std::size_t k,
                                 const PvQuadratureOptions& opt = {});

}  // namespace kglab
