#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "kglab/cumulative.hpp"
#include "kglab/darboux.hpp"
#include "kglab/field_ops.hpp"
#include "kglab/identities.hpp"
#include "kglab/pv_quadrature.hpp"
#include "oracle_values.hpp"

using namespace kglab;

namespace {
const double kSqrt3 = std::numbers::sqrt3;

struct Fixture {
  Grid g = Grid::make(80.0, 4096);
  Spectral sp{g};
  SolitonFrame fr = SolitonFrame::build(g);
};
}  // namespace

TEST_CASE("cumulative integrals are exact to quadrature order") {
  const Grid g = Grid::make(80.0, 4096);
  const RealVector u = g.sample([](double x) { return std::exp(-x * x); });
  const RealVector c = cumulative_integral(g, u);
  double err = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    err = std::max(err, std::fabs(c[j] - 0.5 * std::sqrt(std::numbers::pi) * std::erf(g.x(j))));
  }
  CHECK(err < 1e-12);
  CHECK(c[g.zero_index()] == 0.0);
  // sech(x) int_0^x cosh(y) dy = tanh(x), no overflow at the box edge.
  const RealVector one(g.size(), 1.0);
  const RealVector t = hyperbolic_cumulative(g, one, {1, 0}, {1, 0});
  double et = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) et = std::max(et, std::fabs(t[j] - std::tanh(g.x(j))));
  CHECK(et < 1e-12);
  CHECK(all_finite(t));
}

TEST_CASE("Darboux battery on random Schwartz fields") {
  Fixture f;
  for (const auto& r : darboux_identities(f.sp, f.fr, 20, 11)) {
    INFO(r.name << " residual " << r.max_residual);
    CHECK(r.pass());
  }
}

TEST_CASE("right inverses on a Gaussian") {
  Fixture f;
  const RealVector g = f.g.sample([](double x) { return std::exp(-x * x); });
  CHECK(max_abs_diff(apply_darboux(f.sp, f.fr, DarbouxKind::D1, i1_apply(f.g, g)), g) < 1e-8);
  const RealVector zero(f.g.size(), 0.0);
  CHECK(norm_inf(i1_apply(f.g, zero)) == 0.0);
  CHECK(norm_inf(j_apply(f.g, zero)) == 0.0);
}

TEST_CASE("tilde split: I1 as stated, J needs the I2 I1~ term") {
  Fixture f;
  std::mt19937_64 rng(99);
  const RealVector g = f.g.sample([](double x) { return std::exp(-x * x); });
  const auto r = tilde_split_check(f.sp, f.fr, g);
  CHECK(r.i1 < 1e-8);
  CHECK(r.j < 1e-8);
  // The short form J[g] = K^2 g / 2 + J~[g'] is not an identity.
  CHECK(r.j_short > 1e-2);
  // Its defect is exactly I2[I1~[g']].
  const RealVector dg = f.sp.derivative(g, 1);
  const RealVector tail = i2_apply(f.g, i1_tilde_apply(f.g, dg));
  CHECK(std::fabs(norm_inf(tail) - r.j_short) < 1e-8);
  const RealVector zero(f.g.size(), 0.0);
  const auto z = tilde_split_check(f.sp, f.fr, zero);
  CHECK(z.i1 == 0.0);
  CHECK(z.j == 0.0);
}

TEST_CASE("operator bounds have moderate measured constants") {
  Fixture f;
  std::mt19937_64 rng(17);
  double c_max = 0.0;
  const RealVector w = f.g.sample([](double x) { return 1.0 / std::sqrt(1.0 + x * x); });
  for (int s = 0; s < 100; ++s) {
    const RealVector g = random_schwartz(f.g, rng);
    const RealVector dg = f.sp.derivative(g, 1);
    const RealVector lhs = mul(w, i1_tilde_apply(f.g, dg));
    const RealVector rhs = mul(w, dg);
    c_max = std::max(c_max, norm_l2(f.g, lhs) / norm_l2(f.g, rhs));
  }
  MESSAGE("measured constant for <x>^-1 I1~[g'] : " << c_max);
  CHECK(c_max < 10.0);
}

TEST_CASE("I1 Fourier kernel needs the local delta term") {
  Fixture f;
  const RealVector g = f.g.sample([](double x) { return std::exp(-x * x); });
  const SpectralFunction fhat = [](double eta) {
    return Complex(std::exp(-eta * eta / 4.0) / std::numbers::sqrt2, 0.0);
  };
  const PvQuadratureOptions pv{0.01, 40.0};
  const std::size_t k = f.g.zero_index() + static_cast<std::size_t>(std::lround(1.0 / f.g.dxi()));
  const auto chk = fourier_kernel_check(f.sp, KernelOperator::I1, g, fhat, k, pv);
  CHECK(chk.residual < 1e-5);
  CHECK(std::fabs(chk.direct.real()) < 1e-14);
  const Complex bare = i1_fourier_without_local_term(fhat, chk.xi, pv);
  const Complex local = Complex(0.0, -2.0 * multipliers::m(1, chk.xi)) * fhat(chk.xi);
  CHECK(std::abs(chk.direct - bare) > 0.1);
  CHECK(std::abs(chk.direct - bare - local) < 1e-10);
  // Independent transform of the closed-form I1[e^{-x^2}] at xi = 1.
  const double xi1 = 1.0;
  CHECK(std::fabs(i1_fourier_via_kernel(fhat, xi1, pv).imag() - oracle::i1_gauss_ft_1_imag) < 1e-8);
}

TEST_CASE("J Fourier kernel matches the grid transform") {
  Fixture f;
  const RealVector g = f.g.sample([](double x) { return std::exp(-x * x); });
  const SpectralFunction fhat = [](double eta) {
    return Complex(std::exp(-eta * eta / 4.0) / std::numbers::sqrt2, 0.0);
  };
  for (double xi : {0.0, 1.0, kSqrt3}) {
    const std::size_t k = f.g.zero_index() + static_cast<std::size_t>(std::lround(xi / f.g.dxi()));
    CHECK(fourier_kernel_check(f.sp, KernelOperator::J, g, fhat, k, {}).residual < 1e-5);
  }
}

TEST_CASE("convolution identities against the fixtures") {
  const PvQuadratureOptions pv{0.01, 40.0};
  auto o = [](int j) { return [j](double e) { return multipliers::omega(j, e); }; };
  CHECK(std::fabs(pv_omega_convolution(o(1), 0.3, pv) - oracle::conv1_0p3) < 1e-4);
  CHECK(std::fabs(pv_omega_convolution(o(1), 1.0, pv) - oracle::conv1_1) < 1e-4);
  CHECK(std::fabs(pv_omega_convolution(o(2), 1.0, pv) - oracle::conv2_1) < 1e-4);
  CHECK(std::fabs(pv_omega_convolution(o(2), kSqrt3, pv) - oracle::conv2_sqrt3) < 1e-4);
  CHECK(std::fabs(pv_omega_convolution(o(3), 2.5, pv) - oracle::conv3_2p5) < 1e-4);
  CHECK(std::fabs(omega_convolution_closed_form(1, 1.0) - oracle::conv1_1) < 1e-14);
  CHECK(std::fabs(omega_convolution_closed_form(3, kSqrt3) - oracle::conv3_sqrt3) < 1e-14);
  auto psi = [](double e) { return std::exp(-e * e); };
  CHECK(std::fabs(omega_omega_smeared(psi, pv) - oracle::omega_omega_smeared) < 1e-4);
  CHECK(multipliers::omega(3, 0.0) == doctest::Approx(oracle::omega3_at_0));
  // The midpoint sum is spectrally accurate; only a step past the pole spacing shows up.
  const auto coarse = pv_omega_convolution_checked(o(1), 1.0, {1.5, 40.0});
  const auto fine = pv_omega_convolution_checked(o(1), 1.0, pv);
  CHECK(fine.error_estimate < 1e-8);
  CHECK(coarse.error_estimate > 1e-3);
}
