#include <cmath>
#include <numbers>

#include "doctest.h"
#include "kglab/darboux.hpp"
#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"
#include "kglab/identities.hpp"
#include "kglab/poschl_teller.hpp"
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

TEST_CASE("eigenfunctions and normalization") {
  Fixture f;
  for (const auto& r : spectral_identities(f.sp, f.fr)) {
    INFO(r.name);
    CHECK(r.pass());
  }
  CHECK(kC0 == doctest::Approx(std::sqrt(0.75)).epsilon(1e-16));
  CHECK(kC1 == doctest::Approx(std::sqrt(1.5)).epsilon(1e-16));
}

TEST_CASE("soliton profile values") {
  CHECK(soliton(0.0) == doctest::Approx(std::numbers::sqrt2));
  CHECK(y2_profile(0.0) == doctest::Approx(-0.5));
  CHECK(y0_profile(800.0) == 0.0);
  CHECK(std::isfinite(soliton(-1e4)));
}

TEST_CASE("projection removes the Y0 component") {
  Fixture f;
  const RealVector u = f.g.sample([](double x) { return std::exp(-x * x); });
  const auto p = project_pc_even(f.fr, u);
  CHECK(std::fabs(inner(f.g, f.fr.Y0, p.value)) < 1e-14);
  CHECK_FALSE(p.parity_warning);
  const auto pp = project_pc_even(f.fr, p.value);
  CHECK(max_abs_diff(pp.value, p.value) < 1e-15);
  const RealVector odd = f.g.sample([](double x) { return x * std::exp(-x * x); });
  CHECK(project_pc_even(f.fr, odd).parity_warning);
}

TEST_CASE("transmission coefficient") {
  CHECK(std::abs(transmission(0.0) - Complex(1.0, 0.0)) < 1e-15);
  for (double xi : {0.1, 1.0, kSqrt3, 7.0, -3.0}) CHECK(std::abs(transmission(xi)) == doctest::Approx(1.0));
  CHECK(std::abs(transmission(1.0) * jost_wronskian(0.0, 1.0) - Complex(0.0, -2.0)) < 1e-12);
  // f+ ~ e^{i x xi} at +infinity, f- ~ e^{-i x xi} at -infinity.
  CHECK(std::abs(jost_plus(30.0, 1.0) * std::polar(1.0, -30.0) - 1.0) < 1e-10);
  CHECK(std::abs(jost_minus(-30.0, 1.0) * std::polar(1.0, -30.0) - 1.0) < 1e-10);
}

TEST_CASE("Jost derivative agrees with differences") {
  for (double xi : {0.3, kSqrt3}) {
    for (double x : {-2.0, 0.0, 1.3}) {
      const double h = 1e-5;
      const Complex fd = (jost_plus(x + h, xi) - jost_plus(x - h, xi)) / (2.0 * h);
      CHECK(std::abs(fd - jost_plus_dx(x, xi)) < 1e-8);
      const Complex fdm = (jost_minus(x + h, xi) - jost_minus(x - h, xi)) / (2.0 * h);
      CHECK(std::abs(fdm - jost_minus_dx(x, xi)) < 1e-8);
    }
  }
}

TEST_CASE("resonance constant against the high-precision fixture") {
  Fixture f;
  RealVector src(f.g.size());
  for (std::size_t j = 0; j < src.size(); ++j) src[j] = 3.0 * f.fr.Q[j] * f.fr.Y2[j] * f.fr.Y2[j];
  const auto r = distorted_ft(f.g, src, kSqrt3);
  CHECK(std::fabs(r.value.real() - oracle::resonance_re) < 1e-6);
  CHECK(std::fabs(r.value.imag() - oracle::resonance_im) < 1e-6);
  CHECK(std::abs(resonance_constant()) == doctest::Approx(oracle::resonance_abs).epsilon(1e-14));
  CHECK(resonance_constant().real() == doctest::Approx(oracle::resonance_re).epsilon(1e-14));
  // Same value at -sqrt 3 since the source is even.
  const auto rm = distorted_ft(f.g, src, -kSqrt3);
  CHECK(std::abs(rm.value - r.value) < 1e-10);
}

TEST_CASE("closed-form transforms match the fixtures") {
  CHECK(resonance_polynomial_ft(0.0) == doctest::Approx(oracle::res_poly_0).epsilon(1e-14));
  CHECK(resonance_polynomial_ft(1.0) == doctest::Approx(oracle::res_poly_1).epsilon(1e-14));
  CHECK(resonance_polynomial_ft(kSqrt3) == doctest::Approx(oracle::res_poly_sqrt3).epsilon(1e-14));
  CHECK(alpha_ft(1, 0.0) == doctest::Approx(oracle::alpha1_hat_0).epsilon(1e-14));
  CHECK(alpha_ft(1, kSqrt3) == doctest::Approx(oracle::alpha1_hat_sqrt3).epsilon(1e-14));
  CHECK(alpha_ft(2, 1.0) == doctest::Approx(oracle::alpha2_hat_1).epsilon(1e-14));
  CHECK(alpha_ft(3, kSqrt3) == doctest::Approx(oracle::alpha3_hat_sqrt3).epsilon(1e-14));
  CHECK(alpha_combined_closed_form() == doctest::Approx(oracle::alpha_combined_sqrt3).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_profile(4, 0.0), DomainError);
}

TEST_CASE("alpha fields transform to the closed forms on the grid") {
  Fixture f;
  const auto a1 = continuous_ft(f.g, f.fr.alpha1);
  CHECK(std::fabs(a1(1.0).real() - oracle::alpha1_hat_1) < 1e-7);
  const auto a2 = continuous_ft(f.g, f.fr.alpha2);
  CHECK(std::fabs(a2(kSqrt3).real() - oracle::alpha2_hat_sqrt3) < 1e-7);
  const auto a3 = continuous_ft(f.g, f.fr.alpha3);
  CHECK(std::fabs(a3(0.0).real() - oracle::alpha3_hat_0) < 1e-7);
}
