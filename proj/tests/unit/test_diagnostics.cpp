#include <cmath>
#include <numbers>

#include "doctest.h"
#include "kglab/cutoffs.hpp"
#include "kglab/diagnostics.hpp"
#include "kglab/field_ops.hpp"

using namespace kglab;

TEST_CASE("dyadic fits recover synthetic envelopes") {
  std::vector<double> t, y, z;
  for (int i = 0; i <= 4000; ++i) {
    const double s = 0.05 * i;
    t.push_back(s);
    y.push_back(3.0 * std::pow(1.0 + s, -0.5) * (1.0 + 0.1 * std::cos(s)));
    z.push_back(2.0 * 0.05 * std::log(2.0 + s) / std::sqrt(1.0 + s * s));
  }
  const DecayFit pp = fit_pure_power(t, y, 10.0, 200.0);
  CHECK(pp.exponent == doctest::Approx(-0.5).epsilon(0.05));
  CHECK(pp.windows.size() >= 4);
  const DecayFit pl = linf_decay_ratio(t, z, 0.05, 10.0, 200.0);
  CHECK(pl.constant == doctest::Approx(2.0).epsilon(1e-9));
  const auto w = dyadic_window_maxima(t, y, 10.0, 200.0);
  for (const auto& win : w) {
    CHECK(win.t_lo >= 10.0);
    CHECK(win.t_hi <= 200.0);
  }
}

TEST_CASE("stable coefficient envelope") {
  std::vector<double> t, a;
  // Small eps keeps the algebraic term subdominant on the early window.
  const double eps = 0.01;
  for (int i = 0; i <= 20000; ++i) {
    const double s = 0.01 * i;
    t.push_back(s);
    a.push_back(eps * std::exp(-std::sqrt(3.0) * s) + eps * eps / (1.0 + s));
  }
  const AMinusEnvelope env = a_minus_envelope(t, a, eps, 0.0, 1.5, 50.0, 200.0);
  CHECK(env.early_slope == doctest::Approx(-std::sqrt(3.0)).epsilon(0.05));
  CHECK(env.c2 > 0.0);
  CHECK(env.c2 < 1.0);
}

TEST_CASE("free propagator is unitary and matches the oscillatory integral") {
  const Grid g = Grid::make(400.0, 8192);
  const Spectral sp(g);
  const double k0 = 1.0;
  auto fhat = [k0](double xi) {
    const double y = (xi - k0) / 0.25;
    return Complex(std::abs(y) < 1.0 ? std::exp(-1.0 / (1.0 - y * y)) : 0.0, 0.0);
  };
  ComplexVector hat(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) hat[k] = fhat(g.xi(k));
  const ComplexVector v = sp.inverse(hat);
  const ComplexVector u = free_evolve(sp, v, 50.0);
  CHECK(norm_l2(g, u) == doctest::Approx(norm_l2(g, v)).epsilon(1e-12));
  for (std::size_t j : {g.size() / 2 - 800, g.size() / 2 - 1200, g.size() / 2 + 100}) {
    const Complex direct = oscillatory_evolution(fhat, g.x(j), 50.0, k0 - 0.25, k0 + 0.25);
    CHECK(std::abs(direct - u[j]) < 1e-6);
  }
  // sup_x decays like t^{-1/2}.
  const double s1 = oscillatory_sup(fhat, 1000.0, k0 - 0.25, k0 + 0.25);
  const double s4 = oscillatory_sup(fhat, 4000.0, k0 - 0.25, k0 + 0.25);
  CHECK(s1 / s4 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("N_T norm pieces") {
  const Grid g = Grid::make(200.0, 4096);
  ComplexVector fhat(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double xi = g.xi(k);
    fhat[k] = std::exp(-xi * xi);
  }
  NtNormReport rep;
  const double v = nt_norm(g, fhat, 100.0, time_partition_max_index(100.0), 0.0, &rep);
  CHECK(v == doctest::Approx(rep.energy_part + rep.sup_part));
  CHECK(rep.energy_part > 0.0);
  CHECK(rep.sup_part > 0.0);
  CHECK(rep.finest_resolved_l >= 3);
  CHECK(std::exp2(-rep.finest_resolved_l) >= g.dxi());
  CHECK(std::exp2(-(rep.finest_resolved_l + 1)) < g.dxi());
  // Deep annuli beyond the lattice resolution are flagged, not evaluated.
  NtNormReport deep;
  (void)nt_norm(g, fhat, 1e6, time_partition_max_index(1e6), 0.0, &deep);
  CHECK(deep.resolution_warning);
  // xi-derivative of a Gaussian.
  const ComplexVector d = xi_derivative(g, fhat);
  const std::size_t k = g.zero_index() + 20;
  CHECK(std::abs(d[k] - (-2.0 * g.xi(k) * fhat[k])) < 1e-3);
}

TEST_CASE("local decay norms") {
  const Grid g = Grid::make(200.0, 2048);
  const Spectral sp(g);
  ComplexVector v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-g.x(j) * g.x(j));
  const double a = local_decay_norm(sp, v, LocalDecayVariant::Dx);
  const double b = local_decay_norm(sp, v, LocalDecayVariant::JapaneseMinusOne);
  const double c = local_decay_norm(sp, v, LocalDecayVariant::StrongDx, 2.0);
  CHECK(a > 0.0);
  CHECK(b > 0.0);
  CHECK(c > 0.0);
  // Local decay along the free flow.
  const ComplexVector later = free_evolve(sp, v, 40.0);
  CHECK(local_decay_norm(sp, later, LocalDecayVariant::Dx) < 0.1 * a);
  const ComplexVector zero(g.size(), 0.0);
  CHECK(local_decay_norm(sp, zero, LocalDecayVariant::Dx) == 0.0);
}
