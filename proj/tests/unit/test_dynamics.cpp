#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "kglab/dynamics.hpp"
#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"
#include "kglab/initial_data.hpp"
#include "oracle_values.hpp"

using namespace kglab;

namespace {
const double kNuV = std::numbers::sqrt3;

struct Fixture {
  Grid g = Grid::make(64.0, 1024);
  Spectral sp{g};
  SolitonFrame fr = SolitonFrame::build(g);
};

SolverConfig solver(double dt, double t_end, Integrator integ = Integrator::Strang) {
  SolverConfig c;
  c.dt = dt;
  c.t_end = t_end;
  c.integrator = integ;
  c.enforce_box_rule = false;
  return c;
}

SimState run(const SolitonFrame& fr, const SolverConfig& c, const SimState& s0) {
  Evolver ev(fr, c);
  ev.load(s0);
  ev.advance_to(c.t_end);
  return ev.state();
}
}  // namespace

TEST_CASE("parsing integrators") {
  CHECK(parse_integrator("strang") == Integrator::Strang);
  CHECK(parse_integrator("etdrk4") == Integrator::Etdrk4);
  CHECK(to_string(Integrator::Etdrk4) == "etdrk4");
  CHECK_THROWS_AS(parse_integrator("rk4"), ConfigError);
}

TEST_CASE("box rule") {
  const Grid g = Grid::make(100.0, 1024);
  SolverConfig c;
  c.t_end = 40.0;
  CHECK_THROWS_WITH_AS(c.validate(g), doctest::Contains("box rule"), ConfigError);
  c.t_end = 30.0;
  CHECK_NOTHROW(c.validate(g));
  c.dt = -1.0;
  CHECK_THROWS_AS(c.validate(g), ConfigError);
}

TEST_CASE("mode coefficients split a into growing and decaying parts") {
  Fixture f;
  RealVector phi_t = scale(f.fr.Y0, kNuV);
  const ModeCoefficients mc = mode_coefficients(f.fr, f.fr.Y0, phi_t);
  CHECK(mc.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mc.a_dot == doctest::Approx(kNuV).epsilon(1e-12));
  CHECK(mc.a_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(mc.a_minus) < 1e-12);
}

TEST_CASE("energy of the soliton") {
  Fixture f;
  const SimState s{0.0, RealVector(f.g.size(), 0.0), RealVector(f.g.size(), 0.0)};
  CHECK(energy(f.sp, f.fr, s) == doctest::Approx(oracle::energy_Q).epsilon(1e-12));
}

TEST_CASE("linearized flow grows the unstable mode at rate nu") {
  Fixture f;
  for (Integrator integ : {Integrator::Strang, Integrator::Etdrk4}) {
    SolverConfig c = solver(0.01, 5.0, integ);
    c.include_nonlinearity = false;
    const SimState s0{0.0, scale(f.fr.Y0, 1e-6), scale(f.fr.Y0, 1e-6 * kNuV)};
    const SimState s1 = run(f.fr, c, s0);
    const double rate = std::log(mode_coefficients(f.fr, s1).a_plus / 1e-6) / s1.t;
    CHECK(rate == doctest::Approx(kNuV).epsilon(1e-4));
  }
}

TEST_CASE("energy and parity are preserved") {
  Fixture f;
  DataSpec ds;
  const InitialData data = build_initial_data(f.sp, f.fr, ds);
  CHECK(data.eps == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(weighted_data_norm(f.sp, data.phi0, data.phi1) == doctest::Approx(0.05).epsilon(1e-12));
  const SimState s0 = make_initial_state(f.fr, data.phi0, data.phi1, 0.0);
  for (Integrator integ : {Integrator::Strang, Integrator::Etdrk4}) {
    const SimState s1 = run(f.fr, solver(0.005, 5.0, integ), s0);
    const double e0 = energy(f.sp, f.fr, s0);
    CHECK(std::fabs(energy(f.sp, f.fr, s1) - e0) / e0 < 1e-8);
    CHECK(odd_part_inf(f.g, s1.phi) < 1e-12);
  }
}

TEST_CASE("measured integrator orders") {
  Fixture f;
  DataSpec ds;
  ds.eps = 0.5;
  const InitialData data = build_initial_data(f.sp, f.fr, ds);
  const SimState s0 = make_initial_state(f.fr, data.phi0, data.phi1, 0.0);
  const double T = 2.0;
  const SimState ref = run(f.fr, solver(T / 1600.0, T, Integrator::Etdrk4), s0);
  auto err = [&](Integrator integ, int steps) {
    const SimState s = run(f.fr, solver(T / steps, T, integ), s0);
    return max_abs_diff(s.phi, ref.phi);
  };
  const double p2 = std::log2(err(Integrator::Strang, 50) / err(Integrator::Strang, 100));
  const double p4 = std::log2(err(Integrator::Etdrk4, 25) / err(Integrator::Etdrk4, 50));
  MESSAGE("orders: strang " << p2 << ", etdrk4 " << p4);
  CHECK(p2 == doctest::Approx(2.0).epsilon(0.05));
  CHECK(p4 == doctest::Approx(4.0).epsilon(0.075));
}

TEST_CASE("initial data preconditions") {
  Fixture f;
  const RealVector odd = f.g.sample([](double x) { return 1e-3 * x * std::exp(-x * x); });
  const RealVector zero(f.g.size(), 0.0);
  CHECK_THROWS_AS(make_initial_state(f.fr, odd, zero, 0.0), DomainError);
  // phi1 = Y0 breaks <Y0, nu phi0 + phi1> = 0 unless projected.
  const RealVector y0 = scale(f.fr.Y0, 1e-3);
  CHECK_THROWS_AS(make_initial_state(f.fr, zero, y0, 0.0), DomainError);
  InitialStateReport rep;
  const SimState s = make_initial_state(f.fr, zero, y0, 0.0, true, &rep);
  CHECK(rep.projected);
  CHECK(std::fabs(inner(f.g, f.fr.Y0, s.phi_t)) < 1e-15);
  const RealVector shortv(10, 0.0);
  CHECK_THROWS_AS(make_initial_state(f.fr, shortv, shortv, 0.0), DomainError);
}

TEST_CASE("data families") {
  Fixture f;
  DataSpec ds;
  ds.family = DataFamily::GaussianBump;
  ds.eps = 0.02;
  const InitialData d = build_initial_data(f.sp, f.fr, ds);
  CHECK(std::fabs(inner(f.g, f.fr.Y0, d.phi0)) < 1e-15);
  CHECK(norm_inf(d.phi1) == 0.0);
  CHECK(weighted_data_norm(f.sp, d.phi0, d.phi1) == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(parse_data_family("y2_localized") == DataFamily::Y2Localized);
  CHECK_THROWS_AS(parse_data_family("sine"), ConfigError);
  ds.family = DataFamily::CustomFile;
  ds.path = "/nonexistent/kglab.txt";
  CHECK_THROWS_AS(build_initial_data(f.sp, f.fr, ds), ConfigError);
}

TEST_CASE("unstable-mode ODE and flat equation hold along the flow") {
  Fixture f;
  DataSpec ds;
  const InitialData data = build_initial_data(f.sp, f.fr, ds);
  const SimState s0 = make_initial_state(f.fr, data.phi0, data.phi1, 1e-4);
  const SolverConfig c = solver(0.001, 1.0, Integrator::Etdrk4);
  Evolver ev(f.fr, c);
  ev.load(s0);
  ev.advance_to(0.5);
  const SimState a = ev.state();
  ev.step();
  const SimState b = ev.state();
  ev.step();
  const SimState d = ev.state();
  const ModeCoefficients mc = mode_coefficients(f.fr, b);
  CHECK(ode_residual_aplus(f.fr, a, b) < 1e-6 * std::max(1e-4, std::fabs(mc.a_plus)));
  const TransformedFields tf = derive_transformed(f.sp, f.fr, b);
  CHECK(tf.pc_residual < 1e-8);
  CHECK(flat_equation_residual(f.sp, f.fr, a, b, d) < 1e-6);
}

TEST_CASE("blow-up is reported as a solver failure") {
  Fixture f;
  const RealVector big = scale(f.fr.Y0, 1.0);
  const RealVector big_t = scale(f.fr.Y0, kNuV);
  SolverConfig c = solver(0.01, 50.0);
  Evolver ev(f.fr, c);
  ev.load(SimState{0.0, big, big_t});
  CHECK_THROWS_AS(ev.advance_to(50.0), SolverFailure);
  CHECK(all_finite(ev.last_good().phi));
  CHECK(ev.last_good().t > 0.0);
}
