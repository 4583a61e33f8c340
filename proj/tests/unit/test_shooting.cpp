#include <cmath>
#include <vector>

#include "doctest.h"
#include "kglab/errors.hpp"
#include "kglab/initial_data.hpp"
#include "kglab/shooting.hpp"
#include "oracle_values.hpp"

using namespace kglab;

namespace {
struct Small {
  Grid g = Grid::make(128.0, 1024);
  Spectral sp{g};
  SolitonFrame fr = SolitonFrame::build(g);
  InitialData data = build_initial_data(sp, fr, DataSpec{});
  ShootingConfig cfg() const {
    ShootingConfig c;
    c.solver.dt = 0.02;
    c.solver.t_end = 40.0;
    c.t_goal = 40.0;
    c.eps = 0.05;
    return c;
  }
};
}  // namespace

TEST_CASE("trapping rule constants") {
  const TrappingRule r04{0.04};
  CHECK(r04.constant() == doctest::Approx(oracle::trapping_threshold_eps0p04).epsilon(1e-14));
  const TrappingRule r{0.05};
  CHECK(r.threshold(0.0) == doctest::Approx(std::pow(0.05, 1.5)).epsilon(1e-14));
  CHECK(r.functional(10.0, r.threshold(10.0)) == doctest::Approx(r.constant()));
  CHECK(r.constant() > oracle::dstar_bound_eps0p05);
}

TEST_CASE("violation time interpolates between samples") {
  const TrappingRule r{0.05};
  std::vector<TrajectorySample> traj;
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.1 * i;
    traj.push_back({t, 1e-6 * std::exp(std::sqrt(3.0) * t), 0.0});
  }
  const auto ev = trapping_violation_time(traj, r);
  REQUIRE(ev.has_value());
  CHECK(ev->side == ExitSide::Plus);
  CHECK(ev->time > 0.0);
  CHECK(ev->time < 10.0);
  CHECK(r.functional(ev->time, 1e-6 * std::exp(std::sqrt(3.0) * ev->time)) ==
        doctest::Approx(r.constant()).epsilon(1e-2));
  CHECK(outgoing_check(traj, ev->time) == OutgoingStatus::Holds);
  CHECK(log_slope(traj, 2.0, 8.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

  std::vector<TrajectorySample> calm = {{0.0, 0.0, 0.0}, {1.0, 1e-9, 0.0}};
  CHECK_FALSE(trapping_violation_time(calm, r).has_value());
}

TEST_CASE("shooting on a small box") {
  Small s;
  const ShootingConfig c = s.cfg();
  const ShootingResult res = shoot(s.fr, s.data.phi0, s.data.phi1, c);
  MESSAGE(res.status << " d* = " << res.d_star << " probes " << res.probes.size());
  CHECK(res.reached_goal);
  CHECK(res.survival_time >= c.t_goal);
  CHECK(std::fabs(res.d_star) <= TrappingRule{c.eps}.constant());
  CHECK(res.final_bracket.first <= res.d_star);
  CHECK(res.d_star <= res.final_bracket.second);
  REQUIRE(res.probes.size() >= 2);
  // The first two probes are the bracket endpoints, exiting on opposite sides at once.
  CHECK(res.probes[0].side != res.probes[1].side);
  CHECK(res.probes[0].side != ExitSide::None);
  for (const auto& b : res.bracket_history) CHECK(b.first < b.second);

  // Replay reproduces a trapped trajectory, twice identically.
  std::vector<double> a1, a2;
  const TrappingRule rule{c.eps};
  double worst = 0.0;
  replay(s.fr, s.data.phi0, s.data.phi1, res, c, 10, [&](const Evolver& ev) {
    const auto mc = ev.coefficients();
    a1.push_back(mc.a_plus);
    worst = std::max(worst, rule.functional(ev.time(), mc.a_plus) / rule.constant());
  });
  replay(s.fr, s.data.phi0, s.data.phi1, res, c, 10,
         [&](const Evolver& ev) { a2.push_back(ev.coefficients().a_plus); });
  CHECK(a1 == a2);
  CHECK(worst <= 1.0);
}

TEST_CASE("bracket without a sign change is reported") {
  Small s;
  ShootingConfig c = s.cfg();
  c.bracket = std::make_pair(0.01, 0.02);
  CHECK_THROWS_AS(shoot(s.fr, s.data.phi0, s.data.phi1, c), NoSignChange);
  c.bracket = std::make_pair(0.02, 0.01);
  CHECK_THROWS_AS(shoot(s.fr, s.data.phi0, s.data.phi1, c), ConfigError);
}

TEST_CASE("endpoint probes exit immediately") {
  Small s;
  const ShootingConfig c = s.cfg();
  const double d = TrappingRule{c.eps}.constant();
  const ProbeRecord hi = probe_from_start(s.fr, s.data.phi0, s.data.phi1, d, c);
  const ProbeRecord lo = probe_from_start(s.fr, s.data.phi0, s.data.phi1, -d, c);
  CHECK(hi.side == ExitSide::Plus);
  CHECK(lo.side == ExitSide::Minus);
  CHECK(hi.exit_time < 0.5);
  CHECK(lo.exit_time < 0.5);
}

TEST_CASE("horizon extension keeps the diagnostic window clear of the exit") {
  Small s;
  ShootingConfig c = s.cfg();
  c.horizon_extension = 4.0;
  const ShootingResult res = shoot(s.fr, s.data.phi0, s.data.phi1, c);
  CHECK(res.horizon == doctest::Approx(44.0));
  CHECK(res.reached_goal);
  CHECK(res.survival_time >= 44.0 - c.solver.dt);
  const TrappingRule rule{c.eps};
  double last_t = 0.0, last_ratio = 0.0;
  replay(s.fr, s.data.phi0, s.data.phi1, res, c, 10, [&](const Evolver& ev) {
    last_t = ev.time();
    last_ratio = rule.functional(ev.time(), ev.coefficients().a_plus) / rule.constant();
  });
  CHECK(last_t == doctest::Approx(40.0));
  // Four time units before the horizon a+ sits well below the threshold.
  CHECK(last_ratio < 0.1);

  // The box rule applies to the extended horizon.
  c.horizon_extension = 10.0;
  CHECK_THROWS_AS(shoot(s.fr, s.data.phi0, s.data.phi1, c), ConfigError);
}
