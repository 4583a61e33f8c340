#include "kglab/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

double TrappingRule::constant() const {
  const double l2 = std::numbers::ln2;
  return std::pow(eps, 1.5) / (l2 * l2);
}

double TrappingRule::functional(double t, double a_plus) const {
  const double lg = std::log(2.0 + t);
  return std::sqrt(1.0 + t * t) * std::fabs(a_plus) / (lg * lg);
}

double TrappingRule::threshold(double t) const {
  const double lg = std::log(2.0 + t);
  return constant() * lg * lg / std::sqrt(1.0 + t * t);
}

std::string to_string(ExitSide s) {
  switch (s) {
    case ExitSide::Plus: return "+";
    case ExitSide::Minus: return "-";
    case ExitSide::None: return "none";
  }
  return "none";
}

std::string to_string(OutgoingStatus s) {
  switch (s) {
    case OutgoingStatus::Holds: return "holds";
    case OutgoingStatus::Fails: return "fails";
    case OutgoingStatus::NotApplicable: return "n/a";
  }
  return "n/a";
}

std::optional<ExitEvent> trapping_violation_time(std::span<const TrajectorySample> traj,
                                                 const TrappingRule& rule) {
  const double c = rule.constant();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double v = rule.functional(traj[i].t, traj[i].a_plus);
    if (v <= c) continue;
    ExitEvent e;
    e.side = traj[i].a_plus > 0.0 ? ExitSide::Plus : ExitSide::Minus;
    if (i == 0) {
      e.time = traj[0].t;
    } else {
      const double v0 = rule.functional(traj[i - 1].t, traj[i - 1].a_plus);
      const double frac = (c - v0) / (v - v0);
      e.time = traj[i - 1].t + frac * (traj[i].t - traj[i - 1].t);
    }
    return e;
  }
  return std::nullopt;
}

OutgoingStatus outgoing_check(std::span<const TrajectorySample> traj, double T) {
  if (traj.size() < 2) return OutgoingStatus::NotApplicable;
  std::size_t i = 0;
  while (i + 2 < traj.size() && traj[i + 1].t < T) ++i;
  const auto& s0 = traj[i];
  const auto& s1 = traj[i + 1];
  const double h = s1.t - s0.t;
  if (!(h > 0.0)) return OutgoingStatus::NotApplicable;
  const double frac = std::clamp((T - s0.t) / h, 0.0, 1.0);
  const double a = s0.a_plus + frac * (s1.a_plus - s0.a_plus);
  if (a == 0.0 && s0.a_plus == 0.0 && s1.a_plus == 0.0) return OutgoingStatus::NotApplicable;
  const double deriv = (s1.a_plus * s1.a_plus - s0.a_plus * s0.a_plus) / h;
  return (deriv >= kNu * a * a && a * a > 0.0) ? OutgoingStatus::Holds : OutgoingStatus::Fails;
}

double log_slope(std::span<const TrajectorySample> traj, double t0, double t1, bool use_minus) {
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  std::size_t n = 0;
  for (const auto& s : traj) {
    if (s.t < t0 || s.t > t1) continue;
    const double v = std::fabs(use_minus ? s.a_minus : s.a_plus);
    if (!(v > 0.0)) continue;
    const double y = std::log(v);
    st += s.t;
    sy += y;
    stt += s.t * s.t;
    sty += s.t * y;
    ++n;
  }
  if (n < 2) return 0.0;
  const double dn = static_cast<double>(n);
  const double den = dn * stt - st * st;
  return den == 0.0 ? 0.0 : (dn * sty - st * sy) / den;
}

namespace {

SimState shifted(const SolitonFrame& fr, SimState s, double delta) {
  axpy(delta, fr.Y0, s.phi);
  axpy(delta * kNu, fr.Y0, s.phi_t);
  return s;
}

ProbeRecord run_probe(Evolver& ev, const SimState& start, const TrappingRule& rule,
                      double t_goal, double post_window, int stage, double param) {
  ProbeRecord rec;
  rec.stage = stage;
  rec.start_time = start.t;
  rec.parameter = param;
  std::vector<TrajectorySample> samples;
  ev.load(start);
  auto sample = [&] {
    const auto c = ev.coefficients();
    samples.push_back({ev.time(), c.a_plus, c.a_minus});
  };
  sample();
  std::optional<ExitEvent> exit;
  const double c = rule.constant();
  auto check = [&] {
    const auto& s = samples.back();
    if (exit || rule.functional(s.t, s.a_plus) <= c) return;
    exit = trapping_violation_time(
        std::span<const TrajectorySample>(samples).subspan(samples.size() > 1 ? samples.size() - 2 : 0),
        rule);
  };
  check();
  const double dt = ev.config().dt;
  while (ev.time() < t_goal - 0.5 * dt) {
    if (exit && ev.time() >= exit->time + post_window) break;
    ev.step();
    sample();
    if (!std::isfinite(samples.back().a_plus)) {
      throw SolverFailure("non-finite unstable coefficient at t = " + std::to_string(ev.time()));
    }
    check();
  }
  if (exit) {
    rec.exit_time = exit->time;
    rec.side = exit->side;
    rec.outgoing = outgoing_check(samples, exit->time);
    rec.post_exit_rate = log_slope(samples, exit->time, exit->time + post_window);
  } else {
    rec.exit_time = ev.time();
    rec.side = ExitSide::None;
  }
  return rec;
}

struct BisectionOutcome {
  double best_param = 0.0;
  double best_time = -1.0;
  bool survived = false;
  std::pair<double, double> final_bracket;
  int monotone_steps = 0;
  int total_steps = 0;
};

// Bisection on a scalar added along (Y0, nu Y0) to `base`.
BisectionOutcome bisect(Evolver& ev, const SolitonFrame& fr, const SimState& base,
                        const TrappingRule& rule, const ShootingConfig& cfg, int stage,
                        double lo, double hi, ShootingResult& res, bool record_history) {
  auto probe = [&](Evolver& e, double param) {
    return run_probe(e, shifted(fr, base, param), rule, cfg.t_goal, cfg.post_exit_window, stage,
                     param);
  };
  ProbeRecord rlo, rhi;
  if (cfg.threads > 1) {
    Evolver other(fr, cfg.solver);
    auto fut = std::async(std::launch::async, [&] { return probe(other, hi); });
    rlo = probe(ev, lo);
    rhi = fut.get();
  } else {
    rlo = probe(ev, lo);
    rhi = probe(ev, hi);
  }
  res.probes.push_back(rlo);
  res.probes.push_back(rhi);
  if (rlo.side == rhi.side || rlo.side == ExitSide::None || rhi.side == ExitSide::None) {
    throw NoSignChange("no sign change: bracket endpoints exit on sides " + to_string(rlo.side) +
                       " and " + to_string(rhi.side));
  }
  BisectionOutcome out;
  const ExitSide side_lo = rlo.side;
  double t_lo = rlo.exit_time, t_hi = rhi.exit_time;
  if (record_history) res.bracket_history.emplace_back(lo, hi);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // double-precision floor
    const ProbeRecord r = probe(ev, mid);
    res.probes.push_back(r);
    ++out.total_steps;
    if (r.exit_time >= std::min(t_lo, t_hi)) ++out.monotone_steps;
    if (r.side == ExitSide::None) {
      out.survived = true;
      out.best_param = mid;
      out.best_time = r.exit_time;
      lo = hi = mid;
      if (record_history) res.bracket_history.emplace_back(lo, hi);
      break;
    }
    if (r.side == side_lo) {
      lo = mid;
      t_lo = r.exit_time;
    } else {
      hi = mid;
      t_hi = r.exit_time;
    }
    if (record_history) res.bracket_history.emplace_back(lo, hi);
  }
  out.final_bracket = {lo, hi};
  if (!out.survived) {
    // Report the better endpoint of the final bracket; an earlier probe may have lasted
    // longer when exit time is not monotone in the parameter, but it lies outside.
    out.best_param = t_lo >= t_hi ? lo : hi;
    out.best_time = std::max(t_lo, t_hi);
  }
  return out;
}

}  // namespace

ProbeRecord probe_from_start(const SolitonFrame& fr, std::span<const double> phi0,
                             std::span<const double> phi1, double d, const ShootingConfig& cfg) {
  Evolver ev(fr, cfg.solver);
  const SimState base = make_initial_state(fr, phi0, phi1, 0.0);
  return run_probe(ev, shifted(fr, base, d), TrappingRule{cfg.eps}, cfg.t_goal,
                   cfg.post_exit_window, 0, d);
}

ShootingResult shoot(const SolitonFrame& fr, std::span<const double> phi0,
                     std::span<const double> phi1, const ShootingConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(cfg.t_goal > 0.0)) throw ConfigError("shoot.t_goal must be positive");
  if (!(cfg.horizon_extension >= 0.0)) throw ConfigError("shoot.extension must be >= 0");
  const double horizon = cfg.t_goal + cfg.horizon_extension;
  SolverConfig scfg = cfg.solver;
  scfg.t_end = horizon;
  scfg.validate(fr.grid);
  ShootingConfig c = cfg;
  c.solver = scfg;
  c.t_goal = horizon;

  const TrappingRule rule{cfg.eps};
  ShootingResult res;
  res.eps = cfg.eps;
  res.horizon = horizon;
  const double D = rule.constant();
  auto [lo, hi] = cfg.bracket.value_or(std::make_pair(-D, D));
  if (!(lo < hi)) throw ConfigError("shoot.bracket must satisfy lo < hi");
  res.initial_bracket = {lo, hi};

  Evolver ev(fr, scfg);
  const SimState base = make_initial_state(fr, phi0, phi1, 0.0);
  const BisectionOutcome b0 = bisect(ev, fr, base, rule, c, 0, lo, hi, res, true);
  res.d_star = b0.best_param;
  res.final_bracket = b0.final_bracket;
  res.bisection_survival = b0.best_time;
  res.survival_time = b0.best_time;
  res.reached_goal = b0.survived || b0.best_time >= horizon - 0.5 * scfg.dt;
  res.interior_monotonicity =
      b0.total_steps > 0 ? static_cast<double>(b0.monotone_steps) / b0.total_steps : 1.0;
  res.status = res.reached_goal ? "reached t_goal by bisection" : "bisection hit precision floor";

  if (res.reached_goal || !cfg.continuation) return res;

  SimState checkpoint = shifted(fr, base, res.d_star);
  double last_tc = 0.0;
  for (int seg = 1; seg <= cfg.max_segments; ++seg) {
    const double target = res.survival_time - cfg.continuation_margin;
    if (target <= last_tc + scfg.dt) {
      res.status = "continuation stalled at t = " + std::to_string(res.survival_time);
      return res;
    }
    ev.load(checkpoint);
    ev.advance_to(target);
    const SimState at = ev.state();
    const double thr = rule.threshold(at.t);
    const BisectionOutcome bk = bisect(ev, fr, at, rule, c, seg, -2.0 * thr, 2.0 * thr, res, false);
    if (bk.best_time <= res.survival_time + scfg.dt) {
      res.status = "continuation stalled at t = " + std::to_string(res.survival_time);
      return res;
    }
    res.segments.push_back({at.t, bk.best_param, bk.best_time});
    res.survival_time = bk.best_time;
    checkpoint = shifted(fr, at, bk.best_param);
    last_tc = at.t;
    if (bk.survived || bk.best_time >= horizon - 0.5 * scfg.dt) {
      res.reached_goal = true;
      res.status = "reached t_goal with " + std::to_string(res.segments.size()) +
                   " continuation segments";
      return res;
    }
  }
  res.status = "continuation segment limit reached";
  return res;
}

void replay(const SolitonFrame& fr, std::span<const double> phi0, std::span<const double> phi1,
            const ShootingResult& res, const ShootingConfig& cfg, std::size_t stride,
            const FrameCallback& frame) {
  if (stride == 0) throw ConfigError("replay stride must be >= 1");
  SolverConfig scfg = cfg.solver;
  scfg.t_end = cfg.t_goal;
  Evolver ev(fr, scfg);
  SimState s = shifted(fr, make_initial_state(fr, phi0, phi1, 0.0), res.d_star);
  ev.load(s);
  std::size_t global = 0;
  frame(ev);
  const double end = std::min(cfg.t_goal, res.survival_time);
  const double dt = scfg.dt;
  auto run_until = [&](double t) {
    while (ev.time() < t - 0.5 * dt) {
      ev.step();
      ++global;
      if (global % stride == 0) frame(ev);
    }
  };
  for (const auto& seg : res.segments) {
    run_until(seg.t_checkpoint);
    ev.load(shifted(fr, ev.state(), seg.delta));
  }
  run_until(end);
  if (global % stride != 0) frame(ev);
}

}  // namespace kglab
