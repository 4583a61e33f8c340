#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kglab/dynamics.hpp"
#include "kglab/poschl_teller.hpp"

namespace kglab {

// Trapping functional <t> (log(2+t))^{-2} |a+(t)| against (log 2)^{-2} eps^{3/2}.
struct TrappingRule {
  double eps = 0.05;

  double constant() const;
  double functional(double t, double a_plus) const;
  // Largest admissible |a+| at time t.
  double threshold(double t) const;
};

struct TrajectorySample {
  double t = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
};

enum class ExitSide { None, Plus, Minus };
std::string to_string(ExitSide s);

struct ExitEvent {
  double time = 0.0;
  ExitSide side = ExitSide::None;
};

// First crossing of the trapping threshold, linearly interpolated between samples.
std::optional<ExitEvent> trapping_violation_time(std::span<const TrajectorySample> traj,
                                                 const TrappingRule& rule);

enum class OutgoingStatus { Holds, Fails, NotApplicable };
std::string to_string(OutgoingStatus s);

// d_t(a+^2) >= nu a+^2 at t = T, by centered differences on the samples.
OutgoingStatus outgoing_check(std::span<const TrajectorySample> traj, double T);

// Least-squares slope of log |a+| on [t0, t1].
double log_slope(std::span<const TrajectorySample> traj, double t0, double t1, bool use_minus = false);

struct ProbeRecord {
  int stage = 0;            // 0: bisection in d; k > 0: continuation segment k
  double start_time = 0.0;
  double parameter = 0.0;   // d for stage 0, added a+ correction otherwise
  double exit_time = 0.0;   // equals the horizon when no exit happened
  ExitSide side = ExitSide::None;
  bool solver_failure = false;
  OutgoingStatus outgoing = OutgoingStatus::NotApplicable;
  double post_exit_rate = 0.0;
};

struct ContinuationSegment {
  double t_checkpoint = 0.0;
  double delta = 0.0;
  double survival_time = 0.0;
};

struct ShootingConfig {
  SolverConfig solver;
  double eps = 0.05;
  double t_goal = 200.0;
  int max_iter = 200;
  std::optional<std::pair<double, double>> bracket;
  // Round-off in the unstable direction grows like e^{nu t}, so a single
  // bisection in d saturates near t ~ 20. Continuation re-shoots the
  // unstable coefficient at checkpoints along the best trajectory.
  bool continuation = true;
  double continuation_margin = 6.0;
  int max_segments = 200;
  double post_exit_window = 1.0;
  // Probes must stay trapped until t_goal + horizon_extension. A best trajectory
  // that only just reaches t_goal has a+ near the threshold there; a few extra
  // e-folding times push that tail out of the [0, t_goal] diagnostic window.
  double horizon_extension = 0.0;
  int threads = 1;
};

struct ShootingResult {
  double eps = 0.0;
  double d_star = 0.0;
  std::pair<double, double> initial_bracket;
  std::pair<double, double> final_bracket;
  std::vector<std::pair<double, double>> bracket_history;
  std::vector<ProbeRecord> probes;
  std::vector<ContinuationSegment> segments;
  double bisection_survival = 0.0;  // best T(d) of the pure d-bisection
  double survival_time = 0.0;       // after continuation
  double horizon = 0.0;             // t_goal + horizon_extension
  bool reached_goal = false;
  // Fraction of bisection steps where T(mid) >= min(T(lo), T(hi)).
  double interior_monotonicity = 0.0;
  std::string status;
};

// Thrown when the bracket endpoints exit on the same side.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ShootingResult shoot(const SolitonFrame& fr, std::span<const double> phi0,
                     std::span<const double> phi1, const ShootingConfig& cfg);

// Runs a single probe with parameter d from t = 0 (no continuation).
ProbeRecord probe_from_start(const SolitonFrame& fr, std::span<const double> phi0,
                             std::span<const double> phi1, double d, const ShootingConfig& cfg);

// Replays the shot trajectory (d_star plus continuation corrections) and
// calls `frame` every `stride` steps, including t = 0 and the final step.
using FrameCallback = std::function<void(const Evolver&)>;
void replay(const SolitonFrame& fr, std::span<const double> phi0, std::span<const double> phi1,
            const ShootingResult& res, const ShootingConfig& cfg, std::size_t stride,
            const FrameCallback& frame);

}  // namespace kglab
