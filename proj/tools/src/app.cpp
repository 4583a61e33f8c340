#include "kglab_app/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "kglab/csv.hpp"
#include "kglab/cutoffs.hpp"
#include "kglab/diagnostics.hpp"
#include "kglab/dynamics.hpp"
#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"
#include "kglab/identities.hpp"
#include "kglab/initial_data.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/shooting.hpp"

namespace kglab::app {

namespace {

const char* const kVersion = "0.1.0";

// Typed view of the flat config with defaults and validation.
struct ExperimentConfig {
  double L = 80.0;
  std::size_t N = 4096;

  SolverConfig solver;
  double energy_tol = 1e-6;
  double parity_tol = 1e-10;

  DataSpec data;
  double d = 0.0;
  bool auto_project = false;
  bool simulate_shot = false;

  double t_goal = 200.0;
  int max_iter = 200;
  std::optional<std::pair<double, double>> bracket;
  bool continuation = true;
  double margin = 6.0;
  int max_segments = 200;
  double extension = 0.0;

  std::string output_path;
  double sharpness = 0.0;
  int n_max = 0;  // 0: as many time pieces as t requires
  double local_decay_weight = 2.0;

  int samples = 50;
  PvQuadratureOptions pv;

  std::string fit_input;
  double fit_t0 = 10.0, fit_t1 = 200.0;
  double early_t0 = 0.0, early_t1 = 3.0;
  double late_t0 = 50.0, late_t1 = 200.0;

  std::uint64_t seed = 20240601;

  static ExperimentConfig from(const Config& c) {
    ExperimentConfig e;
    e.L = c.get_double("grid.L", e.L);
    const long long n = c.get_int("grid.N", static_cast<long long>(e.N));
    if (n <= 0) throw ConfigError("grid.N must be positive");
    e.N = static_cast<std::size_t>(n);

    e.solver.dt = c.get_double("solver.dt", e.solver.dt);
    e.solver.t_end = c.get_double("solver.t_end", e.solver.t_end);
    e.solver.integrator = parse_integrator(c.get_string("solver.integrator", "strang"));
    e.solver.dealias = c.get_bool("solver.dealias", e.solver.dealias);
    e.solver.include_potential = c.get_bool("solver.potential", true);
    e.solver.include_nonlinearity = c.get_bool("solver.nonlinearity", true);
    e.energy_tol = c.get_double("solver.energy_tol", e.energy_tol);
    e.parity_tol = c.get_double("solver.parity_tol", e.parity_tol);

    e.data.family = parse_data_family(c.get_string("data.family", to_string(e.data.family)));
    e.data.eps = c.get_double("data.eps", e.data.eps);
    e.data.width = c.get_double("data.width", e.data.width);
    e.data.path = c.get_string("data.path", "");
    e.d = c.get_double("data.d", 0.0);
    e.auto_project = c.get_bool("data.auto_project", false);
    e.simulate_shot = c.get_bool("simulate.shoot", false);

    e.t_goal = c.get_double("shoot.t_goal", e.t_goal);
    e.max_iter = static_cast<int>(c.get_int("shoot.max_iter", e.max_iter));
    if (c.has("shoot.bracket_lo") != c.has("shoot.bracket_hi")) {
      throw ConfigError("shoot.bracket_lo and shoot.bracket_hi must be given together");
    }
    if (c.has("shoot.bracket_lo")) {
      e.bracket = {c.get_double("shoot.bracket_lo", 0.0), c.get_double("shoot.bracket_hi", 0.0)};
    }
    e.continuation = c.get_bool("shoot.continuation", e.continuation);
    e.margin = c.get_double("shoot.margin", e.margin);
    e.max_segments = static_cast<int>(c.get_int("shoot.max_segments", e.max_segments));
    e.extension = c.get_double("shoot.extension", e.extension);

    e.output_path = c.get_string("output.path", "");
    const long long stride = c.get_int("output.stride", 10);
    if (stride <= 0) throw ConfigError("output.stride must be >= 1");
    e.solver.output_stride = static_cast<std::size_t>(stride);

    e.sharpness = c.get_double("diagnostics.sharpness", e.sharpness);
    e.n_max = static_cast<int>(c.get_int("diagnostics.n_max", e.n_max));
    e.local_decay_weight = c.get_double("diagnostics.local_decay_weight", e.local_decay_weight);

    e.samples = static_cast<int>(c.get_int("identities.samples", e.samples));
    if (e.samples <= 0) throw ConfigError("identities.samples must be positive");
    e.pv.step = c.get_double("pv.step", e.pv.step);
    e.pv.cutoff = c.get_double("pv.cutoff", e.pv.cutoff);
    if (!(e.pv.step > 0.0) || !(e.pv.cutoff > e.pv.step)) {
      throw ConfigError("pv.step must be positive and below pv.cutoff");
    }

    e.fit_input = c.get_string("fit.input", "");
    e.fit_t0 = c.get_double("fit.t0", e.fit_t0);
    e.fit_t1 = c.get_double("fit.t1", e.fit_t1);
    e.early_t0 = c.get_double("fit.early_t0", e.early_t0);
    e.early_t1 = c.get_double("fit.early_t1", e.early_t1);
    e.late_t0 = c.get_double("fit.late_t0", e.late_t0);
    e.late_t1 = c.get_double("fit.late_t1", e.late_t1);

    const long long seed = c.get_int("seed", static_cast<long long>(e.seed));
    if (seed < 0) throw ConfigError("seed must be non-negative");
    e.seed = static_cast<std::uint64_t>(seed);
    return e;
  }

  // Every key with its effective value, so the header hash covers defaults.
  Config resolved() const {
    Config c;
    auto num = [](double v) { return format_number(v); };
    c.set("grid.L", num(L));
    c.set("grid.N", std::to_string(N));
    c.set("solver.dt", num(solver.dt));
    c.set("solver.t_end", num(solver.t_end));
    c.set("solver.integrator", to_string(solver.integrator));
    c.set("solver.dealias", solver.dealias ? "true" : "false");
    c.set("solver.potential", solver.include_potential ? "true" : "false");
    c.set("solver.nonlinearity", solver.include_nonlinearity ? "true" : "false");
    c.set("solver.energy_tol", num(energy_tol));
    c.set("solver.parity_tol", num(parity_tol));
    c.set("data.family", to_string(data.family));
    c.set("data.eps", num(data.eps));
    c.set("data.width", num(data.width));
    c.set("data.path", data.path);
    c.set("data.d", num(d));
    c.set("data.auto_project", auto_project ? "true" : "false");
    c.set("simulate.shoot", simulate_shot ? "true" : "false");
    c.set("shoot.t_goal", num(t_goal));
    c.set("shoot.max_iter", std::to_string(max_iter));
    if (bracket) {
      c.set("shoot.bracket_lo", num(bracket->first));
      c.set("shoot.bracket_hi", num(bracket->second));
    }
    c.set("shoot.continuation", continuation ? "true" : "false");
    c.set("shoot.margin", num(margin));
    c.set("shoot.max_segments", std::to_string(max_segments));
    c.set("shoot.extension", num(extension));
    c.set("output.stride", std::to_string(solver.output_stride));
    c.set("diagnostics.sharpness", num(sharpness));
    c.set("diagnostics.n_max", std::to_string(n_max));
    c.set("diagnostics.local_decay_weight", num(local_decay_weight));
    c.set("identities.samples", std::to_string(samples));
    c.set("pv.step", num(pv.step));
    c.set("pv.cutoff", num(pv.cutoff));
    c.set("fit.input", fit_input);
    c.set("fit.t0", num(fit_t0));
    c.set("fit.t1", num(fit_t1));
    c.set("fit.early_t0", num(early_t0));
    c.set("fit.early_t1", num(early_t1));
    c.set("fit.late_t0", num(late_t0));
    c.set("fit.late_t1", num(late_t1));
    c.set("seed", std::to_string(seed));
    return c;
  }

  Grid grid() const {
    try {
      return Grid::make(L, N);
    } catch (const DomainError& ex) {
      throw ConfigError(std::string("grid: ") + ex.what());
    }
  }
};

// A failed check: reported and turned into exit code 1.
struct CheckLog {
  std::ostream& log;
  bool failed = false;
  void check(const std::string& name, double measured, double limit, bool upper = true) {
    const bool ok = upper ? measured < limit : measured > limit;
    if (!ok) {
      failed = true;
      log << "tolerance failure: " << name << " measured " << format_number(measured)
          << (upper ? " (limit < " : " (limit > ") << format_number(limit) << ")\n";
    }
  }
};

ShootingConfig shooting_config(const ExperimentConfig& e, int threads) {
  ShootingConfig sc;
  sc.solver = e.solver;
  sc.solver.t_end = e.t_goal;
  sc.eps = e.data.eps;
  sc.t_goal = e.t_goal;
  sc.max_iter = e.max_iter;
  sc.bracket = e.bracket;
  sc.continuation = e.continuation;
  sc.continuation_margin = e.margin;
  sc.max_segments = e.max_segments;
  sc.horizon_extension = e.extension;
  sc.threads = threads;
  return sc;
}

void write_header(CsvWriter& w, const std::string& sub, const Config&,
                  const ExperimentConfig& e, const std::string& tolerances) {
  // output.path is excluded: where the bytes go must not change them.
  const Config cfg = e.resolved();
  w.meta("kglab", kVersion);
  w.meta("subcommand", sub);
  w.meta("config_hash", cfg.hash_hex());
  w.meta("grid", "L=" + format_number(e.L) + " N=" + std::to_string(e.N));
  w.meta("tolerances", tolerances);
  w.meta("sharpness_s", e.sharpness);
  w.meta("seed", std::to_string(e.seed));
  for (const auto& [k, v] : cfg.entries()) w.meta("config." + k, v);
}

int verify_identities(const Config& cfg, const ExperimentConfig& e, const RunOptions& opt,
                      std::ostream& csv, std::ostream& log) {
  IdentityOptions io;
  io.box_length = e.L;
  io.num_points = e.N;
  io.random_samples = e.samples;
  io.seed = e.seed;
  io.pv = e.pv;
  io.threads = opt.threads;
  e.grid();
  const auto results = run_identity_battery(io);

  CsvWriter w(csv);
  write_header(w, "verify-identities", cfg, e, "per row");
  w.columns({"identity_name", "max_residual", "tolerance", "status"});
  int failures = 0;
  for (const auto& r : results) {
    w.row({r.name, r.max_residual, r.tolerance, std::string(r.pass() ? "PASS" : "FAIL")});
    if (!r.pass()) {
      ++failures;
      log << "tolerance failure: " << r.name << " residual " << format_number(r.max_residual)
          << " (limit < " << format_number(r.tolerance) << ")\n";
    }
  }
  log << results.size() - failures << "/" << results.size() << " identities pass\n";
  return failures ? kToleranceFailure : kOk;
}

int spectral(const Config& cfg, const ExperimentConfig& e, std::ostream& csv, std::ostream& log) {
  const Grid g = e.grid();
  const Spectral sp(g);
  const SolitonFrame fr = SolitonFrame::build(g);
  CheckLog checks{log};

  CsvWriter w(csv);
  write_header(w, "spectral", cfg, e, "eigen<1e-8 norm<1e-8 resonance<1e-6 transmission<1e-14");
  w.columns({"kind", "name", "xi", "re", "im"});

  const RealVector ly0 = apply_L(sp, fr, fr.Y0);
  const RealVector ly1 = apply_L(sp, fr, fr.Y1);
  const RealVector ly2 = apply_L(sp, fr, fr.Y2);
  RealVector r0 = ly0, r2 = ly2;
  axpy(3.0, fr.Y0, r0);
  axpy(-1.0, fr.Y2, r2);
  const double e0 = norm_inf(r0), e1 = norm_inf(ly1), e2 = norm_inf(r2);
  const double n0 = norm_l2(g, fr.Y0) - 1.0, n1 = norm_l2(g, fr.Y1) - 1.0;
  const double nan = std::nan("");
  w.row({std::string("eigen_residual"), std::string("L_Y0_plus_3_Y0"), nan, e0, 0.0});
  w.row({std::string("eigen_residual"), std::string("L_Y1"), nan, e1, 0.0});
  w.row({std::string("eigen_residual"), std::string("L_Y2_minus_Y2"), nan, e2, 0.0});
  w.row({std::string("norm_defect"), std::string("Y0"), nan, n0, 0.0});
  w.row({std::string("norm_defect"), std::string("Y1"), nan, n1, 0.0});
  checks.check("L_Y0_plus_3_Y0", e0, 1e-8);
  checks.check("L_Y1", e1, 1e-8);
  checks.check("L_Y2_minus_Y2", e2, 1e-8);
  checks.check("norm_Y0", std::fabs(n0), 1e-8);
  checks.check("norm_Y1", std::fabs(n1), 1e-8);

  double tmod = 0.0;
  for (int i = -40; i <= 40; ++i) {
    const double xi = 0.125 * i;
    const Complex t = transmission(xi);
    tmod = std::max(tmod, std::fabs(std::abs(t) - 1.0));
    w.row({std::string("transmission"), std::string("T"), xi, t.real(), t.imag()});
  }
  checks.check("transmission_modulus", tmod, 1e-14);

  RealVector src(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) src[j] = 3.0 * fr.Q[j] * fr.Y2[j] * fr.Y2[j];
  const double nu = std::numbers::sqrt3;
  const auto quad = distorted_ft(g, src, nu);
  if (quad.warning) log << "warning: " << *quad.warning << "\n";
  const Complex ref = resonance_constant();
  w.row({std::string("resonance"), std::string("quadrature"), nu, quad.value.real(),
         quad.value.imag()});
  w.row({std::string("resonance"), std::string("closed_form"), nu, ref.real(), ref.imag()});
  const auto quad_m = distorted_ft(g, src, -nu);
  w.row({std::string("resonance"), std::string("quadrature"), -nu, quad_m.value.real(),
         quad_m.value.imag()});
  checks.check("resonance_real", std::fabs(quad.value.real() - ref.real()), 1e-6);
  checks.check("resonance_imag", std::fabs(quad.value.imag() - ref.imag()), 1e-6);
  return checks.failed ? kToleranceFailure : kOk;
}

int simulate(const Config& cfg, const ExperimentConfig& e, const RunOptions& opt,
             std::ostream& csv, std::ostream& log) {
  const Grid g = e.grid();
  e.solver.validate(g);
  const Spectral sp(g);
  const SolitonFrame fr = SolitonFrame::build(g);
  const InitialData data = build_initial_data(sp, fr, e.data);
  InitialStateReport rep;
  const SimState s0 = make_initial_state(fr, data.phi0, data.phi1, e.d, e.auto_project, &rep);
  if (rep.projected) {
    log << "note: removed Y0 component " << format_number(rep.orthogonality_defect)
        << " from phi1\n";
  }

  // With simulate.shoot the trajectory is the shot one (d_star plus
  // continuation corrections) up to min(t_end, survival time).
  std::optional<ShootingResult> shot;
  ShootingConfig sc;
  if (e.simulate_shot) {
    if (e.d != 0.0 || e.auto_project) {
      throw ConfigError("simulate.shoot=true chooses d itself; drop data.d and data.auto_project");
    }
    sc = shooting_config(e, opt.threads);
    sc.t_goal = e.solver.t_end;
    sc.solver.t_end = e.solver.t_end;
    shot = shoot(fr, data.phi0, data.phi1, sc);
    log << shot->status << "\n";
  }

  CsvWriter w(csv);
  write_header(w, "simulate", cfg, e,
               "energy_drift<" + format_number(e.energy_tol) +
                   " parity<" + format_number(e.parity_tol));
  w.meta("eps", data.eps);
  w.meta("integrator", to_string(e.solver.integrator));
  if (shot) {
    w.meta("shot.d_star", shot->d_star);
    w.meta("shot.segments", std::to_string(shot->segments.size()));
    w.meta("shot.survival_time", shot->survival_time);
  }
  w.columns({"t", "linf_phi", "l2_phi", "a_plus", "a_minus", "energy", "local_decay_norm",
             "nt_norm_proxy"});

  double e_first = std::nan("");
  double drift = 0.0, parity = 0.0;
  auto emit = [&](const Evolver& ev) {
    const SimState s = ev.state();
    const ModeCoefficients mc = ev.coefficients();
    const double en = energy(sp, fr, s);
    // Drift is measured against the first frame, which for a shot run is the shifted data.
    if (std::isnan(e_first)) e_first = en;
    drift = std::max(drift, std::fabs(en - e_first) / std::max(std::fabs(e_first), 1e-300));
    parity = std::max(parity, odd_part_inf(g, s.phi));
    const TransformedFields tf = derive_transformed(sp, fr, s);
    const double ld = local_decay_norm(sp, tf.v, LocalDecayVariant::Dx, e.local_decay_weight);
    const ComplexVector fhat = sp.forward(std::span<const Complex>(tf.f));
    const int n_max = e.n_max > 0 ? e.n_max : time_partition_max_index(std::max(s.t, 1.0));
    const double nt = nt_norm(g, fhat, std::max(s.t, 1.0), n_max, e.sharpness);
    w.row({s.t, norm_inf(s.phi), norm_l2(g, s.phi), mc.a_plus, mc.a_minus, en, ld, nt});
  };

  if (shot) {
    replay(fr, data.phi0, data.phi1, *shot, sc, e.solver.output_stride, emit);
  } else {
    Evolver ev(fr, e.solver);
    ev.load(s0);
    emit(ev);
    const auto steps = static_cast<std::size_t>(std::llround(e.solver.t_end / e.solver.dt));
    for (std::size_t k = 1; k <= steps; ++k) {
      ev.step();
      if (k % e.solver.output_stride == 0 || k == steps) emit(ev);
    }
  }
  CheckLog checks{log};
  w.meta("summary.energy_drift", drift);
  w.meta("summary.parity_residual", parity);
  checks.check("energy_drift", drift, e.energy_tol);
  checks.check("parity_residual", parity, e.parity_tol);
  if (shot) checks.check("shot_survival_time", shot->survival_time, e.solver.t_end * (1.0 - 1e-9), false);
  return checks.failed ? kToleranceFailure : kOk;
}

int shoot_cmd(const Config& cfg, const ExperimentConfig& e, const RunOptions& opt,
              std::ostream& csv, std::ostream& log) {
  const Grid g = e.grid();
  const ShootingConfig sc = shooting_config(e, opt.threads);
  sc.solver.validate(g);

  const Spectral sp(g);
  const SolitonFrame fr = SolitonFrame::build(g);
  const InitialData data = build_initial_data(sp, fr, e.data);
  const ShootingResult res = shoot(fr, data.phi0, data.phi1, sc);

  CsvWriter w(csv);
  const TrappingRule rule{e.data.eps};
  write_header(w, "shoot", cfg, e, "|d_star|<=" + format_number(rule.constant()));
  w.meta("eps", data.eps);
  w.columns({"probe", "stage", "start_time", "parameter", "exit_time", "side", "solver_failure",
             "outgoing", "post_exit_rate"});
  long long idx = 0;
  for (const auto& p : res.probes) {
    w.row({idx++, static_cast<long long>(p.stage), p.start_time, p.parameter, p.exit_time,
           to_string(p.side), static_cast<long long>(p.solver_failure), to_string(p.outgoing),
           p.post_exit_rate});
  }
  w.meta("summary.d_star", res.d_star);
  w.meta("summary.initial_bracket",
         format_number(res.initial_bracket.first) + " " + format_number(res.initial_bracket.second));
  w.meta("summary.final_bracket",
         format_number(res.final_bracket.first) + " " + format_number(res.final_bracket.second));
  w.meta("summary.bisection_survival", res.bisection_survival);
  w.meta("summary.survival_time", res.survival_time);
  w.meta("summary.horizon", res.horizon);
  w.meta("summary.reached_goal", res.reached_goal ? "true" : "false");
  w.meta("summary.segments", std::to_string(res.segments.size()));
  w.meta("summary.interior_monotonicity", res.interior_monotonicity);
  w.meta("summary.status", res.status);

  CheckLog checks{log};
  checks.check("abs_d_star", std::fabs(res.d_star), rule.constant() * (1.0 + 1e-12));
  checks.check("survival_time", res.survival_time, e.t_goal * (1.0 - 1e-9), false);
  log << res.status << "\n";
  return checks.failed ? kToleranceFailure : kOk;
}

int decay_fit(const Config& cfg, const ExperimentConfig& e, std::ostream& csv, std::ostream& log) {
  if (e.fit_input.empty()) throw ConfigError("decay-fit needs fit.input (a simulate CSV)");
  const CsvTable in = read_csv_file(e.fit_input);
  double eps = e.data.eps;
  for (const auto& [k, v] : in.meta) {
    if (k == "eps") eps = std::stod(v);
  }
  const auto t = in.numeric_column("t");
  const auto linf = in.numeric_column("linf_phi");
  const auto am = in.numeric_column("a_minus");

  CsvWriter w(csv);
  write_header(w, "decay-fit", cfg, e, "none");
  w.meta("eps", eps);
  w.meta("input", e.fit_input);
  w.columns({"quantity", "model", "t0", "t1", "constant", "exponent", "residual", "windows"});
  const DecayFit pl = linf_decay_ratio(t, linf, eps, e.fit_t0, e.fit_t1);
  const DecayFit pp = fit_pure_power(t, linf, e.fit_t0, e.fit_t1);
  for (const DecayFit* f : {&pl, &pp}) {
    w.row({std::string("linf_phi"), to_string(f->model), f->t0, f->t1, f->constant, f->exponent,
           f->residual, static_cast<long long>(f->windows.size())});
  }
  const AMinusEnvelope env =
      a_minus_envelope(t, am, eps, e.early_t0, e.early_t1, e.late_t0, e.late_t1);
  const double nan = std::nan("");
  w.row({std::string("a_minus_early"), std::string("exponential"), e.early_t0, e.early_t1, env.c1,
         env.early_slope, nan, 0LL});
  w.row({std::string("a_minus_late"), std::string("power_log"), e.late_t0, e.late_t1, env.c2,
         -1.0, nan, static_cast<long long>(env.late_windows.size())});
  for (const auto& win : pl.windows) {
    w.row({std::string("linf_window"), std::string("max"), win.t_lo, win.t_hi, win.value,
           win.t_at_max, nan, 0LL});
  }
  log << "power_log C = " << format_number(pl.constant) << ", pure power exponent "
      << format_number(pp.exponent) << "\n";
  return kOk;
}

}  // namespace

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "grid.L", "grid.N",
      "solver.dt", "solver.t_end", "solver.integrator", "solver.dealias", "solver.potential",
      "solver.nonlinearity", "solver.energy_tol", "solver.parity_tol",
      "data.family", "data.eps", "data.width", "data.path", "data.d", "data.auto_project",
      "simulate.shoot",
      "shoot.t_goal", "shoot.max_iter", "shoot.bracket_lo", "shoot.bracket_hi",
      "shoot.continuation", "shoot.margin", "shoot.max_segments", "shoot.extension",
      "output.path", "output.stride",
      "diagnostics.sharpness", "diagnostics.n_max", "diagnostics.local_decay_weight",
      "identities.samples", "pv.step", "pv.cutoff",
      "fit.input", "fit.t0", "fit.t1", "fit.early_t0", "fit.early_t1", "fit.late_t0",
      "fit.late_t1",
      "seed"};
  return keys;
}

int run_subcommand_to(const std::string& name, const Config& cfg_in, const RunOptions& opt,
                      std::ostream& csv, std::ostream& log) {
  try {
    Config cfg = cfg_in;
    if (opt.seed) cfg.set("seed", std::to_string(*opt.seed));
    const auto unknown = cfg.unknown_keys(known_keys());
    if (!unknown.empty()) throw ConfigError("unknown config key '" + unknown.front() + "'");
    if (opt.threads < 1) throw ConfigError("--threads must be >= 1");
    const ExperimentConfig e = ExperimentConfig::from(cfg);
    if (name == "verify-identities") return verify_identities(cfg, e, opt, csv, log);
    if (name == "spectral") return spectral(cfg, e, csv, log);
    if (name == "simulate") return simulate(cfg, e, opt, csv, log);
    if (name == "shoot") return shoot_cmd(cfg, e, opt, csv, log);
    if (name == "decay-fit") return decay_fit(cfg, e, csv, log);
    throw ConfigError("unknown subcommand '" + name + "'");
  } catch (const ConfigError& ex) {
    log << "config error: " << ex.what() << "\n";
    return kConfigError;
  } catch (const DomainError& ex) {
    log << "config error: " << ex.what() << "\n";
    return kConfigError;
  } catch (const NoSignChange& ex) {
    log << "tolerance failure: " << ex.what() << "\n";
    return kToleranceFailure;
  } catch (const SolverFailure& ex) {
    log << "solver failure: " << ex.what() << "\n";
    return kSolverFailure;
  }
}

int run_subcommand(const std::string& name, const Config& cfg, const RunOptions& opt,
                   std::ostream& log) {
  std::string path = opt.out_path;
  if (path.empty()) {
    try {
      path = cfg.get_string("output.path", "");
    } catch (const ConfigError& ex) {
      log << "config error: " << ex.what() << "\n";
      return kConfigError;
    }
  }
  if (path.empty() || path == "-") return run_subcommand_to(name, cfg, opt, std::cout, log);
  // Buffer so a failed run never leaves a partial file behind.
  std::ostringstream buf;
  const int code = run_subcommand_to(name, cfg, opt, buf, log);
  if (code == kConfigError) return code;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    log << "config error: cannot open output '" << path << "'\n";
    return kConfigError;
  }
  out << buf.str();
  return code;
}

}  // namespace kglab::app
