#include "kglab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kglab/darboux.hpp"
#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

Integrator parse_integrator(const std::string& name) {
  if (name == "strang") return Integrator::Strang;
  if (name == "etdrk4") return Integrator::Etdrk4;
  throw ConfigError("unknown integrator '" + name + "' (expected strang or etdrk4)");
}

std::string to_string(Integrator integ) {
  return integ == Integrator::Strang ? "strang" : "etdrk4";
}

void SolverConfig::validate(const Grid& grid) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("solver.dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("solver.t_end must be >= 0");
  if (output_stride == 0) throw ConfigError("output.stride must be >= 1");
  if (enforce_box_rule && grid.length() < 2.0 * t_end + 40.0) {
    throw ConfigError("box rule violated: L = " + std::to_string(grid.length()) +
                      " < 2 t_end + 40 = " + std::to_string(2.0 * t_end + 40.0));
  }
}

ModeCoefficients mode_coefficients(const SolitonFrame& fr, std::span<const double> phi,
                                   std::span<const double> phi_t) {
  ModeCoefficients c;
  c.a = inner(fr.grid, fr.Y0, phi);
  c.a_dot = inner(fr.grid, fr.Y0, phi_t);
  c.a_plus = 0.5 * (c.a + c.a_dot / kNu);
  c.a_minus = 0.5 * (c.a - c.a_dot / kNu);
  return c;
}

ModeCoefficients mode_coefficients(const SolitonFrame& fr, const SimState& s) {
  return mode_coefficients(fr, s.phi, s.phi_t);
}

SimState make_initial_state(const SolitonFrame& fr, std::span<const double> phi0,
                            std::span<const double> phi1, double d, bool auto_project,
                            InitialStateReport* report, double parity_tol,
                            double orthogonality_tol) {
  const Grid& g = fr.grid;
  if (phi0.size() != g.size() || phi1.size() != g.size()) {
    throw DomainError("initial data size does not match the grid");
  }
  InitialStateReport rep;
  rep.odd_part = std::max(odd_part_inf(g, phi0), odd_part_inf(g, phi1));
  const double scale = std::max({1e-300, norm_inf(phi0), norm_inf(phi1)});
  if (rep.odd_part > parity_tol * scale) {
    throw DomainError("initial data is not even: odd part " + std::to_string(rep.odd_part));
  }
  SimState s;
  s.phi.assign(phi0.begin(), phi0.end());
  s.phi_t.assign(phi1.begin(), phi1.end());
  rep.orthogonality_defect = kNu * inner(g, fr.Y0, phi0) + inner(g, fr.Y0, phi1);
  if (std::fabs(rep.orthogonality_defect) > orthogonality_tol) {
    if (!auto_project) {
      throw DomainError("initial data violates <Y0, nu phi0 + phi1> = 0: defect " +
                        std::to_string(rep.orthogonality_defect));
    }
    axpy(-rep.orthogonality_defect, fr.Y0, s.phi_t);
    rep.projected = true;
  }
  axpy(d, fr.Y0, s.phi);
  axpy(d * kNu, fr.Y0, s.phi_t);
  if (report) *report = rep;
  return s;
}

namespace {

constexpr std::size_t kCheckpointStride = 64;

struct EtdCoefficients {
  Complex e, e2, q, f1, f2, f3;
};

// ETDRK4 weights; small |z| uses contour averaging to avoid cancellation.
EtdCoefficients etd_coefficients(Complex z, double h) {
  constexpr int kPoints = 64;
  EtdCoefficients c{};
  c.e = std::exp(z);
  c.e2 = std::exp(0.5 * z);
  if (std::abs(z) >= 0.5) {
    const Complex z3 = z * z * z;
    c.q = h * (c.e2 - 1.0) / z;
    c.f1 = h * (-4.0 - z + c.e * (4.0 - 3.0 * z + z * z)) / z3;
    c.f2 = h * (2.0 + z + c.e * (z - 2.0)) / z3;
    c.f3 = h * (-4.0 - 3.0 * z - z * z + c.e * (4.0 - z)) / z3;
    return c;
  }
  Complex q = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double th = std::numbers::pi * (i + 0.5) / kPoints;
    const Complex r = z + std::polar(1.0, 2.0 * th);
    const Complex er = std::exp(r);
    const Complex er2 = std::exp(0.5 * r);
    q += (er2 - 1.0) / r;
    f1 += (-4.0 - r + er * (4.0 - 3.0 * r + r * r)) / (r * r * r);
    f2 += (2.0 + r + er * (r - 2.0)) / (r * r * r);
    f3 += (-4.0 - 3.0 * r - r * r + er * (4.0 - r)) / (r * r * r);
  }
  const double inv = 1.0 / kPoints;
  c.q = h * q * inv;
  c.f1 = h * f1 * inv;
  c.f2 = h * f2 * inv;
  c.f3 = h * f3 * inv;
  return c;
}

}  // namespace

struct Evolver::Impl {
  const SolitonFrame* frame;
  SolverConfig cfg;
  Spectral sp;
  std::size_t n;
  std::size_t nh;
  double t = 0.0;
  std::size_t steps = 0;

  RealVector omega;   // <xi> per half-spectrum bin
  RealVector mask;    // dealias mask
  RealVector potential;
  ComplexVector y0_hat;  // unnormalized r2c(Y0)

  // Strang state: unnormalized DFT of phi and phi_t.
  ComplexVector phat, phat_t, force_hat;
  RealVector cosw, sinw_over_w, w_sinw;
  // ETDRK4 state in eigen-coordinates p = w phi^ - i phi_t^, m = conj partner.
  ComplexVector p, m;
  std::vector<EtdCoefficients> etd;

  RealVector phi_phys;
  RealVector work;
  ComplexVector cwork;
  SimState good;

  Impl(const SolitonFrame& fr, const SolverConfig& c)
      : frame(&fr), cfg(c), sp(fr.grid), n(fr.grid.size()), nh(fr.grid.size() / 2 + 1) {
    const Grid& g = fr.grid;
    omega.resize(nh);
    mask.assign(nh, 1.0);
    for (std::size_t k = 0; k < nh; ++k) {
      const double xi = g.xi_of_bin(k);
      omega[k] = std::sqrt(1.0 + xi * xi);
      if (cfg.dealias && 3 * k > n) mask[k] = 0.0;
    }
    mask[nh - 1] = 0.0;  // Nyquist
    potential.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      potential[j] = cfg.include_potential ? 6.0 * fr.sech2[j] : 0.0;
    }
    y0_hat.resize(nh);
    sp.r2c(fr.Y0, y0_hat);
    phat.resize(nh);
    phat_t.resize(nh);
    force_hat.resize(nh);
    phi_phys.resize(n);
    work.resize(n);
    cwork.resize(nh);
    const double h = cfg.dt;
    if (cfg.integrator == Integrator::Strang) {
      cosw.resize(nh);
      sinw_over_w.resize(nh);
      w_sinw.resize(nh);
      for (std::size_t k = 0; k < nh; ++k) {
        cosw[k] = std::cos(omega[k] * h);
        sinw_over_w[k] = std::sin(omega[k] * h) / omega[k];
        w_sinw[k] = omega[k] * std::sin(omega[k] * h);
      }
    } else {
      p.resize(nh);
      m.resize(nh);
      etd.resize(nh);
      for (std::size_t k = 0; k < nh; ++k) etd[k] = etd_coefficients(Complex(0.0, omega[k] * h), h);
    }
  }

  // Pointwise part 6 sech^2 phi + 3 Q phi^2 + phi^3 of a physical field,
  // transformed and masked into `out`.
  void pointwise_force(std::span<const double> phi, std::span<Complex> out) {
    const auto& fr = *frame;
    for (std::size_t j = 0; j < n; ++j) {
      const double u = phi[j];
      double val = potential[j] * u;
      if (cfg.include_nonlinearity) val += u * u * (3.0 * fr.Q[j] + u);
      work[j] = val;
    }
    sp.r2c(work, out);
    for (std::size_t k = 0; k < nh; ++k) out[k] *= mask[k];
  }

  void to_physical(std::span<const Complex> spec, std::span<double> out) {
    for (std::size_t k = 0; k < nh; ++k) cwork[k] = spec[k];
    sp.c2r(cwork, out);
    const double inv = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= inv;
  }

  void check_finite() {
    double s = 0.0;
    for (double v : phi_phys) s += v;
    if (!std::isfinite(s)) {
      throw SolverFailure("non-finite field at t = " + std::to_string(t) +
                          "; last good state at t = " + std::to_string(good.t));
    }
  }

  SimState snapshot() {
    SimState s;
    s.t = t;
    s.phi = phi_phys;
    s.phi_t.resize(n);
    if (cfg.integrator == Integrator::Strang) {
      to_physical(phat_t, s.phi_t);
    } else {
      ComplexVector pt(nh);
      for (std::size_t k = 0; k < nh; ++k) pt[k] = Complex(0.0, 0.5) * (p[k] - m[k]);
      to_physical(pt, s.phi_t);
    }
    return s;
  }

  void load(const SimState& s) {
    if (s.phi.size() != n || s.phi_t.size() != n) throw DomainError("state size mismatch");
    t = s.t;
    steps = 0;
    sp.r2c(s.phi, phat);
    sp.r2c(s.phi_t, phat_t);
    phi_phys = s.phi;
    if (cfg.integrator == Integrator::Strang) {
      pointwise_force(phi_phys, force_hat);
    } else {
      for (std::size_t k = 0; k < nh; ++k) {
        p[k] = omega[k] * phat[k] - Complex(0.0, 1.0) * phat_t[k];
        m[k] = omega[k] * phat[k] + Complex(0.0, 1.0) * phat_t[k];
      }
    }
    good = s;
  }

  void step_strang() {
    const double half = 0.5 * cfg.dt;
    for (std::size_t k = 0; k < nh; ++k) {
      const Complex v = phat_t[k] + half * force_hat[k];
      const Complex u = phat[k];
      phat[k] = cosw[k] * u + sinw_over_w[k] * v;
      phat_t[k] = -w_sinw[k] * u + cosw[k] * v;
    }
    to_physical(phat, phi_phys);
    pointwise_force(phi_phys, force_hat);
    for (std::size_t k = 0; k < nh; ++k) phat_t[k] += half * force_hat[k];
  }

  // N_p = -i F^, N_m = +i F^ with F evaluated at phi^ = (p + m) / (2 w).
  void etd_nonlinear(std::span<const Complex> pp, std::span<const Complex> mm,
                     std::span<Complex> np) {
    ComplexVector ph(nh);
    for (std::size_t k = 0; k < nh; ++k) ph[k] = (pp[k] + mm[k]) / (2.0 * omega[k]);
    to_physical(ph, work);
    RealVector phys = work;
    pointwise_force(phys, np);
    for (std::size_t k = 0; k < nh; ++k) np[k] *= Complex(0.0, -1.0);
  }

  void step_etdrk4() {
    // m carries the conjugate coefficients and the opposite-sign forcing.
    ComplexVector nu_p(nh), na_p(nh), nb_p(nh), nc_p(nh);
    ComplexVector ap(nh), am(nh), bp(nh), bm(nh), cp(nh), cm(nh);
    etd_nonlinear(p, m, nu_p);
    for (std::size_t k = 0; k < nh; ++k) {
      const auto& c = etd[k];
      ap[k] = c.e2 * p[k] + c.q * nu_p[k];
      am[k] = std::conj(c.e2) * m[k] - std::conj(c.q) * nu_p[k];
    }
    etd_nonlinear(ap, am, na_p);
    for (std::size_t k = 0; k < nh; ++k) {
      const auto& c = etd[k];
      bp[k] = c.e2 * p[k] + c.q * na_p[k];
      bm[k] = std::conj(c.e2) * m[k] - std::conj(c.q) * na_p[k];
    }
    etd_nonlinear(bp, bm, nb_p);
    for (std::size_t k = 0; k < nh; ++k) {
      const auto& c = etd[k];
      const Complex src = 2.0 * nb_p[k] - nu_p[k];
      cp[k] = c.e2 * ap[k] + c.q * src;
      cm[k] = std::conj(c.e2) * am[k] - std::conj(c.q) * src;
    }
    etd_nonlinear(cp, cm, nc_p);
    for (std::size_t k = 0; k < nh; ++k) {
      const auto& c = etd[k];
      const Complex comb_p = c.f1 * nu_p[k] + 2.0 * c.f2 * (na_p[k] + nb_p[k]) + c.f3 * nc_p[k];
      const Complex comb_m = std::conj(c.f1) * nu_p[k] +
                             2.0 * std::conj(c.f2) * (na_p[k] + nb_p[k]) +
                             std::conj(c.f3) * nc_p[k];
      p[k] = c.e * p[k] + comb_p;
      m[k] = std::conj(c.e) * m[k] - comb_m;
    }
    for (std::size_t k = 0; k < nh; ++k) phat[k] = (p[k] + m[k]) / (2.0 * omega[k]);
    to_physical(phat, phi_phys);
  }

};

Evolver::Evolver(const SolitonFrame& frame, const SolverConfig& cfg)
    : impl_(std::make_unique<Impl>(frame, cfg)) {
  if (!(cfg.dt > 0.0)) throw ConfigError("solver.dt must be positive");
}
Evolver::~Evolver() = default;
Evolver::Evolver(Evolver&&) noexcept = default;
Evolver& Evolver::operator=(Evolver&&) noexcept = default;

void Evolver::load(const SimState& s) { impl_->load(s); }

void Evolver::step() {
  auto& im = *impl_;
  if (im.cfg.integrator == Integrator::Strang) {
    im.step_strang();
  } else {
    im.step_etdrk4();
  }
  ++im.steps;
  im.t += im.cfg.dt;
  if (im.steps % kCheckpointStride == 0) {
    im.check_finite();
    im.good = im.snapshot();
  }
}

void Evolver::advance_to(double t) {
  while (impl_->t < t - 0.5 * impl_->cfg.dt) step();
}

double Evolver::time() const { return impl_->t; }
std::size_t Evolver::steps_taken() const { return impl_->steps; }

ModeCoefficients Evolver::coefficients() const {
  auto& im = *impl_;
  const auto& fr = *im.frame;
  ModeCoefficients c;
  c.a = inner(fr.grid, fr.Y0, im.phi_phys);
  // <Y0, phi_t> by Parseval on the half spectrum.
  auto dot = [&](std::size_t k, const Complex& v) { return (std::conj(im.y0_hat[k]) * v).real(); };
  double acc = 0.0;
  for (std::size_t k = 0; k < im.nh; ++k) {
    Complex vt = im.cfg.integrator == Integrator::Strang
                     ? im.phat_t[k]
                     : Complex(0.0, 0.5) * (im.p[k] - im.m[k]);
    const double weight = (k == 0 || k == im.nh - 1) ? 1.0 : 2.0;
    acc += weight * dot(k, vt);
  }
  c.a_dot = acc * fr.grid.dx() / static_cast<double>(im.n);
  c.a_plus = 0.5 * (c.a + c.a_dot / kNu);
  c.a_minus = 0.5 * (c.a - c.a_dot / kNu);
  return c;
}

std::span<const double> Evolver::phi() const { return impl_->phi_phys; }

SimState Evolver::state() const {
  impl_->check_finite();
  return impl_->snapshot();
}

const SimState& Evolver::last_good() const { return impl_->good; }
const SolverConfig& Evolver::config() const { return impl_->cfg; }
const SolitonFrame& Evolver::frame() const { return *impl_->frame; }

double energy(const Spectral& sp, const SolitonFrame& fr, const SimState& s) {
  const RealVector phi_x = sp.derivative(s.phi, 1);
  double acc = 0.0;
  for (std::size_t j = 0; j < s.phi.size(); ++j) {
    const double u = fr.Q[j] + s.phi[j];
    const double ux = fr.Q_x[j] + phi_x[j];
    const double ut = s.phi_t[j];
    acc += 0.5 * ut * ut + 0.5 * ux * ux + 0.5 * u * u - 0.25 * u * u * u * u;
  }
  return acc * fr.grid.dx();
}

double aplus_forcing(const SolitonFrame& fr, std::span<const double> phi) {
  double acc = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const double u = phi[j];
    acc += fr.Y0[j] * u * u * (3.0 * fr.Q[j] + u);
  }
  return acc * fr.grid.dx() / (2.0 * kNu);
}

double ode_residual_aplus(const SolitonFrame& fr, const SimState& s0, const SimState& s1,
                          bool nonlinear) {
  const double h = s1.t - s0.t;
  if (!(h > 0.0)) throw DomainError("ode_residual_aplus: frames must be increasing in time");
  const auto c0 = mode_coefficients(fr, s0);
  const auto c1 = mode_coefficients(fr, s1);
  double rhs = 0.5 * kNu * (c0.a_plus + c1.a_plus);
  if (nonlinear) rhs += 0.5 * (aplus_forcing(fr, s0.phi) + aplus_forcing(fr, s1.phi));
  return std::fabs((c1.a_plus - c0.a_plus) / h - rhs);
}

TransformedFields derive_transformed(const Spectral& sp, const SolitonFrame& fr,
                                     const SimState& s) {
  TransformedFields out;
  const RealVector pc = project_pc_even(fr, s.phi).value;
  const RealVector pc_t = project_pc_even(fr, s.phi_t).value;
  out.w = apply_d1d2(sp, fr, pc);
  out.w_t = apply_d1d2(sp, fr, pc_t);
  const RealVector jw = project_pc_even(fr, j_apply(fr.grid, out.w)).value;
  out.pc_residual = max_abs_diff(pc, jw);
  const RealVector dinv_wt = sp.japanese(out.w_t, -1.0);
  out.v.resize(out.w.size());
  for (std::size_t j = 0; j < out.w.size(); ++j) out.v[j] = 0.5 * Complex(out.w[j], -dinv_wt[j]);
  const double t = s.t;
  out.f = sp.apply(
      [t](double xi) { return std::polar(1.0, -t * std::sqrt(1.0 + xi * xi)); }, out.v,
      SymbolParity::Even);
  return out;
}

double flat_equation_residual(const Spectral& sp, const SolitonFrame& fr, const SimState& prev,
                              const SimState& mid, const SimState& next) {
  const double h0 = mid.t - prev.t;
  const double h1 = next.t - mid.t;
  if (!(h0 > 0.0) || std::fabs(h1 - h0) > 1e-9 * h0) {
    throw DomainError("flat_equation_residual: frames must be equally spaced");
  }
  const RealVector wt_prev = apply_d1d2(sp, fr, project_pc_even(fr, prev.phi_t).value);
  const RealVector wt_next = apply_d1d2(sp, fr, project_pc_even(fr, next.phi_t).value);
  const RealVector w = apply_d1d2(sp, fr, project_pc_even(fr, mid.phi).value);
  const RealVector flat = sp.apply_real(
      [](double xi) { return Complex(1.0 + xi * xi, 0.0); }, w, SymbolParity::Even);
  RealVector src(mid.phi.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const double u = mid.phi[j];
    src[j] = u * u * (3.0 * fr.Q[j] + u);
  }
  const RealVector dsrc = apply_d1d2(sp, fr, src);
  double r = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double wtt = (wt_next[j] - wt_prev[j]) / (2.0 * h0);
    r = std::max(r, std::fabs(wtt + flat[j] - dsrc[j]));
  }
  return r;
}

}  // namespace kglab
