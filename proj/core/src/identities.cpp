#include "kglab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>

#include "kglab/darboux.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::numbers::sqrt3;

IdentityResult make(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol};
}

// Accumulates the worst relative residual over a random sample set.
struct Worst {
  double value = 0.0;
  void add(double residual, double scale) {
    value = std::max(value, residual / std::max(scale, 1e-300));
  }
};

}  // namespace

RealVector random_schwartz(const Grid& g, std::mt19937_64& rng, bool even) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0), center(-3.0, 3.0), width(0.5, 2.0),
      freq(0.0, 3.0), phase(0.0, 2.0 * kPi);
  struct Bump {
    double a, c, s, k, p;
  };
  std::vector<Bump> bumps(3);
  for (auto& b : bumps) b = {amp(rng), center(rng), width(rng), freq(rng), phase(rng)};
  auto eval = [&](double x) {
    double v = 0.0;
    for (const auto& b : bumps) {
      const double y = (x - b.c) / b.s;
      v += b.a * std::exp(-y * y) * std::cos(b.k * x + b.p);
    }
    return v;
  };
  return g.sample([&](double x) { return even ? 0.5 * (eval(x) + eval(-x)) : eval(x); });
}

std::vector<IdentityResult> spectral_identities(const Spectral& sp, const SolitonFrame& fr) {
  std::vector<IdentityResult> out;
  const RealVector ly0 = apply_L(sp, fr, fr.Y0);
  const RealVector ly1 = apply_L(sp, fr, fr.Y1);
  const RealVector ly2 = apply_L(sp, fr, fr.Y2);
  double r0 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t j = 0; j < ly0.size(); ++j) {
    r0 = std::max(r0, std::fabs(ly0[j] + 3.0 * fr.Y0[j]));
    r1 = std::max(r1, std::fabs(ly1[j]));
    r2 = std::max(r2, std::fabs(ly2[j] - fr.Y2[j]));
  }
  out.push_back(make("L_Y0_eq_minus3_Y0", r0, 1e-8));
  out.push_back(make("L_Y1_eq_0", r1, 1e-8));
  out.push_back(make("L_Y2_eq_Y2", r2, 1e-8));
  out.push_back(make("norm_Y0_eq_1", std::fabs(norm_l2(fr.grid, fr.Y0) - 1.0), 1e-8));
  out.push_back(make("norm_Y1_eq_1", std::fabs(norm_l2(fr.grid, fr.Y1) - 1.0), 1e-8));
  out.push_back(make("Y0_orthogonal_Y1", std::fabs(inner(fr.grid, fr.Y0, fr.Y1)), 1e-12));
  return out;
}

std::vector<IdentityResult> scattering_identities(const Spectral& sp, const SolitonFrame& fr,
                                                  std::uint64_t seed) {
  (void)sp;
  std::vector<IdentityResult> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xi_dist(-50.0, 50.0);
  double tmod = 0.0;
  for (int i = 0; i < 1000; ++i) tmod = std::max(tmod, std::fabs(std::abs(transmission(xi_dist(rng))) - 1.0));
  out.push_back(make("transmission_unimodular", tmod, 1e-14));

  out.push_back(make("jost_normalization_x30_xi1",
                     std::abs(jost_plus(30.0, 1.0) * std::polar(1.0, -30.0) - 1.0), 1e-10));
  out.push_back(make("jost_wronskian_xi1",
                     std::abs(transmission(1.0) * jost_wronskian(0.3, 1.0) - Complex(0.0, -2.0)),
                     1e-8));

  // H f+ = xi^2 f+ with a fourth-order difference stencil at every grid point.
  const double h = 2e-3;
  double hres = 0.0;
  for (double xi : {0.5, kSqrt3, 3.0}) {
    for (std::size_t j = 0; j < fr.grid.size(); ++j) {
      const double x = fr.grid.x(j);
      const Complex d2 = (-jost_plus(x + 2 * h, xi) + 16.0 * jost_plus(x + h, xi) -
                          30.0 * jost_plus(x, xi) + 16.0 * jost_plus(x - h, xi) -
                          jost_plus(x - 2 * h, xi)) /
                         (12.0 * h * h);
      const Complex f = jost_plus(x, xi);
      hres = std::max(hres, std::abs(-d2 - 6.0 * fr.sech2[j] * f - xi * xi * f));
    }
  }
  out.push_back(make("jost_H_eigen", hres, 1e-8));
  return out;
}

std::vector<IdentityResult> darboux_identities(const Spectral& sp, const SolitonFrame& fr,
                                               int samples, std::uint64_t seed) {
  const Grid& g = fr.grid;
  std::mt19937_64 rng(seed);
  Worst conj, fac2, fac1, ri1, ri2, rj, jcomp, recon, ts1, tsj, adj1, adj2, pcj;
  for (int s = 0; s < samples; ++s) {
    const RealVector u = random_schwartz(g, rng);
    const RealVector v = random_schwartz(g, rng);
    const RealVector ue = random_schwartz(g, rng, true);
    const double un = norm_inf(u);

    const RealVector lhs = apply_d1d2(sp, fr, apply_L(sp, fr, u));
    const RealVector du = apply_d1d2(sp, fr, u);
    const RealVector rhs = sp.apply_real([](double xi) { return Complex(1.0 + xi * xi, 0.0); }, du,
                                         SymbolParity::Even);
    conj.add(max_abs_diff(lhs, rhs), un);

    const RealVector d2d2 =
        apply_darboux(sp, fr, DarbouxKind::D2Adj, apply_darboux(sp, fr, DarbouxKind::D2, u));
    RealVector l3 = apply_L(sp, fr, u);
    axpy(3.0, u, l3);
    fac2.add(max_abs_diff(d2d2, l3), un);

    const RealVector d1d1 =
        apply_darboux(sp, fr, DarbouxKind::D1, apply_darboux(sp, fr, DarbouxKind::D1Adj, u));
    const RealVector flat = sp.apply_real([](double xi) { return Complex(1.0 + xi * xi, 0.0); }, u,
                                          SymbolParity::Even);
    fac1.add(max_abs_diff(d1d1, flat), un);

    const RealVector i1 = i1_apply(g, u);
    ri1.add(max_abs_diff(apply_darboux(sp, fr, DarbouxKind::D1, i1), u), un);
    const RealVector i2 = i2_apply(g, u);
    ri2.add(max_abs_diff(apply_darboux(sp, fr, DarbouxKind::D2, i2), u), un);
    const RealVector jj = j_apply(g, ue);
    rj.add(max_abs_diff(apply_d1d2(sp, fr, jj), ue), norm_inf(ue));
    jcomp.add(max_abs_diff(jj, i2_apply(g, i1_apply(g, ue))), norm_inf(ue));

    const double f0 = u[g.zero_index()];
    const double fp0 = sp.derivative(u, 1)[g.zero_index()];
    recon.add(max_abs_diff(reconstruct(fr, du, f0, fp0), u), un);

    const auto ts = tilde_split_check(sp, fr, u);
    ts1.add(ts.i1, un);
    tsj.add(ts.j, un);

    adj1.add(std::fabs(inner(g, apply_darboux(sp, fr, DarbouxKind::D1, u), v) -
                       inner(g, u, apply_darboux(sp, fr, DarbouxKind::D1Adj, v))),
             un * norm_inf(v));
    adj2.add(std::fabs(inner(g, apply_darboux(sp, fr, DarbouxKind::D2, u), v) -
                       inner(g, u, apply_darboux(sp, fr, DarbouxKind::D2Adj, v))),
             un * norm_inf(v));

    const RealVector pc = project_pc_even(fr, ue).value;
    const RealVector pj = project_pc_even(fr, j_apply(g, apply_d1d2(sp, fr, ue))).value;
    pcj.add(max_abs_diff(pc, pj), norm_inf(ue));
  }
  std::vector<IdentityResult> out;
  out.push_back(make("conjugation_D1D2_L", conj.value, 1e-7));
  out.push_back(make("factorization_D2adj_D2_eq_L_plus_3", fac2.value, 1e-8));
  out.push_back(make("factorization_D1_D1adj_eq_flat", fac1.value, 1e-8));
  out.push_back(make("right_inverse_D1_I1", ri1.value, 1e-7));
  out.push_back(make("right_inverse_D2_I2", ri2.value, 1e-7));
  out.push_back(make("right_inverse_D1D2_J", rj.value, 1e-7));
  out.push_back(make("J_eq_I2_of_I1", jcomp.value, 1e-10));
  out.push_back(make("reconstruction_round_trip", recon.value, 1e-7));
  out.push_back(make("tilde_split_I1", ts1.value, 1e-7));
  out.push_back(make("tilde_split_J", tsj.value, 1e-7));
  out.push_back(make("adjoint_D1", adj1.value, 1e-8));
  out.push_back(make("adjoint_D2", adj2.value, 1e-8));
  out.push_back(make("Pc_eq_Pc_J_D1D2", pcj.value, 1e-8));

  out.push_back(make("I2_Z_eq_Y1", max_abs_diff(i2_apply(g, fr.Z), fr.Y1), 1e-8));
  out.push_back(make("kernel_D1D2_Y0", norm_inf(apply_d1d2(sp, fr, fr.Y0)), 1e-9));
  out.push_back(make("kernel_D1D2_Y1", norm_inf(apply_d1d2(sp, fr, fr.Y1)), 1e-9));
  {
    const RealVector f = fr.sech2;
    RealVector expect = f;
    axpy(-f[g.zero_index()] / kC1, fr.Z, expect);
    const RealVector got = i1_apply(g, apply_darboux(sp, fr, DarbouxKind::D1, f));
    out.push_back(make("I1_D1_f_eq_f_minus_Z_term", max_abs_diff(got, expect), 1e-8));
  }
  {
    const RealVector f = fr.sech;
    const RealVector w = apply_d1d2(sp, fr, f);
    const RealVector back = reconstruct(fr, w, f[g.zero_index()], sp.derivative(f, 1)[g.zero_index()]);
    out.push_back(make("reconstruction_sech", max_abs_diff(back, f), 1e-8));
  }
  {
    const RealVector zero(g.size(), 0.0);
    const RealVector back = reconstruct(fr, zero, fr.Y0[g.zero_index()], 0.0);
    out.push_back(make("reconstruction_Y0_from_kernel", max_abs_diff(back, fr.Y0), 1e-12));
  }
  return out;
}

std::vector<IdentityResult> resonance_identities(const Spectral& sp, const SolitonFrame& fr) {
  const Grid& g = fr.grid;
  std::vector<IdentityResult> out;
  RealVector src(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) src[j] = 3.0 * fr.Q[j] * fr.Y2[j] * fr.Y2[j];
  const auto dft = distorted_ft(g, src, kSqrt3);
  const Complex ref = resonance_constant();
  out.push_back(make("resonance_constant_real", std::fabs(dft.value.real() - ref.real()), 1e-6));
  out.push_back(make("resonance_constant_imag", std::fabs(dft.value.imag() - ref.imag()), 1e-6));

  const auto grid_ft = continuous_ft(g, apply_d1d2(sp, fr, src));
  double poly = 0.0;
  for (double xi : {0.0, 1.0, kSqrt3}) {
    poly = std::max(poly, std::abs(grid_ft(xi) - resonance_polynomial_ft(xi)));
  }
  out.push_back(make("resonance_polynomial_grid_ft", poly, 1e-7));

  // Distorted FT of D2* D1* u equals conj(T c) times the flat FT of D1 D2 D2* D1* u.
  {
    const RealVector gauss = g.sample([](double x) { return std::exp(-x * x); });
    const RealVector u = apply_d2adj_d1adj(sp, fr, gauss);
    const auto flat = continuous_ft(g, apply_d1d2(sp, fr, u));
    double r = 0.0;
    for (double xi : {0.5, 1.0, kSqrt3, 2.5}) {
      const Complex lhs = distorted_ft(g, u, xi).value;
      const Complex rhs = std::conj(transmission(xi) * c_coeff(xi)) * flat(xi);
      r = std::max(r, std::abs(lhs - rhs));
    }
    out.push_back(make("distorted_ft_darboux_consistency", r, 1e-6));
  }

  const RealVector* alphas[3] = {&fr.alpha1, &fr.alpha2, &fr.alpha3};
  for (int j = 1; j <= 3; ++j) {
    const auto aft = continuous_ft(g, *alphas[j - 1]);
    double r = 0.0;
    for (double xi : {0.0, 1.0, kSqrt3}) r = std::max(r, std::abs(aft(xi) - alpha_ft(j, xi)));
    out.push_back(make("alpha" + std::to_string(j) + "_grid_ft", r, 1e-7));
  }
  out.push_back(make("alpha_combined_at_sqrt3",
                     std::fabs(alpha_combined(kSqrt3) - alpha_combined_closed_form()), 1e-12));
  out.push_back(make("integral_G_eq_inv_sqrt3",
                     std::fabs(inner(g, fr.G, RealVector(g.size(), 1.0)) - kIntegralG), 1e-10));
  return out;
}

std::vector<IdentityResult> convolution_identities(const PvQuadratureOptions& pv) {
  std::vector<IdentityResult> out;
  const double xs[] = {0.3, 1.0, kSqrt3, 2.5};
  for (int j = 1; j <= 3; ++j) {
    double r = 0.0;
    for (double xi : xs) {
      const auto est = pv_omega_convolution_checked(
          [j](double e) { return multipliers::omega(j, e); }, xi, pv);
      r = std::max({r, std::fabs(est.value - omega_convolution_closed_form(j, xi)),
                    est.error_estimate});
    }
    out.push_back(make("convolution_Omega_omega" + std::to_string(j), r, 1e-4));
  }
  auto psi = [](double e) { return std::exp(-e * e); };
  out.push_back(make("convolution_Omega_Omega_smeared",
                     std::fabs(omega_omega_smeared(psi, pv) - omega_omega_smeared_closed_form(psi, pv)),
                     1e-4));
  return out;
}

std::vector<IdentityResult> kernel_identities(const Spectral& sp, const PvQuadratureOptions& pv) {
  const Grid& g = sp.grid();
  const RealVector f = g.sample([](double x) { return std::exp(-x * x); });
  const SpectralFunction fhat = [](double eta) {
    return Complex(std::exp(-eta * eta / 4.0) / std::numbers::sqrt2, 0.0);
  };
  // Eight lattice frequencies spread over [0, 2.5].
  const std::size_t z = g.size() / 2;
  const double dk = g.dxi();
  std::vector<std::size_t> ks;
  for (double xi : {0.0, 0.3, 0.6, 1.0, 1.4, 1.75, 2.1, 2.5}) {
    ks.push_back(z + static_cast<std::size_t>(std::lround(xi / dk)));
  }
  double r1 = 0.0, rj = 0.0, reg = 0.0;
  for (std::size_t k : ks) {
    r1 = std::max(r1, fourier_kernel_check(sp, KernelOperator::I1, f, fhat, k, pv).residual);
    rj = std::max(rj, fourier_kernel_check(sp, KernelOperator::J, f, fhat, k, pv).residual);
    // For even f the regular part i omega1 B1 vanishes since m1 is odd.
    reg = std::max(reg, std::abs(i1_fourier_regular_part(fhat, g.xi(k), pv)));
  }
  std::vector<IdentityResult> out;
  out.push_back(make("fourier_kernel_I1", r1, 1e-5));
  out.push_back(make("fourier_kernel_J", rj, 1e-5));
  out.push_back(make("fourier_kernel_I1_regular_part_even", reg, 1e-6));
  return out;
}

std::vector<IdentityResult> run_identity_battery(const IdentityOptions& opt) {
  const Grid g = Grid::make(opt.box_length, opt.num_points);
  const SolitonFrame fr = SolitonFrame::build(g);
  using Group = std::function<std::vector<IdentityResult>()>;
  // Each group builds its own FFT engine so groups can run concurrently.
  std::vector<Group> groups = {
      [&] { Spectral sp(g); return spectral_identities(sp, fr); },
      [&] { Spectral sp(g); return scattering_identities(sp, fr, opt.seed + 1); },
      [&] { Spectral sp(g); return darboux_identities(sp, fr, opt.random_samples, opt.seed); },
      [&] { Spectral sp(g); return resonance_identities(sp, fr); },
      [&] { return convolution_identities(opt.pv); },
      [&] { Spectral sp(g); return kernel_identities(sp, opt.pv); },
  };
  std::vector<std::vector<IdentityResult>> results(groups.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, opt.threads));
  for (std::size_t start = 0; start < groups.size(); start += workers) {
    std::vector<std::future<std::vector<IdentityResult>>> futs;
    for (std::size_t i = start; i < std::min(groups.size(), start + workers); ++i) {
      futs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, groups[i]));
    }
    for (std::size_t i = 0; i < futs.size(); ++i) results[start + i] = futs[i].get();
  }
  std::vector<IdentityResult> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

}  // namespace kglab
