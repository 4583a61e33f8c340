#include "kglab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kglab/cutoffs.hpp"
#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

ComplexVector xi_derivative(const Grid& grid, std::span<const Complex> fhat) {
  const std::size_t n = fhat.size();
  if (n != grid.size()) throw DomainError("xi_derivative: size mismatch");
  const double h = grid.dxi();
  ComplexVector d(n);
  if (n < 2) return d;
  d[0] = (fhat[1] - fhat[0]) / h;
  d[n - 1] = (fhat[n - 1] - fhat[n - 2]) / h;
  for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (fhat[k + 1] - fhat[k - 1]) / (2.0 * h);
  return d;
}

double nt_norm(const Grid& grid, std::span<const Complex> fhat, double t, int n_max,
               double sharpness, NtNormReport* report, int l_max) {
  if (fhat.size() != grid.size()) throw DomainError("nt_norm: size mismatch");
  NtNormReport rep;
  const double dxi = grid.dxi();
  double e = 0.0;
  for (std::size_t k = 0; k < fhat.size(); ++k) {
    const double xi = grid.xi(k);
    e += std::norm((1.0 + xi * xi) * fhat[k]);
  }
  rep.energy_part = std::sqrt(e * dxi);

  const ComplexVector d = xi_derivative(grid, fhat);
  RealVector weighted(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double xi = grid.xi(k);
    weighted[k] = std::norm((1.0 + xi * xi) * d[k]);
  }
  // Annulus l has width ~ 2^{-l-s} in xi; resolvable if that exceeds dxi.
  int finest = 0;
  while (std::exp2(-(finest + 1) - sharpness) >= dxi && finest < 60) ++finest;
  rep.finest_resolved_l = finest;

  for (int n = 1; n <= n_max; ++n) {
    const double tau = time_partition(n, t);
    if (tau <= 0.0) continue;
    for (int l = 0; l <= std::min(n, l_max); ++l) {
      if (l > finest) {
        rep.resolution_warning = true;
        break;
      }
      double acc = 0.0;
      for (std::size_t k = 0; k < weighted.size(); ++k) {
        const double c = adapted_cutoff(n, l, grid.xi(k), sharpness);
        if (c != 0.0) acc += c * c * weighted[k];
      }
      const double val = std::exp2(-0.5 * l) * tau * std::sqrt(acc * dxi);
      if (val > rep.sup_part) {
        rep.sup_part = val;
        rep.argmax_n = n;
        rep.argmax_l = l;
      }
    }
  }
  if (report) *report = rep;
  return rep.energy_part + rep.sup_part;
}

std::string to_string(DecayModel m) {
  return m == DecayModel::PurePower ? "pure_power" : "power_log";
}

std::vector<WindowMax> dyadic_window_maxima(std::span<const double> t, std::span<const double> y,
                                            double t0, double t1) {
  if (t.size() != y.size()) throw DomainError("dyadic windows: size mismatch");
  std::vector<WindowMax> out;
  if (!(t1 > t0)) return out;
  int j = static_cast<int>(std::floor(std::log2(std::max(t0, 1e-300))));
  for (; std::exp2(j) < t1; ++j) {
    const double lo = std::max(std::exp2(j), t0);
    const double hi = std::min(std::exp2(j + 1), t1);
    if (!(hi > lo)) continue;
    WindowMax w{lo, hi, 0.0, -1.0};
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < lo || t[i] > hi) continue;
      if (std::fabs(y[i]) > w.value) {
        w.value = std::fabs(y[i]);
        w.t_at_max = t[i];
      }
    }
    if (w.value >= 0.0) out.push_back(w);
  }
  return out;
}

DecayFit fit_pure_power(std::span<const double> t, std::span<const double> y, double t0,
                        double t1) {
  DecayFit f;
  f.t0 = t0;
  f.t1 = t1;
  f.model = DecayModel::PurePower;
  f.windows = dyadic_window_maxima(t, y, t0, t1);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& w : f.windows) {
    if (!(w.value > 0.0) || !(w.t_at_max > 0.0)) continue;
    const double lx = std::log(w.t_at_max), ly = std::log(w.value);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return f;
  const double dn = static_cast<double>(n);
  const double den = dn * sxx - sx * sx;
  f.exponent = den == 0.0 ? 0.0 : (dn * sxy - sx * sy) / den;
  const double b = (sy - f.exponent * sx) / dn;
  f.constant = std::exp(b);
  double r = 0.0;
  for (const auto& w : f.windows) {
    if (!(w.value > 0.0) || !(w.t_at_max > 0.0)) continue;
    const double e = std::log(w.value) - (b + f.exponent * std::log(w.t_at_max));
    r += e * e;
  }
  f.residual = std::sqrt(r / dn);
  return f;
}

DecayFit linf_decay_ratio(std::span<const double> t, std::span<const double> linf, double eps,
                          double t0, double t1) {
  if (t.size() != linf.size()) throw DomainError("linf_decay_ratio: size mismatch");
  if (!(eps > 0.0)) throw DomainError("linf_decay_ratio: eps must be positive");
  DecayFit f;
  f.t0 = t0;
  f.t1 = t1;
  f.model = DecayModel::PowerLog;
  f.exponent = -0.5;
  RealVector ratio(t.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ratio[i] = std::sqrt(1.0 + t[i] * t[i]) * std::fabs(linf[i]) / (eps * std::log(2.0 + t[i]));
    if (t[i] >= t0 && t[i] <= t1) f.constant = std::max(f.constant, ratio[i]);
  }
  f.windows = dyadic_window_maxima(t, ratio, t0, t1);
  double r = 0.0;
  std::size_t n = 0;
  for (const auto& w : f.windows) {
    if (!(w.value > 0.0) || !(f.constant > 0.0)) continue;
    const double e = std::log(w.value / f.constant);
    r += e * e;
    ++n;
  }
  f.residual = n ? std::sqrt(r / static_cast<double>(n)) : 0.0;
  return f;
}

AMinusEnvelope a_minus_envelope(std::span<const double> t, std::span<const double> a_minus,
                                double eps, double early_t0, double early_t1, double late_t0,
                                double late_t1) {
  if (t.size() != a_minus.size()) throw DomainError("a_minus_envelope: size mismatch");
  AMinusEnvelope env;
  double st = 0, sy = 0, stt = 0, sty = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < early_t0 || t[i] > early_t1 || !(std::fabs(a_minus[i]) > 0.0)) continue;
    const double y = std::log(std::fabs(a_minus[i]));
    st += t[i];
    sy += y;
    stt += t[i] * t[i];
    sty += t[i] * y;
    ++n;
  }
  if (n >= 2) {
    const double dn = static_cast<double>(n);
    const double den = dn * stt - st * st;
    env.early_slope = den == 0.0 ? 0.0 : (dn * sty - st * sy) / den;
    env.c1 = std::exp((sy - env.early_slope * st) / dn) / eps;
  }
  RealVector ratio(t.size(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double lg = std::log(2.0 + t[i]);
    ratio[i] = std::fabs(a_minus[i]) * std::sqrt(1.0 + t[i] * t[i]) / (lg * lg * eps * eps);
    if (t[i] >= late_t0 && t[i] <= late_t1) env.c2 = std::max(env.c2, ratio[i]);
  }
  env.late_windows = dyadic_window_maxima(t, ratio, late_t0, late_t1);
  return env;
}

double local_decay_norm(const Spectral& sp, std::span<const Complex> v, LocalDecayVariant variant,
                        double weight_power) {
  const Grid& g = sp.grid();
  ComplexVector h;
  double power = 1.0;
  switch (variant) {
    case LocalDecayVariant::Dx:
      h = sp.apply([](double xi) { return Complex(0.0, xi); }, v, SymbolParity::Odd);
      break;
    case LocalDecayVariant::JapaneseMinusOne:
      h = sp.apply([](double xi) { return Complex(std::sqrt(1.0 + xi * xi) - 1.0, 0.0); }, v,
                   SymbolParity::Even);
      break;
    case LocalDecayVariant::StrongDx:
      h = sp.apply([](double xi) { return Complex(0.0, xi / std::sqrt(1.0 + xi * xi)); }, v,
                   SymbolParity::Odd);
      power = weight_power;
      break;
  }
  for (std::size_t j = 0; j < h.size(); ++j) {
    h[j] *= std::pow(1.0 + g.x(j) * g.x(j), -0.5 * power);
  }
  if (variant == LocalDecayVariant::StrongDx) return norm_l2(g, std::span<const Complex>(h));
  const ComplexVector jh = sp.japanese(std::span<const Complex>(h), 1.0);
  return norm_l2(g, std::span<const Complex>(jh));
}

ComplexVector free_evolve(const Spectral& sp, std::span<const Complex> v, double t) {
  return sp.apply([t](double xi) { return std::polar(1.0, t * std::sqrt(1.0 + xi * xi)); }, v,
                  SymbolParity::Even);
}

Complex oscillatory_evolution(const std::function<Complex(double)>& fhat, double x, double t,
                              double xi_lo, double xi_hi, std::size_t nodes) {
  if (!(xi_hi > xi_lo)) throw DomainError("oscillatory_evolution: empty interval");
  auto rate = [&](double xi) { return std::fabs(x + t * xi / std::sqrt(1.0 + xi * xi)); };
  if (nodes == 0) {
    const double variation = (xi_hi - xi_lo) * std::max(rate(xi_lo), rate(xi_hi));
    nodes = static_cast<std::size_t>(std::max(4096.0, 2.0 * variation));
  }
  const double h = (xi_hi - xi_lo) / static_cast<double>(nodes);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double xi = xi_lo + (static_cast<double>(i) + 0.5) * h;
    const Complex fv = fhat(xi);
    if (fv == 0.0) continue;
    acc += fv * std::polar(1.0, x * xi + t * std::sqrt(1.0 + xi * xi));
  }
  return acc * h / std::sqrt(2.0 * std::numbers::pi);
}

double oscillatory_sup(const std::function<Complex(double)>& fhat, double t, double xi_lo,
                       double xi_hi, std::size_t scan_points) {
  if (scan_points < 3) scan_points = 3;
  auto ray = [t](double xi) { return -t * xi / std::sqrt(1.0 + xi * xi); };
  auto mag = [&](double x) { return std::abs(oscillatory_evolution(fhat, x, t, xi_lo, xi_hi)); };
  std::vector<double> xs(scan_points), vals(scan_points);
  for (std::size_t i = 0; i < scan_points; ++i) {
    const double xi = xi_lo + (xi_hi - xi_lo) * (static_cast<double>(i) + 0.5) / scan_points;
    xs[i] = ray(xi);
    vals[i] = mag(xs[i]);
  }
  const auto best = static_cast<std::size_t>(
      std::distance(vals.begin(), std::max_element(vals.begin(), vals.end())));
  double a = xs[best > 0 ? best - 1 : 0];
  double b = xs[best + 1 < scan_points ? best + 1 : scan_points - 1];
  if (a > b) std::swap(a, b);
  // Golden-section refinement of the best bracket.
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = mag(c), fd = mag(d);
  for (int it = 0; it < 40; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = mag(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = mag(d);
    }
  }
  return std::max({vals[best], fc, fd});
}

}  // namespace kglab
