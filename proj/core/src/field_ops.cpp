#include "kglab/field_ops.hpp"

#include <algorithm>
#include <cmath>

#include "kglab/errors.hpp"

namespace kglab {

namespace {
void same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DomainError("field size mismatch");
}
}  // namespace

double inner(const Grid& g, std::span<const double> u, std::span<const double> v) {
  same_size(u.size(), v.size());
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
  return s * g.dx();
}

double norm_l2(const Grid& g, std::span<const double> u) { return std::sqrt(inner(g, u, u)); }

double norm_l2(const Grid& g, std::span<const Complex> u) {
  double s = 0.0;
  for (const auto& z : u) s += std::norm(z);
  return std::sqrt(s * g.dx());
}

double norm_l2_spectral(const Grid& g, std::span<const Complex> uhat) {
  double s = 0.0;
  for (const auto& z : uhat) s += std::norm(z);
  return std::sqrt(s * g.dxi());
}

double norm_inf(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::fabs(v));
  return m;
}

double norm_inf(std::span<const Complex> u) {
  double m = 0.0;
  for (const auto& z : u) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  same_size(a.size(), b.size());
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::fabs(a[j] - b[j]));
  return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  same_size(a.size(), b.size());
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double odd_part_inf(const Grid& g, std::span<const double> u) {
  same_size(u.size(), g.size());
  double m = 0.0;
  for (std::size_t j = 1; j < u.size(); ++j) {
    m = std::max(m, 0.5 * std::fabs(u[j] - u[g.mirror(j)]));
  }
  return m;
}

double even_part_inf(const Grid& g, std::span<const double> u) {
  same_size(u.size(), g.size());
  double m = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    m = std::max(m, 0.5 * std::fabs(u[j] + u[g.mirror(j)]));
  }
  return m;
}

RealVector add(std::span<const double> a, std::span<const double> b) {
  same_size(a.size(), b.size());
  RealVector r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

RealVector sub(std::span<const double> a, std::span<const double> b) {
  same_size(a.size(), b.size());
  RealVector r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

RealVector mul(std::span<const double> a, std::span<const double> b) {
  same_size(a.size(), b.size());
  RealVector r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] * b[j];
  return r;
}

RealVector scale(std::span<const double> a, double s) {
  RealVector r(a.begin(), a.end());
  for (double& v : r) v *= s;
  return r;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  same_size(x.size(), y.size());
  for (std::size_t j = 0; j < x.size(); ++j) y[j] += alpha * x[j];
}

ComplexVector to_complex(std::span<const double> u) { return ComplexVector(u.begin(), u.end()); }

RealVector real_part(std::span<const Complex> u) {
  RealVector r(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) r[j] = u[j].real();
  return r;
}

RealVector imag_part(std::span<const Complex> u) {
  RealVector r(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) r[j] = u[j].imag();
  return r;
}

bool all_finite(std::span<const double> u) {
  return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
}

bool all_finite(std::span<const Complex> u) {
  return std::all_of(u.begin(), u.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double boundary_mass_fraction(std::span<const double> u, std::size_t width) {
  const double total = norm_inf(u);
  if (total == 0.0 || u.empty()) return 0.0;
  width = std::min(width, u.size() / 2);
  double edge = 0.0;
  for (std::size_t j = 0; j < width; ++j) {
    edge = std::max({edge, std::fabs(u[j]), std::fabs(u[u.size() - 1 - j])});
  }
  return edge / total;
}

}  // namespace kglab
