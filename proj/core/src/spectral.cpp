#include "kglab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "kglab/errors.hpp"

namespace kglab {

namespace {

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class T>
struct FftwDeleter {
  void operator()(T* p) const { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwDeleter<T>>;

template <class T>
FftwBuffer<T> alloc(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer<T>(p);
}

}  // namespace

struct Spectral::Impl {
  std::size_t n = 0;
  FftwBuffer<fftw_complex> cbuf_a;
  FftwBuffer<fftw_complex> cbuf_b;
  FftwBuffer<double> rbuf;
  fftw_plan c2c_forward = nullptr;
  fftw_plan c2c_backward = nullptr;
  fftw_plan r2c_plan = nullptr;
  fftw_plan c2r_plan = nullptr;

  explicit Impl(std::size_t n_) : n(n_) {
    cbuf_a = alloc<fftw_complex>(n);
    cbuf_b = alloc<fftw_complex>(n);
    rbuf = alloc<double>(n);
    std::lock_guard lock(planner_mutex());
    const int ni = static_cast<int>(n);
    c2c_forward = fftw_plan_dft_1d(ni, cbuf_a.get(), cbuf_b.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    c2c_backward = fftw_plan_dft_1d(ni, cbuf_a.get(), cbuf_b.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
    r2c_plan = fftw_plan_dft_r2c_1d(ni, rbuf.get(), cbuf_a.get(), FFTW_ESTIMATE);
    c2r_plan = fftw_plan_dft_c2r_1d(ni, cbuf_a.get(), rbuf.get(), FFTW_ESTIMATE);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    for (auto p : {c2c_forward, c2c_backward, r2c_plan, c2r_plan}) {
      if (p) fftw_destroy_plan(p);
    }
  }

  fftw_complex* a() { return cbuf_a.get(); }
  fftw_complex* b() { return cbuf_b.get(); }
};

Spectral::Spectral(const Grid& grid) : grid_(grid), impl_(std::make_unique<Impl>(grid.size())) {}
Spectral::~Spectral() = default;
Spectral::Spectral(Spectral&&) noexcept = default;
Spectral& Spectral::operator=(Spectral&&) noexcept = default;

namespace {

void check_size(std::size_t got, std::size_t want) {
  if (got != want) {
    throw DomainError("field length " + std::to_string(got) + " does not match grid size " +
                      std::to_string(want));
  }
}

// (-1)^m with m the signed wavenumber index of bin b.
double bin_phase(std::size_t bin, std::size_t n) {
  const std::size_t m = bin < n / 2 ? bin : n - bin;
  return (m % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace

ComplexVector Spectral::forward(std::span<const Complex> u) const {
  const std::size_t n = grid_.size();
  check_size(u.size(), n);
  std::memcpy(impl_->a(), u.data(), sizeof(Complex) * n);
  fftw_execute_dft(impl_->c2c_forward, impl_->a(), impl_->b());
  const auto* out = reinterpret_cast<const Complex*>(impl_->b());
  const double norm = grid_.dx() / std::sqrt(2.0 * std::numbers::pi);
  ComplexVector res(n);
  // Centered index k holds bin (k - N/2) mod N.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bin = (k + n / 2) % n;
    res[k] = out[bin] * (norm * bin_phase(bin, n));
  }
  return res;
}

ComplexVector Spectral::forward(std::span<const double> u) const {
  ComplexVector c(u.begin(), u.end());
  return forward(std::span<const Complex>(c));
}

ComplexVector Spectral::inverse(std::span<const Complex> uhat) const {
  const std::size_t n = grid_.size();
  check_size(uhat.size(), n);
  auto* in = reinterpret_cast<Complex*>(impl_->a());
  const double norm = grid_.dxi() / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bin = (k + n / 2) % n;
    in[bin] = uhat[k] * (norm * bin_phase(bin, n));
  }
  fftw_execute_dft(impl_->c2c_backward, impl_->a(), impl_->b());
  const auto* out = reinterpret_cast<const Complex*>(impl_->b());
  return ComplexVector(out, out + n);
}

ComplexVector Spectral::apply(const Symbol& m, std::span<const Complex> u,
                              SymbolParity parity) const {
  const std::size_t n = grid_.size();
  check_size(u.size(), n);
  std::memcpy(impl_->a(), u.data(), sizeof(Complex) * n);
  fftw_execute_dft(impl_->c2c_forward, impl_->a(), impl_->b());
  auto* spec = reinterpret_cast<Complex*>(impl_->b());
  auto* dst = reinterpret_cast<Complex*>(impl_->a());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t bin = 0; bin < n; ++bin) {
    const Complex mv = m(grid_.xi_of_bin(bin));
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
      throw DomainError("multiplier is not finite at xi = " + std::to_string(grid_.xi_of_bin(bin)));
    }
    dst[bin] = spec[bin] * mv * inv_n;
  }
  if (parity == SymbolParity::Odd) dst[n / 2] = 0.0;
  fftw_execute_dft(impl_->c2c_backward, impl_->a(), impl_->b());
  const auto* out = reinterpret_cast<const Complex*>(impl_->b());
  return ComplexVector(out, out + n);
}

RealVector Spectral::apply_real(const Symbol& m, std::span<const double> u,
                                SymbolParity parity) const {
  const std::size_t n = grid_.size();
  check_size(u.size(), n);
  const std::size_t nh = n / 2 + 1;
  std::memcpy(impl_->rbuf.get(), u.data(), sizeof(double) * n);
  fftw_execute_dft_r2c(impl_->r2c_plan, impl_->rbuf.get(), impl_->a());
  auto* spec = reinterpret_cast<Complex*>(impl_->a());
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t bin = 0; bin < nh; ++bin) {
    const double xi = grid_.xi_of_bin(bin);
    Complex mv = m(bin == n / 2 ? -xi : xi);
    if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
      throw DomainError("multiplier is not finite at xi = " + std::to_string(xi));
    }
    spec[bin] *= mv * inv_n;
  }
  // c2r keeps only the real part of the Nyquist bin; odd symbols drop it.
  if (parity == SymbolParity::Odd) spec[n / 2] = 0.0;
  fftw_execute_dft_c2r(impl_->c2r_plan, impl_->a(), impl_->rbuf.get());
  return RealVector(impl_->rbuf.get(), impl_->rbuf.get() + n);
}

RealVector Spectral::derivative(std::span<const double> u, int order) const {
  if (order < 0) throw DomainError("derivative order must be nonnegative");
  if (order == 0) return RealVector(u.begin(), u.end());
  const auto parity = (order % 2 == 1) ? SymbolParity::Odd : SymbolParity::Even;
  return apply_real(
      [order](double xi) {
        Complex r = 1.0;
        for (int i = 0; i < order; ++i) r *= Complex(0.0, xi);
        return r;
      },
      u, parity);
}

RealVector Spectral::japanese(std::span<const double> u, double s) const {
  return apply_real([s](double xi) { return Complex(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); }, u,
                    SymbolParity::Even);
}

ComplexVector Spectral::japanese(std::span<const Complex> u, double s) const {
  return apply([s](double xi) { return Complex(std::pow(1.0 + xi * xi, 0.5 * s), 0.0); }, u,
               SymbolParity::Even);
}

void Spectral::r2c(std::span<const double> in, std::span<Complex> out) const {
  const std::size_t n = grid_.size();
  check_size(in.size(), n);
  check_size(out.size(), n / 2 + 1);
  // New-array execution requires FFTW-compatible alignment; copy through scratch.
  std::memcpy(impl_->rbuf.get(), in.data(), sizeof(double) * n);
  fftw_execute_dft_r2c(impl_->r2c_plan, impl_->rbuf.get(), impl_->a());
  std::memcpy(static_cast<void*>(out.data()), impl_->a(), sizeof(Complex) * (n / 2 + 1));
}

void Spectral::c2r(std::span<Complex> in, std::span<double> out) const {
  const std::size_t n = grid_.size();
  check_size(in.size(), n / 2 + 1);
  check_size(out.size(), n);
  std::memcpy(impl_->a(), in.data(), sizeof(Complex) * (n / 2 + 1));
  fftw_execute_dft_c2r(impl_->c2r_plan, impl_->a(), impl_->rbuf.get());
  std::memcpy(out.data(), impl_->rbuf.get(), sizeof(double) * n);
}

}  // namespace kglab
