#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kglab {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

// Periodic lattice x_j = -L/2 + j dx on [-L/2, L/2) and its dual lattice
// xi = 2 pi k / L, k = -N/2 .. N/2-1 (stored in centered order).
class Grid {
 public:
  Grid() = default;

  static Grid make(double box_length, std::size_t num_points);

  double length() const { return length_; }
  std::size_t size() const { return n_; }
  double dx() const { return length_ / static_cast<double>(n_); }
  double dxi() const;

  // Written as (j - N/2) dx so that x(N/2) == 0 and x(N-j) == -x(j) exactly.
  double x(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * dx();
  }
  // Centered spectral index k in 0..N-1 corresponds to wavenumber k - N/2.
  double xi(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(n_ / 2)) * dxi();
  }
  // Wavenumber of DFT bin m in 0..N-1 (FFTW ordering).
  double xi_of_bin(std::size_t m) const;

  std::size_t zero_index() const { return n_ / 2; }
  std::size_t mirror(std::size_t j) const { return (n_ - j) % n_; }

  RealVector xs() const;
  RealVector xis() const;

  template <class F>
  RealVector sample(F&& f) const {
    RealVector out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = f(x(j));
    return out;
  }

  bool operator==(const Grid& o) const { return length_ == o.length_ && n_ == o.n_; }

 private:
  Grid(double length, std::size_t n) : length_(length), n_(n) {}
  double length_ = 0.0;
  std::size_t n_ = 0;
};

}  // namespace kglab
