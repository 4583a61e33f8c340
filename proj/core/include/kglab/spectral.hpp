#pragma once

#include <functional>
#include <memory>
#include <span>

#include "kglab/grid.hpp"

namespace kglab {

using Symbol = std::function<Complex(double)>;

enum class SymbolParity { Even, Odd, None };

// FFT engine bound to one grid. Instances own scratch buffers, so a single
// instance must not be shared between threads; create one per thread.
class Spectral {
 public:
  explicit Spectral(const Grid& grid);
  ~Spectral();
  Spectral(const Spectral&) = delete;
  Spectral& operator=(const Spectral&) = delete;
  Spectral(Spectral&&) noexcept;
  Spectral& operator=(Spectral&&) noexcept;

  const Grid& grid() const { return grid_; }

  // Continuum-normalized transform u^(xi) = (2 pi)^(-1/2) int e^{-i x xi} u dx,
  // returned on the centered spectral lattice.
  ComplexVector forward(std::span<const Complex> u) const;
  ComplexVector forward(std::span<const double> u) const;
  ComplexVector inverse(std::span<const Complex> uhat) const;

  // inverse(m * forward(u)); odd symbols get the Nyquist bin zeroed.
  ComplexVector apply(const Symbol& m, std::span<const Complex> u,
                      SymbolParity parity = SymbolParity::None) const;
  // Real-to-real version; requires m(-xi) = conj(m(xi)).
  RealVector apply_real(const Symbol& m, std::span<const double> u,
                        SymbolParity parity = SymbolParity::None) const;

  // Spectral derivative of order p (p >= 0).
  RealVector derivative(std::span<const double> u, int order = 1) const;
  // <D>^s u with <xi> = sqrt(1 + xi^2).
  RealVector japanese(std::span<const double> u, double s) const;
  ComplexVector japanese(std::span<const Complex> u, double s) const;

  // Raw half-spectrum transforms (unnormalized DFT, FFTW r2c ordering).
  void r2c(std::span<const double> in, std::span<Complex> out) const;
  // Destroys `in`; result is N * u (no normalization).
  void c2r(std::span<Complex> in, std::span<double> out) const;

 private:
  struct Impl;
  Grid grid_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace kglab
