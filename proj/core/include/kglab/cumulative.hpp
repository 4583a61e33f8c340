#pragma once

#include <span>

#include "kglab/grid.hpp"

namespace kglab {

// Weight cosh(y)^a sinh(y)^b.
struct HyperbolicWeight {
  int cosh_power = 0;
  int sinh_power = 0;
};

// S(x) = scale * int_0^x [num(y) / den(x)] g(y) dy evaluated at every grid
// point. den must be a pure cosh power. The integral is anchored at the
// grid point x = 0 and advanced outward with the recursion
//   S(x_{j+1}) = den(x_j)/den(x_{j+1}) S(x_j) + int_{x_j}^{x_{j+1}} ...
// where the ratios are formed in log space, so |x| far beyond the double
// range of cosh is safe. Each cell uses an 8-point Lagrange rule.
RealVector hyperbolic_cumulative(const Grid& grid, std::span<const double> g,
                                 HyperbolicWeight num, HyperbolicWeight den,
                                 double scale = 1.0);

// Plain cumulative integral int_0^x g(y) dy with the same local rule.
RealVector cumulative_integral(const Grid& grid, std::span<const double> g);

}  // namespace kglab
