#include "kglab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kglab/errors.hpp"

namespace kglab {

Grid Grid::make(double box_length, std::size_t num_points) {
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ConfigError("grid: box length must be positive, got " + std::to_string(box_length));
  }
  if (num_points < 2 || (num_points & (num_points - 1)) != 0) {
    throw ConfigError("grid: N must be an even power of two, got " + std::to_string(num_points));
  }
  return Grid(box_length, num_points);
}

double Grid::dxi() const { return 2.0 * std::numbers::pi / length_; }

double Grid::xi_of_bin(std::size_t m) const {
  const auto half = n_ / 2;
  const double k = m < half ? static_cast<double>(m)
                            : static_cast<double>(m) - static_cast<double>(n_);
  return k * dxi();
}

RealVector Grid::xs() const {
  RealVector out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = x(j);
  return out;
}

RealVector Grid::xis() const {
  RealVector out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = xi(k);
  return out;
}

}  // namespace kglab
