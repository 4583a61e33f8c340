#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kglab/grid.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/pv_quadrature.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

struct IdentityResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_residual < tolerance; }
};

struct IdentityOptions {
  double box_length = 80.0;
  std::size_t num_points = 4096;
  int random_samples = 50;
  std::uint64_t seed = 20240601;
  PvQuadratureOptions pv{0.01, 40.0};
  int threads = 1;
};

// Random localized field: a few modulated Gaussians of width >= 0.5 near the
// origin. `even` symmetrizes the sum.
RealVector random_schwartz(const Grid& g, std::mt19937_64& rng, bool even = false);

std::vector<IdentityResult> spectral_identities(const Spectral& sp, const SolitonFrame& fr);
std::vector<IdentityResult> scattering_identities(const Spectral& sp, const SolitonFrame& fr,
                                                  std::uint64_t seed);
std::vector<IdentityResult> darboux_identities(const Spectral& sp, const SolitonFrame& fr,
                                               int samples, std::uint64_t seed);
std::vector<IdentityResult> resonance_identities(const Spectral& sp, const SolitonFrame& fr);
std::vector<IdentityResult> convolution_identities(const PvQuadratureOptions& pv);
std::vector<IdentityResult> kernel_identities(const Spectral& sp, const PvQuadratureOptions& pv);

// All groups above; runs groups on up to `threads` workers, output order fixed.
std::vector<IdentityResult> run_identity_battery(const IdentityOptions& opt);

}  // namespace kglab
