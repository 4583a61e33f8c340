#pragma once

#include <span>
#include <string>

#include "kglab/grid.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

enum class DataFamily { GaussianBump, Y2Localized, CustomFile };

DataFamily parse_data_family(const std::string& name);
std::string to_string(DataFamily f);

struct DataSpec {
  DataFamily family = DataFamily::Y2Localized;
  double eps = 0.05;
  double width = 2.0;   // Gaussian envelope exp(-x^2 / width^2)
  std::string path;     // custom_file: whitespace or comma separated x phi0 phi1
};

struct InitialData {
  RealVector phi0;
  RealVector phi1;
  double eps = 0.0;         // weighted norm after scaling
  double amplitude = 1.0;   // scale factor applied to the unit profile
};

// || <x> phi0 ||_{H^4} and || <x> phi1 ||_{H^3} combined in l^2.
double weighted_data_norm(const Spectral& sp, std::span<const double> phi0,
                          std::span<const double> phi1);

// gaussian_bump: (P_c b, 0). y2_localized: (Y2 b, -nu Y2 b). Both satisfy
// <Y0, nu phi0 + phi1> = 0 and are scaled so the weighted norm equals eps.
InitialData build_initial_data(const Spectral& sp, const SolitonFrame& fr, const DataSpec& spec);

}  // namespace kglab
