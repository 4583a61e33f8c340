#include "kglab/initial_data.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kglab/errors.hpp"
#include "kglab/field_ops.hpp"

namespace kglab {

DataFamily parse_data_family(const std::string& name) {
  if (name == "gaussian_bump") return DataFamily::GaussianBump;
  if (name == "y2_localized") return DataFamily::Y2Localized;
  if (name == "custom_file") return DataFamily::CustomFile;
  throw ConfigError("unknown data.family '" + name +
                    "' (expected gaussian_bump, y2_localized or custom_file)");
}

std::string to_string(DataFamily f) {
  switch (f) {
    case DataFamily::GaussianBump: return "gaussian_bump";
    case DataFamily::Y2Localized: return "y2_localized";
    case DataFamily::CustomFile: return "custom_file";
  }
  return "unknown";
}

namespace {

double weighted_sobolev(const Spectral& sp, std::span<const double> u, double s) {
  const Grid& g = sp.grid();
  RealVector xu(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) xu[j] = std::sqrt(1.0 + g.x(j) * g.x(j)) * u[j];
  return norm_l2(g, sp.japanese(xu, s));
}

void load_custom(const Grid& g, const std::string& path, RealVector& phi0, RealVector& phi1) {
  std::ifstream in(path);
  if (!in) throw ConfigError("data.path: cannot open '" + path + "'");
  phi0.clear();
  phi1.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream ls(line);
    double x = 0.0, a = 0.0, b = 0.0;
    if (!(ls >> x >> a >> b)) continue;  // header or malformed row
    phi0.push_back(a);
    phi1.push_back(b);
  }
  if (phi0.size() != g.size()) {
    throw ConfigError("data.path: expected " + std::to_string(g.size()) + " rows, found " +
                      std::to_string(phi0.size()));
  }
}

}  // namespace

double weighted_data_norm(const Spectral& sp, std::span<const double> phi0,
                          std::span<const double> phi1) {
  const double a = weighted_sobolev(sp, phi0, 4.0);
  const double b = weighted_sobolev(sp, phi1, 3.0);
  return std::sqrt(a * a + b * b);
}

InitialData build_initial_data(const Spectral& sp, const SolitonFrame& fr, const DataSpec& spec) {
  if (!(spec.eps > 0.0)) throw ConfigError("data.eps must be positive");
  if (!(spec.width > 0.0)) throw ConfigError("data.width must be positive");
  const Grid& g = fr.grid;
  InitialData d;
  const double w = spec.width;
  const RealVector bump = g.sample([w](double x) { return std::exp(-(x * x) / (w * w)); });
  switch (spec.family) {
    case DataFamily::GaussianBump:
      d.phi0 = project_pc_even(fr, bump).value;
      d.phi1.assign(g.size(), 0.0);
      break;
    case DataFamily::Y2Localized:
      d.phi0 = mul(fr.Y2, bump);
      d.phi1 = scale(d.phi0, -kNu);
      break;
    case DataFamily::CustomFile:
      load_custom(g, spec.path, d.phi0, d.phi1);
      break;
  }
  const double raw = weighted_data_norm(sp, d.phi0, d.phi1);
  if (!(raw > 0.0)) throw ConfigError("initial data profile has zero norm");
  d.amplitude = spec.eps / raw;
  for (double& v : d.phi0) v *= d.amplitude;
  for (double& v : d.phi1) v *= d.amplitude;
  d.eps = spec.eps;
  return d;
}

}  // namespace kglab
