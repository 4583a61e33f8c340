#pragma once

#include <memory>
#include <span>
#include <string>

#include "kglab/grid.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/spectral.hpp"

namespace kglab {

enum class Integrator { Strang, Etdrk4 };

Integrator parse_integrator(const std::string& name);
std::string to_string(Integrator integ);

struct SolverConfig {
  double dt = 0.01;
  double t_end = 10.0;
  Integrator integrator = Integrator::Strang;
  std::size_t output_stride = 10;
  bool dealias = true;
  // Switches for the linear and free surrogates.
  bool include_potential = true;
  bool include_nonlinearity = true;
  bool enforce_box_rule = true;

  // Throws ConfigError; the box rule is L >= 2 t_end + 40.
  void validate(const Grid& grid) const;
};

// Perturbation phi = Phi - Q and its time derivative.
struct SimState {
  double t = 0.0;
  RealVector phi;
  RealVector phi_t;
};

struct ModeCoefficients {
  double a = 0.0;
  double a_dot = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
};

ModeCoefficients mode_coefficients(const SolitonFrame& fr, std::span<const double> phi,
                                   std::span<const double> phi_t);
ModeCoefficients mode_coefficients(const SolitonFrame& fr, const SimState& s);

struct InitialStateReport {
  double odd_part = 0.0;
  double orthogonality_defect = 0.0;  // <Y0, nu phi0 + phi1>
  bool projected = false;
};

// phi = phi0 + d Y0, phi_t = phi1 + d nu Y0. With auto_project the Y0
// component of nu phi0 + phi1 is removed from phi1 and recorded.
SimState make_initial_state(const SolitonFrame& fr, std::span<const double> phi0,
                            std::span<const double> phi1, double d, bool auto_project = false,
                            InitialStateReport* report = nullptr, double parity_tol = 1e-10,
                            double orthogonality_tol = 1e-6);

// Time stepper for (d_t^2 + L) phi = 3 Q phi^2 + phi^3, holding the state in
// spectral form between steps. Not thread-safe; use one instance per thread.
class Evolver {
 public:
  Evolver(const SolitonFrame& frame, const SolverConfig& cfg);
  ~Evolver();
  Evolver(Evolver&&) noexcept;
  Evolver& operator=(Evolver&&) noexcept;

  void load(const SimState& s);
  void step();
  // Steps until time() >= t - dt/2.
  void advance_to(double t);

  double time() const;
  std::size_t steps_taken() const;
  ModeCoefficients coefficients() const;
  std::span<const double> phi() const;
  SimState state() const;
  // Last state verified finite, kept every few steps.
  const SimState& last_good() const;

  const SolverConfig& config() const;
  const SolitonFrame& frame() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// E = int 1/2 Phi_t^2 + 1/2 Phi_x^2 + 1/2 Phi^2 - 1/4 Phi^4 with Phi = Q + phi.
double energy(const Spectral& sp, const SolitonFrame& fr, const SimState& s);

// (2 nu)^{-1} <Y0, 3 Q phi^2 + phi^3>.
double aplus_forcing(const SolitonFrame& fr, std::span<const double> phi);

// |d_t a+ - nu a+ - forcing| from two frames (trapezoidal in time).
double ode_residual_aplus(const SolitonFrame& fr, const SimState& s0, const SimState& s1,
                          bool nonlinear = true);

struct TransformedFields {
  RealVector w;
  RealVector w_t;
  ComplexVector v;
  ComplexVector f;
  double pc_residual = 0.0;  // max |P_c phi - P_c J[w]|
};

TransformedFields derive_transformed(const Spectral& sp, const SolitonFrame& fr,
                                     const SimState& s);

// max |w_tt + (-d^2 + 1) w - D1 D2 (3 Q phi^2 + phi^3)| at the middle frame,
// with w_tt from centered differences of w_t.
double flat_equation_residual(const Spectral& sp, const SolitonFrame& fr, const SimState& prev,
                              const SimState& mid, const SimState& next);

}  // namespace kglab
