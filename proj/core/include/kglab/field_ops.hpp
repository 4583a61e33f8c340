#pragma once

#include <span>

#include "kglab/grid.hpp"

namespace kglab {

// dx-weighted inner product sum_j u_j v_j dx.
double inner(const Grid& g, std::span<const double> u, std::span<const double> v);
double norm_l2(const Grid& g, std::span<const double> u);
double norm_l2(const Grid& g, std::span<const Complex> u);
double norm_inf(std::span<const double> u);
double norm_inf(std::span<const Complex> u);
double max_abs_diff(std::span<const double> a, std::span<const double> b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

// Spectral-side L2 norm with dxi weights.
double norm_l2_spectral(const Grid& g, std::span<const Complex> uhat);

// max_j |u(x_j) - u(-x_j)| and its odd-part analogue.
double odd_part_inf(const Grid& g, std::span<const double> u);
double even_part_inf(const Grid& g, std::span<const double> u);

RealVector add(std::span<const double> a, std::span<const double> b);
RealVector sub(std::span<const double> a, std::span<const double> b);
RealVector mul(std::span<const double> a, std::span<const double> b);
RealVector scale(std::span<const double> a, double s);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

ComplexVector to_complex(std::span<const double> u);
RealVector real_part(std::span<const Complex> u);
RealVector imag_part(std::span<const Complex> u);

bool all_finite(std::span<const double> u);
bool all_finite(std::span<const Complex> u);

// Largest |u| within `width` points of either box edge, relative to max |u|.
double boundary_mass_fraction(std::span<const double> u, std::size_t width);

}  // namespace kglab
