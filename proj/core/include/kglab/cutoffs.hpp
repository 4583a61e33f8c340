#pragma once

namespace kglab {

// Smooth bump: 1 on [-1, 1], 0 outside [-2, 2], exp(-1/x) glue in between.
double mother_bump(double x);

// Littlewood-Paley pieces: psi(x) = phi(x) - phi(2x), phi_k(xi) = psi(xi / 2^k).
double lp_cutoff(int k, double xi);
double lp_cutoff_le(int k, double xi);

// Cutoffs adapted to dyadic annuli around |xi| = sqrt(3). With
// y = 2^s (|xi| - sqrt 3), piece 0 is 1 - phi(2y), piece l in [1, n-1] is
// phi(2^l y) - phi(2^(l+1) y), piece n is phi(2^n y). s = 0 by default;
// the analytic construction uses s = 100, which is numerically useless.
double adapted_cutoff(int n, int l, double xi, double sharpness = 0.0);
// Same family localized around +sqrt(3) (side > 0) or -sqrt(3) (side < 0).
double adapted_cutoff_one_sided(int n, int l, int side, double xi, double sharpness = 0.0);

// tau_1(t) = phi(t/2), tau_n(t) = phi(t/2^n) - phi(t/2^(n-1)).
double time_partition(int n, double t);

// Largest n with tau_n(t) possibly nonzero.
int time_partition_max_index(double t);

enum class CutoffKind { LittlewoodPaley, Adapted, AdaptedOneSided, TimePartition };

struct CutoffFamily {
  CutoffKind kind = CutoffKind::LittlewoodPaley;
  int n = 1;
  int l = 0;
  int side = 1;
  double sharpness = 0.0;

  double operator()(double arg) const;
};

}  // namespace kglab
