#include "kglab/cutoffs.hpp"

#include <cmath>
#include <numbers>

namespace kglab {

namespace {

double glue(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

double pow2(double e) { return std::exp2(e); }

}  // namespace

double mother_bump(double x) {
  const double a = std::fabs(x);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double p = glue(2.0 - a);
  const double q = glue(a - 1.0);
  return p / (p + q);
}

double lp_cutoff_le(int k, double xi) { return mother_bump(xi / pow2(k)); }

double lp_cutoff(int k, double xi) {
  const double y = xi / pow2(k);
  return mother_bump(y) - mother_bump(2.0 * y);
}

namespace {

double adapted_from_offset(int n, int l, double offset, double sharpness) {
  if (n < 1 || l < 0 || l > n) return 0.0;
  const double y = pow2(sharpness) * offset;
  if (l == 0) return 1.0 - mother_bump(2.0 * y);
  if (l == n) return mother_bump(pow2(n) * y);
  return mother_bump(pow2(l) * y) - mother_bump(pow2(l + 1) * y);
}

}  // namespace

double adapted_cutoff(int n, int l, double xi, double sharpness) {
  return adapted_from_offset(n, l, std::fabs(xi) - std::numbers::sqrt3, sharpness);
}

double adapted_cutoff_one_sided(int n, int l, int side, double xi, double sharpness) {
  const double center = side >= 0 ? std::numbers::sqrt3 : -std::numbers::sqrt3;
  return adapted_from_offset(n, l, xi - center, sharpness);
}

double time_partition(int n, double t) {
  if (n < 1) return 0.0;
  if (n == 1) return mother_bump(t / 2.0);
  return mother_bump(t / pow2(n)) - mother_bump(t / pow2(n - 1));
}

int time_partition_max_index(double t) {
  // tau_m(t) = 0 whenever 2^(m-1) >= t.
  int n = 1;
  while (pow2(n) < t && n < 1000) ++n;
  return n;
}

double CutoffFamily::operator()(double arg) const {
  switch (kind) {
    case CutoffKind::LittlewoodPaley:
      return lp_cutoff(n, arg);
    case CutoffKind::Adapted:
      return adapted_cutoff(n, l, arg, sharpness);
    case CutoffKind::AdaptedOneSided:
      return adapted_cutoff_one_sided(n, l, side, arg, sharpness);
    case CutoffKind::TimePartition:
      return time_partition(n, arg);
  }
  return 0.0;
}

}  // namespace kglab
