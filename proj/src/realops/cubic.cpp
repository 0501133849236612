#include <algorithm>
#include <cmath>
#include <numbers>

#include "octeig/realops.hpp"

namespace octeig {
namespace {

// Relative size below which the discriminant counts as zero (repeated root).
constexpr double kRepeatedRootTol = 1e-12;

double eval(double t2, double t1, double t0, double x) { return ((x + t2) * x + t1) * x + t0; }

double polish(double t2, double t1, double t0, double x) {
  for (int it = 0; it < 3; ++it) {
    const double f = eval(t2, t1, t0, x);
    const double df = (3.0 * x + 2.0 * t2) * x + t1;
    if (df == 0.0) break;
    const double next = x - f / df;
    if (std::fabs(eval(t2, t1, t0, next)) >= std::fabs(f)) break;
    x = next;
  }
  return x;
}

}  // namespace

RealVec cubic_roots(double t2, double t1, double t0) {
  // x = t - t2/3 gives t^3 + P t + Q = 0.
  const double shift = t2 / 3.0;
  const double P = t1 - t2 * t2 / 3.0;
  const double Q = 2.0 * t2 * t2 * t2 / 27.0 - t2 * t1 / 3.0 + t0;
  const double scale = std::max({1.0, std::fabs(t2), std::sqrt(std::fabs(t1)), std::cbrt(std::fabs(t0))});

  RealVec roots;
  const double half_q = 0.5 * Q;
  const double third_p = P / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  const double disc_scale = std::max(half_q * half_q, std::fabs(third_p * third_p * third_p));

  if (std::fabs(P) <= kRepeatedRootTol * scale * scale &&
      std::fabs(Q) <= kRepeatedRootTol * scale * scale * scale) {
    roots.assign(3, -shift);
  } else if (std::fabs(disc) <= kRepeatedRootTol * disc_scale) {
    // Double root: t = 3Q/P once and -3Q/(2P) twice.
    roots = {3.0 * Q / P - shift, -1.5 * Q / P - shift, -1.5 * Q / P - shift};
  } else if (disc < 0.0) {
    const double rad = 2.0 * std::sqrt(-third_p);
    const double arg = std::clamp(3.0 * Q / (P * rad), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(rad * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift);
  } else {
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-half_q + sq);
    const double v = std::cbrt(-half_q - sq);
    roots.push_back(u + v - shift);
  }
  for (double& x : roots) x = polish(t2, t1, t0, x);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace octeig
