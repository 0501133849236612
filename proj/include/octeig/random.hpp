#pragma once

// Seeded sampling shared by the randomized searches and the property suite.
// Doubles are built from raw mt19937_64 output so streams are identical
// across standard libraries.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "octeig/jordan.hpp"

namespace octeig {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  /// Independent stream for sub-task `index` of a run seeded with `seed`.
  Rng(std::uint64_t seed, std::uint64_t index) : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~index))) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  Octonion octonion(double lo = -1.0, double hi = 1.0) {
    Octonion o;
    for (int q = 0; q < 8; ++q) o[q] = uniform(lo, hi);
    return o;
  }
  Octonion unit_octonion() {
    Octonion o;
    for (int q = 0; q < 8; ++q) o[q] = normal();
    return o / o.norm();
  }
  OctVec3 vec3() {
    return {octonion(), octonion(), octonion()};
  }
  OctVec3 unit_vec3() { return vec3().normalized(); }
  JordanMatrix jordan(double lo = -1.0, double hi = 1.0) {
    JordanMatrix a;
    a.p = uniform(lo, hi);
    a.m = uniform(lo, hi);
    a.n = uniform(lo, hi);
    a.a = octonion(lo, hi);
    a.b = octonion(lo, hi);
    a.c = octonion(lo, hi);
    return a;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace octeig
