#pragma once

// Test-only oracles built independently of the library's table machinery.

#include <array>
#include <cmath>

#include "octeig/octonion.hpp"

namespace oracle {

/// Hamilton quaternion w + xi + yj + zk.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
  Quat conj() const { return {w, -x, -y, -z}; }
  friend Quat operator+(Quat a, Quat b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Quat operator-(Quat a, Quat b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Quat operator*(Quat a, Quat b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

/// Octonion a + b l as a pair of quaternions; b's (1,i,j,k) parts sit at the
/// l, il, jl, kl slots.
inline std::array<Quat, 2> split(const octeig::Octonion& o) {
  return {Quat{o[0], o[1], o[2], o[3]}, Quat{o[7], o[6], o[5], o[4]}};
}

inline octeig::Octonion join(const Quat& a, const Quat& b) {
  return octeig::Octonion(std::array<double, 8>{a.w, a.x, a.y, a.z, b.z, b.y, b.x, b.w});
}

/// (a + b l)(c + d l) = (ac - conj(d) b) + (d a + b conj(c)) l
inline octeig::Octonion mul(const octeig::Octonion& x, const octeig::Octonion& y) {
  const auto [a, b] = split(x);
  const auto [c, d] = split(y);
  return join(a * c - d.conj() * b, d * a + b * c.conj());
}

}  // namespace oracle
