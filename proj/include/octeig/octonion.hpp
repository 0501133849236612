#pragma once

// Octonions over the basis {1, i, j, k, kl, jl, il, l}. Products go through a
// MultiplicationTable; the free operators use the Cayley-Dickson default
//   (a + b l)(c + d l) = (ac - conj(d) b) + (d a + b conj(c)) l
// with a, b, c, d quaternions.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "octeig/kernels.hpp"

namespace octeig {

/// Positions of the basis units in the coefficient array.
enum class Unit : int { one = 0, i, j, k, kl, jl, il, l };

inline constexpr std::array<const char*, 8> kUnitNames = {
    "1", "i", "j", "k", "kl", "jl", "il", "l"};

class Octonion {
 public:
  constexpr Octonion() = default;
  constexpr explicit Octonion(const std::array<double, 8>& coeffs)
      : c_(coeffs) {}
  /// Real scalar embedded as a multiple of 1.
  constexpr Octonion(double real) { c_[0] = real; }  // NOLINT(google-explicit-constructor)

  static constexpr Octonion unit(Unit u, double scale = 1.0) {
    Octonion o;
    o.c_[static_cast<int>(u)] = scale;
    return o;
  }

  constexpr double operator[](int q) const { return c_[q]; }
  constexpr double& operator[](int q) { return c_[q]; }
  constexpr const std::array<double, 8>& coeffs() const { return c_; }
  const double* data() const { return c_.data(); }
  double* data() { return c_.data(); }

  constexpr double re() const { return c_[0]; }
  constexpr Octonion im() const {
    Octonion o = *this;
    o.c_[0] = 0.0;
    return o;
  }
  constexpr Octonion conj() const {
    Octonion o;
    o.c_[0] = c_[0];
    for (int q = 1; q < 8; ++q) o.c_[q] = -c_[q];
    return o;
  }
  constexpr double norm2() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return s;
  }
  double norm() const;
  bool is_finite() const;

  constexpr Octonion& operator+=(const Octonion& o) {
    for (int q = 0; q < 8; ++q) c_[q] += o.c_[q];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (int q = 0; q < 8; ++q) c_[q] -= o.c_[q];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) {
    for (double& v : c_) v /= s;
    return *this;
  }

  friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
  friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
  friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
  friend constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

  /// Product under the default table.
  friend Octonion operator*(const Octonion& a, const Octonion& b);

 private:
  std::array<double, 8> c_{};
};

namespace basis {
inline constexpr Octonion one = Octonion::unit(Unit::one);
inline constexpr Octonion i = Octonion::unit(Unit::i);
inline constexpr Octonion j = Octonion::unit(Unit::j);
inline constexpr Octonion k = Octonion::unit(Unit::k);
inline constexpr Octonion kl = Octonion::unit(Unit::kl);
inline constexpr Octonion jl = Octonion::unit(Unit::jl);
inline constexpr Octonion il = Octonion::unit(Unit::il);
inline constexpr Octonion l = Octonion::unit(Unit::l);
}  // namespace basis

/// Oriented quaternionic triple: e_first e_second = e_third (and cyclic).
struct OrientedLine {
  std::array<int, 3> units{};
  friend bool operator==(const OrientedLine&, const OrientedLine&) = default;
};

/// Product rule e_p e_q = sign(p,q) e_index(p,q) on the eight basis units.
class MultiplicationTable {
 public:
  /// Doubling of the quaternions with doubling unit l.
  static MultiplicationTable cayley_dickson();

  /// Builds the table from seven oriented lines of the Fano plane. Throws
  /// std::invalid_argument unless every pair of distinct imaginary units lies
  /// on exactly one line.
  static MultiplicationTable from_lines(const std::array<OrientedLine, 7>& lines);

  /// Same incidence, with the lines whose bit is set in `mask` reversed.
  MultiplicationTable with_reversed_lines(unsigned mask) const;

  const std::array<OrientedLine, 7>& lines() const { return lines_; }
  int index(int p, int q) const { return index_[p][q]; }
  int sign(int p, int q) const { return sign_[p][q]; }
  const kernels::PackedTable& packed() const { return packed_; }

  Octonion multiply(const Octonion& a, const Octonion& b) const;
  Octonion multiply(const Octonion& a, const Octonion& b,
                    const kernels::KernelSet& ks) const;

  /// Human-readable list of the oriented lines, e.g. "(i,j,k) (i,l,il) ...".
  std::string describe() const;

  friend bool operator==(const MultiplicationTable& a,
                         const MultiplicationTable& b) {
    return a.index_ == b.index_ && a.sign_ == b.sign_;
  }

 private:
  MultiplicationTable() = default;
  void pack();

  std::array<OrientedLine, 7> lines_{};
  std::array<std::array<int, 8>, 8> index_{};
  std::array<std::array<int, 8>, 8> sign_{};
  kernels::PackedTable packed_{};
};

/// Table used by the free operators; fixed for the lifetime of the process.
const MultiplicationTable& default_table();

inline Octonion conj(const Octonion& a) { return a.conj(); }
inline double re(const Octonion& a) { return a.re(); }
inline Octonion im(const Octonion& a) { return a.im(); }
inline double norm(const Octonion& a) { return a.norm(); }

/// Euclidean inner product on the coefficient space.
double dot(const Octonion& a, const Octonion& b);

/// (ab)c - a(bc)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

/// Integer power by repeated multiplication (power-associative).
Octonion pow(const Octonion& a, int n);

double distance(const Octonion& a, const Octonion& b);

/// |a - b| <= abs_tol + rel_tol * max(|a|, |b|)
bool approx_equal(const Octonion& a, const Octonion& b, double abs_tol,
                  double rel_tol = 0.0);

/// Coefficient listing such as "2 - 0.5kl".
std::string to_string(const Octonion& a, int precision = 6);
std::ostream& operator<<(std::ostream& os, const Octonion& a);

}  // namespace octeig
