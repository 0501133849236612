#pragma once

// 3x3 octonionic Hermitian matrices (the exceptional Jordan algebra) and the
// general 3x3 octonionic matrices needed to form their products.

#include <array>

#include "octeig/octonion.hpp"

namespace octeig {

/// Column of three octonions.
struct OctVec3 {
  Octonion x, y, z;

  Octonion& operator[](int r) { return r == 0 ? x : (r == 1 ? y : z); }
  const Octonion& operator[](int r) const { return r == 0 ? x : (r == 1 ? y : z); }

  double norm2() const { return x.norm2() + y.norm2() + z.norm2(); }
  double norm() const;
  OctVec3 normalized() const;

  OctVec3& operator+=(const OctVec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  OctVec3& operator-=(const OctVec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  OctVec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
  friend OctVec3 operator+(OctVec3 a, const OctVec3& b) { return a += b; }
  friend OctVec3 operator-(OctVec3 a, const OctVec3& b) { return a -= b; }
  friend OctVec3 operator*(OctVec3 a, double s) { return a *= s; }
  friend OctVec3 operator*(double s, OctVec3 a) { return a *= s; }
};

/// Right scalar multiplication v*lambda, componentwise.
OctVec3 operator*(const OctVec3& v, const Octonion& lambda);

/// Conjugate-transpose inner product v^dagger w = sum conj(v_i) w_i.
Octonion inner(const OctVec3& v, const OctVec3& w);

/// General 3x3 matrix of octonions, row-major.
class OctMatrix3 {
 public:
  OctMatrix3() = default;

  static OctMatrix3 identity();
  /// Columns are the given vectors.
  static OctMatrix3 from_columns(const OctVec3& c0, const OctVec3& c1, const OctVec3& c2);

  Octonion& operator()(int r, int c) { return e_[3 * r + c]; }
  const Octonion& operator()(int r, int c) const { return e_[3 * r + c]; }

  OctMatrix3 conj_transpose() const;
  /// Frobenius norm over all 72 real coefficients.
  double norm() const;
  /// Largest entry norm.
  double max_entry() const;

  OctMatrix3& operator+=(const OctMatrix3& o);
  OctMatrix3& operator-=(const OctMatrix3& o);
  OctMatrix3& operator*=(double s);
  friend OctMatrix3 operator+(OctMatrix3 a, const OctMatrix3& b) { return a += b; }
  friend OctMatrix3 operator-(OctMatrix3 a, const OctMatrix3& b) { return a -= b; }
  friend OctMatrix3 operator*(OctMatrix3 a, double s) { return a *= s; }
  friend OctMatrix3 operator*(double s, OctMatrix3 a) { return a *= s; }

 private:
  std::array<Octonion, 9> e_{};
};

/// Row-by-column product; the left matrix entry always multiplies on the left.
OctMatrix3 gen_matmul(const OctMatrix3& a, const OctMatrix3& b);
OctVec3 gen_matvec(const OctMatrix3& a, const OctVec3& v);
/// Left multiplication of every entry by lambda.
OctMatrix3 scale_left(const Octonion& lambda, const OctMatrix3& m);

/// Hermitian matrix
///   ( p        a        conj(b) )
///   ( conj(a)  m        c       )
///   ( b        conj(c)  n       )
/// stored by its six independent entries.
struct JordanMatrix {
  double p = 0.0, m = 0.0, n = 0.0;
  Octonion a, b, c;

  static JordanMatrix identity() { return diag(1.0, 1.0, 1.0); }
  static JordanMatrix diag(double p, double m, double n) {
    JordanMatrix j;
    j.p = p;
    j.m = m;
    j.n = n;
    return j;
  }
  /// Reads the Hermitian part of a general matrix: real parts of the diagonal
  /// and the averaged (r,c)/(c,r) pairs off it.
  static JordanMatrix from_matrix(const OctMatrix3& full);

  OctMatrix3 to_matrix() const;
  /// max(1, largest entry norm); tolerances of cubic identities scale with its cube.
  double scale() const;
  double norm() const { return to_matrix().norm(); }

  JordanMatrix& operator+=(const JordanMatrix& o);
  JordanMatrix& operator-=(const JordanMatrix& o);
  JordanMatrix& operator*=(double s);
  friend JordanMatrix operator+(JordanMatrix x, const JordanMatrix& y) { return x += y; }
  friend JordanMatrix operator-(JordanMatrix x, const JordanMatrix& y) { return x -= y; }
  friend JordanMatrix operator*(JordanMatrix x, double s) { return x *= s; }
  friend JordanMatrix operator*(double s, JordanMatrix x) { return x *= s; }
};

/// (AB + BA)/2
JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b);
JordanMatrix power2(const JordanMatrix& a);
/// A^2 o A
JordanMatrix power3(const JordanMatrix& a);
/// A o A^2; equal to power3 by power-associativity.
JordanMatrix power3_right(const JordanMatrix& a);

double trace(const JordanMatrix& a);
/// ((tr A)^2 - tr(A^2)) / 2
double sigma(const JordanMatrix& a);
/// pm + pn + mn - |a|^2 - |b|^2 - |c|^2
double sigma_closed_form(const JordanMatrix& a);
/// pmn + 2 Re(b(ac)) - n|a|^2 - m|b|^2 - p|c|^2
double det(const JordanMatrix& a);
/// tr((A*A) o A) / 3 with * the Freudenthal product.
double det_freudenthal(const JordanMatrix& a);

/// A o B - (A tr B + B tr A)/2 + (tr A tr B - tr(A o B))/2 I
JordanMatrix freudenthal(const JordanMatrix& a, const JordanMatrix& b);

/// A^3 - tr(A) A^2 + sigma(A) A - det(A) I; vanishes for every Jordan matrix.
JordanMatrix char_residual(const JordanMatrix& a);

/// Component r of Av is sum_c A(r,c) v_c with the matrix entry on the left.
OctVec3 matvec(const JordanMatrix& a, const OctVec3& v);

/// outer(v,w)(r,c) = v_r conj(w_c)
OctMatrix3 outer(const OctVec3& v, const OctVec3& w);
/// outer_scaled(v,lambda)(r,c) = (v_r lambda) conj(v_c)
OctMatrix3 outer_scaled(const OctVec3& v, const Octonion& lambda);

}  // namespace octeig
