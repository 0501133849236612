#include "octeig/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace octeig {

double OctVec3::norm() const { return std::sqrt(norm2()); }

OctVec3 OctVec3::normalized() const {
  const double n = norm();
  return n > 0.0 ? *this * (1.0 / n) : *this;
}

OctVec3 operator*(const OctVec3& v, const Octonion& lambda) {
  return {v.x * lambda, v.y * lambda, v.z * lambda};
}

Octonion inner(const OctVec3& v, const OctVec3& w) {
  return conj(v.x) * w.x + conj(v.y) * w.y + conj(v.z) * w.z;
}

OctMatrix3 OctMatrix3::identity() {
  OctMatrix3 m;
  for (int r = 0; r < 3; ++r) m(r, r) = Octonion(1.0);
  return m;
}

OctMatrix3 OctMatrix3::from_columns(const OctVec3& c0, const OctVec3& c1,
                                    const OctVec3& c2) {
  OctMatrix3 m;
  for (int r = 0; r < 3; ++r) {
    m(r, 0) = c0[r];
    m(r, 1) = c1[r];
    m(r, 2) = c2[r];
  }
  return m;
}

OctMatrix3 OctMatrix3::conj_transpose() const {
  OctMatrix3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = conj((*this)(c, r));
  return t;
}

double OctMatrix3::norm() const {
  double s = 0.0;
  for (const auto& e : e_) s += e.norm2();
  return std::sqrt(s);
}

double OctMatrix3::max_entry() const {
  double m = 0.0;
  for (const auto& e : e_) m = std::max(m, e.norm());
  return m;
}

OctMatrix3& OctMatrix3::operator+=(const OctMatrix3& o) {
  for (int q = 0; q < 9; ++q) e_[q] += o.e_[q];
  return *this;
}

OctMatrix3& OctMatrix3::operator-=(const OctMatrix3& o) {
  for (int q = 0; q < 9; ++q) e_[q] -= o.e_[q];
  return *this;
}

OctMatrix3& OctMatrix3::operator*=(double s) {
  for (auto& e : e_) e *= s;
  return *this;
}

OctMatrix3 gen_matmul(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

OctVec3 gen_matvec(const OctMatrix3& a, const OctVec3& v) {
  OctVec3 out;
  for (int r = 0; r < 3; ++r) out[r] = a(r, 0) * v.x + a(r, 1) * v.y + a(r, 2) * v.z;
  return out;
}

OctMatrix3 scale_left(const Octonion& lambda, const OctMatrix3& m) {
  OctMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = lambda * m(r, c);
  return out;
}

JordanMatrix JordanMatrix::from_matrix(const OctMatrix3& f) {
  JordanMatrix j;
  j.p = f(0, 0).re();
  j.m = f(1, 1).re();
  j.n = f(2, 2).re();
  j.a = 0.5 * (f(0, 1) + conj(f(1, 0)));
  j.b = 0.5 * (f(2, 0) + conj(f(0, 2)));
  j.c = 0.5 * (f(1, 2) + conj(f(2, 1)));
  return j;
}

OctMatrix3 JordanMatrix::to_matrix() const {
  OctMatrix3 f;
  f(0, 0) = p;
  f(0, 1) = a;
  f(0, 2) = conj(b);
  f(1, 0) = conj(a);
  f(1, 1) = m;
  f(1, 2) = c;
  f(2, 0) = b;
  f(2, 1) = conj(c);
  f(2, 2) = n;
  return f;
}

double JordanMatrix::scale() const {
  return std::max({1.0, std::fabs(p), std::fabs(m), std::fabs(n), a.norm(), b.norm(),
                   c.norm()});
}

JordanMatrix& JordanMatrix::operator+=(const JordanMatrix& o) {
  p += o.p;
  m += o.m;
  n += o.n;
  a += o.a;
  b += o.b;
  c += o.c;
  return *this;
}

JordanMatrix& JordanMatrix::operator-=(const JordanMatrix& o) {
  p -= o.p;
  m -= o.m;
  n -= o.n;
  a -= o.a;
  b -= o.b;
  c -= o.c;
  return *this;
}

JordanMatrix& JordanMatrix::operator*=(double s) {
  p *= s;
  m *= s;
  n *= s;
  a *= s;
  b *= s;
  c *= s;
  return *this;
}

JordanMatrix jordan_product(const JordanMatrix& a, const JordanMatrix& b) {
  const OctMatrix3 fa = a.to_matrix();
  const OctMatrix3 fb = b.to_matrix();
  return JordanMatrix::from_matrix(0.5 * (gen_matmul(fa, fb) + gen_matmul(fb, fa)));
}

JordanMatrix power2(const JordanMatrix& a) { return jordan_product(a, a); }

JordanMatrix power3(const JordanMatrix& a) { return jordan_product(power2(a), a); }

JordanMatrix power3_right(const JordanMatrix& a) { return jordan_product(a, power2(a)); }

double trace(const JordanMatrix& a) { return a.p + a.m + a.n; }

double sigma(const JordanMatrix& a) {
  const double t = trace(a);
  return 0.5 * (t * t - trace(power2(a)));
}

double sigma_closed_form(const JordanMatrix& a) {
  return a.p * a.m + a.p * a.n + a.m * a.n - a.a.norm2() - a.b.norm2() - a.c.norm2();
}

double det(const JordanMatrix& a) {
  const Octonion bac = a.b * (a.a * a.c);
  return a.p * a.m * a.n + 2.0 * bac.re() - a.n * a.a.norm2() - a.m * a.b.norm2() -
         a.p * a.c.norm2();
}

JordanMatrix freudenthal(const JordanMatrix& a, const JordanMatrix& b) {
  const double ta = trace(a);
  const double tb = trace(b);
  const JordanMatrix ab = jordan_product(a, b);
  return ab - 0.5 * (a * tb + b * ta) +
         JordanMatrix::identity() * (0.5 * (ta * tb - trace(ab)));
}

double det_freudenthal(const JordanMatrix& a) {
  return trace(jordan_product(freudenthal(a, a), a)) / 3.0;
}

JordanMatrix char_residual(const JordanMatrix& a) {
  return power3(a) - trace(a) * power2(a) + sigma(a) * a -
         det(a) * JordanMatrix::identity();
}

OctVec3 matvec(const JordanMatrix& a, const OctVec3& v) {
  OctVec3 out;
  out.x = a.p * v.x + a.a * v.y + conj(a.b) * v.z;
  out.y = conj(a.a) * v.x + a.m * v.y + a.c * v.z;
  out.z = a.b * v.x + conj(a.c) * v.y + a.n * v.z;
  return out;
}

OctMatrix3 outer(const OctVec3& v, const OctVec3& w) {
  OctMatrix3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = v[r] * conj(w[c]);
  return out;
}

OctMatrix3 outer_scaled(const OctVec3& v, const Octonion& lambda) {
  OctMatrix3 out;
  for (int r = 0; r < 3; ++r) {
    const Octonion vl = v[r] * lambda;
    for (int c = 0; c < 3; ++c) out(r, c) = vl * conj(v[c]);
  }
  return out;
}

}  // namespace octeig
