#include <cmath>

#include "octeig/realops.hpp"

namespace octeig {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::diagonal(const RealVec& d) {
  RealMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RealVec RealMatrix::column(std::size_t c) const {
  RealVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double RealMatrix::frobenius() const {
  double s = 0.0;
  for (double v : e_) s += v * v;
  return std::sqrt(s);
}

double RealMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += std::fabs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

RealVec RealMatrix::operator*(const RealVec& x) const {
  RealVec y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double ark = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double norm2(const RealVec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RealVec to_real(const Octonion& o) { return RealVec(o.coeffs().begin(), o.coeffs().end()); }

RealVec to_real(const OctVec3& v) {
  RealVec r(24);
  for (int s = 0; s < 3; ++s)
    for (int q = 0; q < 8; ++q) r[8 * s + q] = v[s][q];
  return r;
}

Octonion octonion_from_real(const double* coeffs) {
  Octonion o;
  for (int q = 0; q < 8; ++q) o[q] = coeffs[q];
  return o;
}

OctVec3 vec3_from_real(const RealVec& r) {
  return {octonion_from_real(r.data()), octonion_from_real(r.data() + 8),
          octonion_from_real(r.data() + 16)};
}

RealMatrix linearize_oct_map(const OctMap& f) {
  RealMatrix m(8, 8);
  for (int q = 0; q < 8; ++q) {
    const Octonion col = f(Octonion::unit(static_cast<Unit>(q)));
    for (int r = 0; r < 8; ++r) m(r, q) = col[r];
  }
  return m;
}

RealMatrix linearize_vec_map(const VecMap& f) {
  RealMatrix m(24, 24);
  for (int col = 0; col < 24; ++col) {
    OctVec3 e;
    e[col / 8][col % 8] = 1.0;
    const RealVec image = to_real(f(e));
    for (int r = 0; r < 24; ++r) m(r, col) = image[r];
  }
  return m;
}

bool solve_spd(const RealMatrix& s, const RealVec& rhs, RealVec& x) {
  const std::size_t n = s.rows();
  RealMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double v = rhs[i];
    for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * x[k];
    x[i] = v / l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    double v = x[i];
    for (std::size_t k = i + 1; k < n; ++k) v -= l(k, i) * x[k];
    x[i] = v / l(i, i);
  }
  return true;
}

}  // namespace octeig
