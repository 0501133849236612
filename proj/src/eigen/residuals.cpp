#include <cmath>
#include <string>

#include "octeig/eigen.hpp"
#include "octeig/error.hpp"

namespace octeig {
namespace {

void require_normalized(const OctVec3& v, const char* what) {
  const double n = v.norm();
  if (std::fabs(n - 1.0) > kNormalizationTol)
    throw NotNormalized(std::string(what) + ": vector norm " + std::to_string(n) + " is not 1");
}

}  // namespace

OctVec3 residual(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda) {
  return matvec(a, v) - v * lambda;
}

double residual_norm(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda) {
  return residual(a, v, lambda).norm();
}

EigenPair make_pair(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda) {
  return {lambda, v, residual_norm(a, v, lambda)};
}

RealMatrix eigen_operator(const JordanMatrix& a, const Octonion& lambda) {
  return linearize_vec_map([&](const OctVec3& v) { return residual(a, v, lambda); });
}

Octonion lambda_from_vector(const JordanMatrix& a, const OctVec3& v) {
  require_normalized(v, "lambda_from_vector");
  return inner(v, matvec(a, v));
}

Octonion hermitian_sandwich(const JordanMatrix& a, const OctVec3& v) {
  require_normalized(v, "hermitian_sandwich");
  const OctMatrix3 full = a.to_matrix();
  // Row vector v^dagger A.
  OctVec3 row;
  for (int c = 0; c < 3; ++c)
    row[c] = conj(v.x) * full(0, c) + conj(v.y) * full(1, c) + conj(v.z) * full(2, c);
  const Octonion left = row.x * v.x + row.y * v.y + row.z * v.z;
  return left - inner(v, matvec(a, v));
}

double re_lambda_formula(const JordanMatrix& a, const OctVec3& v, int which) {
  const Octonion& x = v.x;
  const Octonion& y = v.y;
  const Octonion& z = v.z;
  const double xay = dot(x, a.a * y);
  const double zbx = dot(z, a.b * x);
  const double ycz = dot(y, a.c * z);
  double num = 0.0, den = 0.0;
  switch (which) {
    case 0:
      num = xay + zbx + a.p * x.norm2();
      den = x.norm2();
      break;
    case 1:
      num = ycz + xay + a.m * y.norm2();
      den = y.norm2();
      break;
    case 2:
      num = zbx + ycz + a.n * z.norm2();
      den = z.norm2();
      break;
    default:
      throw std::invalid_argument("re_lambda_formula: which must be 0, 1 or 2");
  }
  if (den <= 1e-24 * std::max(1.0, v.norm2()))
    throw ZeroComponent("re_lambda_formula: component " + std::to_string(which) + " vanishes");
  return num / den;
}

std::array<std::optional<double>, 3> re_lambda_formulas(const JordanMatrix& a, const OctVec3& v) {
  std::array<std::optional<double>, 3> out;
  for (int w = 0; w < 3; ++w) {
    try {
      out[w] = re_lambda_formula(a, v, w);
    } catch (const ZeroComponent&) {
    }
  }
  return out;
}

Octonion im_lambda_formula(const JordanMatrix& a, const OctVec3& v) {
  require_normalized(v, "im_lambda_formula");
  return associator(v.x, a.a, v.y) + associator(v.z, a.b, v.x) + associator(v.y, a.c, v.z);
}

std::optional<Octonion> lambda_closed_form(const JordanMatrix& a, const OctVec3& v, ZSign sign) {
  const double s = sign == ZSign::plus ? 1.0 : -1.0;
  const double x2 = v.x.norm2(), y2 = v.y.norm2(), z2 = v.z.norm2();
  const double den = x2 + y2 + s * z2;
  if (std::fabs(den) <= 1e-12 * (x2 + y2 + z2)) return std::nullopt;
  const double real = (a.p * x2 + a.m * y2 + s * a.n * z2 + 2.0 * dot(v.x, a.a * v.y)) / den;
  const Octonion imag =
      (associator(v.x, a.a, v.y) + associator(v.z, a.b, v.x) + associator(v.y, a.c, v.z)) /
      (x2 + y2 + z2);
  return Octonion(real) + imag;
}

CharSides char3_sides(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda) {
  const Octonion& x = v.x;
  const Octonion& y = v.y;
  const Octonion& z = v.z;
  const Octonion& ao = a.a;
  const Octonion& bo = a.b;
  const Octonion& co = a.c;
  const Octonion ab = conj(ao), bb = conj(bo), cb = conj(co);
  const Octonion l2 = lambda * lambda;
  const Octonion l3 = l2 * lambda;
  const Octonion cubic = l3 - trace(a) * l2 + sigma(a) * lambda - Octonion(det(a));

  CharSides s;
  s.lhs = z * cubic;
  s.rhs = bo * (ao * (co * z)) + cb * (ab * (bb * z)) - (bo * (ao * co) + (cb * ab) * bb) * z +
          bo * associator(ao, y, lambda) + associator(bo, ao * y, lambda) +
          associator(bo, x, lambda) * (lambda - a.m) + cb * associator(ab, x, lambda) +
          associator(cb, ab * x, lambda) + associator(cb, y, lambda) * (lambda - a.p);
  return s;
}

IdentityDeviation identity_checks(const OctVec3& v, const Octonion& lambda) {
  IdentityDeviation d;
  d.rank_one = (gen_matvec(outer_scaled(v, lambda), v) - v * lambda).norm();
  d.associator = (inner(v, v) * lambda - inner(v, v * lambda)).norm();
  return d;
}

}  // namespace octeig
