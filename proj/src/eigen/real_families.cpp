#include <algorithm>
#include <string>

#include "octeig/eigen.hpp"
#include "octeig/error.hpp"

namespace octeig {

RealMatrix rhs_multiplier_operator(const JordanMatrix& a) {
  const Octonion ab = conj(a.a), bb = conj(a.b), cb = conj(a.c);
  const Octonion shift = a.b * (a.a * a.c) + (cb * ab) * bb;
  return linearize_oct_map([&](const Octonion& z) {
    return a.b * (a.a * (a.c * z)) + cb * (ab * (bb * z)) - shift * z;
  });
}

std::array<RealEigenFamily, 2> real_eigen_families(const JordanMatrix& a) {
  const RealMatrix op = rhs_multiplier_operator(a);
  const double tol = 1e-7 * std::max(1.0, op.frobenius());
  const RealVec multipliers = real_eigenvalues(op, tol);
  if (multipliers.empty() || multipliers.size() > 2)
    throw UnexpectedMultiplierCount("expected one or two real multipliers, found " +
                                    std::to_string(multipliers.size()));
  const double tr = trace(a);
  const double sg = sigma_closed_form(a);
  const double dt = det(a);
  std::array<RealEigenFamily, 2> out;
  for (int f = 0; f < 2; ++f) {
    const double r = multipliers[std::min<std::size_t>(f, multipliers.size() - 1)];
    out[f].r = r;
    out[f].lambdas = cubic_roots(-tr, sg, -(dt + r));
  }
  return out;
}

}  // namespace octeig
