#include <cmath>
#include <limits>

#include "octeig/eigen.hpp"
#include "octeig/error.hpp"

namespace octeig {
namespace {

// Singular values this close to the smallest one count as tied.
constexpr double kTieTol = 1e-7;

RealVec pick_vector(const SingularSystem& s, const RealVec& previous) {
  const std::size_t n = s.values.size();
  const double smin = s.values.back();
  const double cut = smin + kTieTol * std::max(1.0, s.values.front());
  RealVec x = s.v.column(n - 1);
  if (previous.empty()) return x;

  std::size_t tied = 0;
  while (tied < n && s.values[n - 1 - tied] <= cut) ++tied;
  if (tied > 1) {
    // Projection of the previous iterate onto the tied subspace.
    RealVec proj(n, 0.0);
    for (std::size_t k = n - tied; k < n; ++k) {
      double c = 0.0;
      for (std::size_t r = 0; r < n; ++r) c += s.v(r, k) * previous[r];
      for (std::size_t r = 0; r < n; ++r) proj[r] += c * s.v(r, k);
    }
    const double pn = norm2(proj);
    if (pn > 1e-8) {
      for (double& e : proj) e /= pn;
      return proj;
    }
  }
  double d = 0.0;
  for (std::size_t r = 0; r < n; ++r) d += x[r] * previous[r];
  if (d < 0.0)
    for (double& e : x) e = -e;
  return x;
}

}  // namespace

EigenPair eigen_search(const JordanMatrix& a, const Octonion& lambda0, int max_iter, double tol) {
  EigenPair best{lambda0, {}, std::numeric_limits<double>::infinity()};
  Octonion lambda = lambda0;
  RealVec previous;
  for (int it = 0; it < max_iter; ++it) {
    const SingularSystem s = singular_value_decomposition(eigen_operator(a, lambda));
    const RealVec x = pick_vector(s, previous);
    const OctVec3 v = vec3_from_real(x).normalized();
    lambda = lambda_from_vector(a, v);
    const double res = residual_norm(a, v, lambda);
    if (res < best.residual) best = {lambda, v, res};
    if (res < tol) break;
    previous = x;
  }
  return best;
}

std::pair<double, double> lform_beta(double rho, double q) {
  const double r2 = rho * rho;
  const double q2 = q * q;
  const double slack = 1e-12 * std::max(1.0, q2);
  if (r2 < q2 - slack || r2 > 4.0 * q2 + slack)
    throw OutOfRange("lform_beta: rho^2 must lie in [q^2, 4q^2]");
  const double aq = std::fabs(q);
  double root = std::sqrt(std::max(0.0, 32.0 * r2 - 7.0 * q2));
  // Snap the boundary roots so beta vanishes exactly there.
  if (std::fabs(root - 5.0 * aq) <= 1e-12 * aq) root = 5.0 * aq;
  if (std::fabs(root - 11.0 * aq) <= 1e-12 * aq) root = 11.0 * aq;
  double rhs = (root - 5.0 * aq) * (11.0 * aq - root);
  if (rhs < 0.0) rhs = 0.0;  // boundary values round to tiny negatives
  const double beta = std::sqrt(rhs / 32.0);
  return {beta, -beta};
}

std::size_t eigenspace_dim(const JordanMatrix& a, const Octonion& lambda, double tol) {
  return nullity(eigen_operator(a, lambda), tol);
}

Eigenspace eigenspace(const JordanMatrix& a, const Octonion& lambda, std::string label, double tol) {
  return {std::move(label), lambda, null_space_basis(eigen_operator(a, lambda), tol)};
}

}  // namespace octeig
