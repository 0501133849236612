#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "octeig/realops.hpp"

namespace octeig {
namespace {

constexpr int kMaxSweeps = 80;

}  // namespace

SingularSystem singular_value_decomposition(const RealMatrix& m,
                                            const kernels::KernelSet& ks) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  // Column-major copies so each Jacobi rotation touches two contiguous columns.
  std::vector<double> w(rows * n), v(n * n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < rows; ++r) w[c * rows + r] = m(r, c);
    v[c * n + c] = 1.0;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double* wi = &w[i * rows];
      for (std::size_t j = i + 1; j < n; ++j) {
        double* wj = &w[j * rows];
        const double alpha = ks.dot(wi, wi, rows);
        const double beta = ks.dot(wj, wj, rows);
        const double gamma = ks.dot(wi, wj, rows);
        if (gamma == 0.0 || std::fabs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        ks.rotate(wi, wj, rows, c, s);
        ks.rotate(&v[i * n], &v[j * n], n, c, s);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (std::size_t c = 0; c < n; ++c) sv[c] = std::sqrt(ks.dot(&w[c * rows], &w[c * rows], rows));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sv[a] > sv[b]; });

  SingularSystem out;
  out.values.resize(n);
  out.v = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = sv[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.v(r, k) = v[order[k] * n + r];
  }
  return out;
}

SmallestSingular smallest_singular(const RealMatrix& m) {
  const SingularSystem s = singular_value_decomposition(m);
  return {s.values.back(), s.v.column(s.values.size() - 1)};
}

std::size_t nullity(const RealMatrix& m, double tol) {
  const SingularSystem s = singular_value_decomposition(m);
  const double cut = tol * std::max(1.0, s.values.front());
  return static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [&](double x) { return x < cut; }));
}

RealMatrix null_space_basis(const RealMatrix& m, double tol) {
  const SingularSystem s = singular_value_decomposition(m);
  const double cut = tol * std::max(1.0, s.values.front());
  const std::size_t n = s.values.size();
  std::size_t k = 0;
  while (k < n && s.values[n - 1 - k] < cut) ++k;
  RealMatrix basis(n, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) basis(r, c) = s.v(r, n - k + c);
  return basis;
}

}  // namespace octeig
