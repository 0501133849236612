#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "octeig/eigen.hpp"
#include "octeig/random.hpp"

namespace octeig {

double ortho_check(const OctVec3& v, const OctVec3& w) {
  const double scale = v.norm2() * w.norm();
  if (scale == 0.0) return 0.0;
  return gen_matvec(outer(v, v), w).norm() / scale;
}

double new_ortho_check(const OctVec3& v, const Octonion& lambda, const OctVec3& w) {
  const double scale = v.norm2() * w.norm() * lambda.norm();
  if (scale == 0.0) return 0.0;
  return gen_matvec(outer_scaled(v, lambda), w).norm() / scale;
}

DecompositionDeviation decomposition_checks(const JordanMatrix& a,
                                            const std::array<EigenPair, 3>& pairs) {
  const OctMatrix3 full = a.to_matrix();
  const double scale = a.scale();
  OctMatrix3 hermitian_sum, weighted_sum;
  for (const auto& pr : pairs) {
    hermitian_sum += scale_left(pr.lambda, outer(pr.v, pr.v));
    weighted_sum += outer_scaled(pr.v, pr.lambda);
  }
  const OctMatrix3 u = OctMatrix3::from_columns(pairs[0].v, pairs[1].v, pairs[2].v);
  const OctMatrix3 ud = u.conj_transpose();
  const OctMatrix3 uud = gen_matmul(u, ud);

  DecompositionDeviation d;
  d.hermitian_sum = (full - hermitian_sum).norm() / scale;
  d.weighted_sum = (full - weighted_sum).norm() / scale;
  d.unitarity = (uud - OctMatrix3::identity()).norm();
  d.associativity = (gen_matmul(gen_matmul(full, u), ud) - gen_matmul(full, uud)).norm() / scale;
  return d;
}

OctMatrix3 six_square_sum(std::span<const OctVec3> vectors) {
  OctMatrix3 sum;
  for (const auto& v : vectors) sum += outer(v, v);
  return sum;
}

namespace {

constexpr int kMaxLmIterations = 150;
constexpr int kResidualsPerPair = 24;
constexpr int kOrderedPairs = 6;
constexpr std::size_t kResidualCount = kResidualsPerPair * kOrderedPairs;

RealVec combine(const RealMatrix& basis, const double* coeffs) {
  RealVec out(24, 0.0);
  for (std::size_t c = 0; c < basis.cols(); ++c)
    for (std::size_t r = 0; r < 24; ++r) out[r] += basis(r, c) * coeffs[c];
  return out;
}

class TripleObjective {
 public:
  TripleObjective(const OctVec3& fixed, const RealMatrix& bu, const RealMatrix& bw)
      : fixed_(fixed.normalized()), bu_(bu), bw_(bw) {}

  std::size_t dims() const { return bu_.cols() + bw_.cols(); }

  std::array<OctVec3, 3> vectors(const RealVec& c) const {
    const OctVec3 u = vec3_from_real(combine(bu_, c.data())).normalized();
    const OctVec3 w = vec3_from_real(combine(bw_, c.data() + bu_.cols())).normalized();
    return {fixed_, u, w};
  }

  /// Stacked (v v^dagger) w over the six ordered pairs.
  RealVec residuals(const RealVec& c) const {
    const auto vs = vectors(c);
    RealVec out;
    out.reserve(kResidualCount);
    for (int i = 0; i < 3; ++i) {
      const OctMatrix3 proj = outer(vs[i], vs[i]);
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const RealVec r = to_real(gen_matvec(proj, vs[j]));
        out.insert(out.end(), r.begin(), r.end());
      }
    }
    return out;
  }

  double worst_pair(const RealVec& c) const {
    const RealVec r = residuals(c);
    double worst = 0.0;
    for (int k = 0; k < kOrderedPairs; ++k) {
      double s = 0.0;
      for (int e = 0; e < kResidualsPerPair; ++e) s += r[k * kResidualsPerPair + e] * r[k * kResidualsPerPair + e];
      worst = std::max(worst, std::sqrt(s));
    }
    return worst;
  }

  void normalize_blocks(RealVec& c) const {
    auto fix = [](double* p, std::size_t n) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += p[i] * p[i];
      s = std::sqrt(s);
      if (s > 0.0)
        for (std::size_t i = 0; i < n; ++i) p[i] /= s;
    };
    fix(c.data(), bu_.cols());
    fix(c.data() + bu_.cols(), bw_.cols());
  }

 private:
  OctVec3 fixed_;
  const RealMatrix& bu_;
  const RealMatrix& bw_;
};

double sum_sq(const RealVec& r) {
  double s = 0.0;
  for (double x : r) s += x * x;
  return s;
}

RealVec levenberg_marquardt(const TripleObjective& obj, RealVec c) {
  const std::size_t n = c.size();
  obj.normalize_blocks(c);
  RealVec r = obj.residuals(c);
  double cost = sum_sq(r);
  double mu = 1e-3;
  for (int it = 0; it < kMaxLmIterations && cost > 1e-30; ++it) {
    RealMatrix jac(kResidualCount, n);
    for (std::size_t k = 0; k < n; ++k) {
      RealVec cp = c;
      const double h = 1e-7;
      cp[k] += h;
      const RealVec rp = obj.residuals(cp);
      for (std::size_t e = 0; e < kResidualCount; ++e) jac(e, k) = (rp[e] - r[e]) / h;
    }
    RealMatrix normal(n, n);
    RealVec grad(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t e = 0; e < kResidualCount; ++e) grad[i] -= jac(e, i) * r[e];
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t e = 0; e < kResidualCount; ++e) s += jac(e, i) * jac(e, j);
        normal(i, j) = s;
      }
    }
    bool improved = false;
    while (mu < 1e12) {
      RealMatrix damped = normal;
      for (std::size_t i = 0; i < n; ++i) damped(i, i) += mu;
      RealVec step;
      if (!solve_spd(damped, grad, step)) {
        mu *= 4.0;
        continue;
      }
      RealVec trial = c;
      for (std::size_t i = 0; i < n; ++i) trial[i] += step[i];
      obj.normalize_blocks(trial);
      const RealVec rt = obj.residuals(trial);
      const double ct = sum_sq(rt);
      if (ct < cost) {
        c = std::move(trial);
        r = rt;
        const double gain = cost - ct;
        cost = ct;
        mu = std::max(mu / 3.0, 1e-12);
        improved = gain > 1e-15 * cost;
        break;
      }
      mu *= 4.0;
    }
    if (!improved) break;
  }
  return c;
}

}  // namespace

TripleSearchResult orthogonal_triple_search(const JordanMatrix& a, const EigenPair& fixed,
                                            const std::vector<Eigenspace>& others, int restarts,
                                            std::uint64_t seed) {
  const OctVec3 fv = fixed.v.normalized();
  if (residual_norm(a, fv, fixed.lambda) > 1e-8 * a.scale())
    throw std::invalid_argument("orthogonal_triple_search: fixed pair is not an eigenpair");

  std::vector<std::pair<std::size_t, std::size_t>> space_pairs;
  for (std::size_t i = 0; i < others.size(); ++i) {
    if (others[i].basis.cols() == 0) continue;
    for (std::size_t j = i; j < others.size(); ++j)
      if (others[j].basis.cols() > 0) space_pairs.emplace_back(i, j);
  }
  TripleSearchResult best;
  best.best_residual = std::numeric_limits<double>::infinity();
  if (space_pairs.empty()) return best;

  for (int k = 0; k < restarts; ++k) {
    const auto [iu, iw] = space_pairs[static_cast<std::size_t>(k) % space_pairs.size()];
    const TripleObjective obj(fv, others[iu].basis, others[iw].basis);
    Rng rng(seed, static_cast<std::uint64_t>(k));
    RealVec c(obj.dims());
    for (double& x : c) x = rng.normal();
    c = levenberg_marquardt(obj, std::move(c));
    const double worst = obj.worst_pair(c);
    ++best.restarts;
    if (worst < best.best_residual) {
      const auto vs = obj.vectors(c);
      best.best_residual = worst;
      best.u = vs[1];
      best.w = vs[2];
      best.u_space = others[iu].label;
      best.w_space = others[iw].label;
    }
  }
  return best;
}

}  // namespace octeig
