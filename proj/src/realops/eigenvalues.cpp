#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "octeig/error.hpp"
#include "octeig/realops.hpp"

namespace octeig {
namespace {

constexpr int kMaxIterationsPerEigenvalue = 60;

// 1-based square work array; keeps the QR sweep close to its textbook indexing.
class Work {
 public:
  explicit Work(const RealMatrix& m) : n_(static_cast<int>(m.rows())), e_((n_ + 1) * (n_ + 1), 0.0) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) (*this)(i, j) = m(i - 1, j - 1);
  }
  double& operator()(int i, int j) { return e_[i * (n_ + 1) + j]; }
  int n() const { return n_; }

 private:
  int n_;
  std::vector<double> e_;
};

// Householder reduction to upper Hessenberg form.
void to_hessenberg(Work& a) {
  const int n = a.n();
  std::vector<double> u(n + 1);
  for (int k = 1; k <= n - 2; ++k) {
    double alpha = 0.0;
    for (int i = k + 1; i <= n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a(k + 1, k) > 0) alpha = -alpha;
    for (int i = 1; i <= n; ++i) u[i] = 0.0;
    u[k + 1] = a(k + 1, k) - alpha;
    for (int i = k + 2; i <= n; ++i) u[i] = a(i, k);
    double unorm2 = 0.0;
    for (int i = k + 1; i <= n; ++i) unorm2 += u[i] * u[i];
    if (unorm2 == 0.0) continue;
    // A <- H A H with H = I - 2 u u^T / |u|^2
    for (int j = 1; j <= n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i <= n; ++i) s += u[i] * a(i, j);
      s *= 2.0 / unorm2;
      for (int i = k + 1; i <= n; ++i) a(i, j) -= s * u[i];
    }
    for (int i = 1; i <= n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j <= n; ++j) s += a(i, j) * u[j];
      s *= 2.0 / unorm2;
      for (int j = k + 1; j <= n; ++j) a(i, j) -= s * u[j];
    }
    for (int i = k + 2; i <= n; ++i) a(i, k) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix.
void hessenberg_qr(Work& a, std::vector<double>& wr, std::vector<double>& wi) {
  const int n = a.n();
  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::fabs(a(i, j));

  int nn = n;
  double t = 0.0;
  double p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
  while (nn >= 1) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::fabs(a(l - 1, l - 1)) + std::fabs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::fabs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn--] = 0.0;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::fabs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (its == kMaxIterationsPerEigenvalue)
            throw NoConvergence("Hessenberg QR exceeded its iteration budget");
          if (its == 10 || its == 20 || its == 40) {
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::fabs(a(nn, nn - 1)) + std::fabs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::fabs(p) + std::fabs(q) + std::fabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
            const double v =
                std::fabs(p) * (std::fabs(a(m - 1, m - 1)) + std::fabs(z) + std::fabs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::fabs(p) + std::fabs(q) + std::fabs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = std::copysign(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }
}

}  // namespace

std::vector<ComplexEig> eigenvalues(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues: matrix must be square");
  const int n = static_cast<int>(m.rows());
  std::vector<ComplexEig> out;
  if (n == 0) return out;
  Work a(m);
  to_hessenberg(a);
  std::vector<double> wr(n + 1), wi(n + 1);
  hessenberg_qr(a, wr, wi);
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back({wr[i], wi[i]});
  return out;
}

RealVec real_eigenvalues(const RealMatrix& m, double tol) {
  RealVec reals;
  for (const auto& e : eigenvalues(m))
    if (std::fabs(e.im) < tol) reals.push_back(e.re);
  std::sort(reals.begin(), reals.end());
  // Merge clusters, keeping the cluster mean.
  RealVec merged;
  std::size_t i = 0;
  while (i < reals.size()) {
    std::size_t j = i + 1;
    double sum = reals[i];
    while (j < reals.size() && reals[j] - reals[j - 1] < tol) sum += reals[j++];
    merged.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  return merged;
}

}  // namespace octeig
