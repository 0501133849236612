// Compiled with -mavx2 -mfma; only reached through avx2_kernels() after a
// CPU feature check.

#include <immintrin.h>

#include "octeig/kernels.hpp"

namespace octeig::kernels {
namespace {

void oct_mul_avx2(const double* a, const double* b, double* out,
                  const PackedTable& table) {
  __m256d lo = _mm256_setzero_pd();
  __m256d hi = _mm256_setzero_pd();
  for (int p = 0; p < 8; ++p) {
    const __m256d ap = _mm256_broadcast_sd(a + p);
    const __m128i idx_lo =
        _mm_load_si128(reinterpret_cast<const __m128i*>(table.src[p].data()));
    const __m128i idx_hi = _mm_load_si128(
        reinterpret_cast<const __m128i*>(table.src[p].data() + 4));
    const __m256d c_lo = _mm256_load_pd(table.coef[p].data());
    const __m256d c_hi = _mm256_load_pd(table.coef[p].data() + 4);
    const __m256d b_lo = _mm256_i32gather_pd(b, idx_lo, 8);
    const __m256d b_hi = _mm256_i32gather_pd(b, idx_hi, 8);
    lo = _mm256_fmadd_pd(_mm256_mul_pd(ap, c_lo), b_lo, lo);
    hi = _mm256_fmadd_pd(_mm256_mul_pd(ap, c_hi), b_hi, hi);
  }
  _mm256_storeu_pd(out, lo);
  _mm256_storeu_pd(out + 4, hi);
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void rotate_avx2(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_fmsub_pd(vc, xi, _mm256_mul_pd(vs, yi)));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, xi, _mm256_mul_pd(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

const KernelSet kAvx2{"avx2", oct_mul_avx2, dot_avx2, rotate_avx2, axpy_avx2};

}  // namespace

const KernelSet& avx2_kernel_table() { return kAvx2; }

}  // namespace octeig::kernels
