#include "octeig/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace octeig::kernels {
namespace {

void oct_mul_scalar(const double* a, const double* b, double* out,
                    const PackedTable& table) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (int p = 0; p < 8; ++p) {
    const double ap = a[p];
    const auto& src = table.src[p];
    const auto& coef = table.coef[p];
    for (int r = 0; r < 8; ++r) acc[r] += ap * coef[r] * b[src[r]];
  }
  for (int r = 0; r < 8; ++r) out[r] = acc[r];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void rotate_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

const KernelSet kScalar{"scalar", oct_mul_scalar, dot_scalar, rotate_scalar,
                        axpy_scalar};

}  // namespace

#if defined(OCTEIG_HAVE_AVX2)
const KernelSet& avx2_kernel_table();  // kernels_avx2.cpp
#endif

const KernelSet& scalar_kernels() { return kScalar; }

const KernelSet* avx2_kernels() {
#if defined(OCTEIG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("OCTEIG_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    if (const KernelSet* k = avx2_kernels()) return k;
    return &kScalar;
  }();
  return *chosen;
}

}  // namespace octeig::kernels
