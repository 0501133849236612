#pragma once

// Data-parallel inner loops behind the octonion product and the dense real
// kernels. Every routine has a portable scalar reference version; an AVX2/FMA
// variant is compiled when the toolchain supports it and selected at runtime
// when the CPU does. Results agree to rounding (FMA contraction differs).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace octeig::kernels {

/// Gather form of an 8x8 signed-permutation product table:
///   (a b)[r] = sum_p a[p] * coef[p][r] * b[src[p][r]].
struct PackedTable {
  alignas(32) std::array<std::array<std::int32_t, 8>, 8> src{};
  alignas(32) std::array<std::array<double, 8>, 8> coef{};
};

struct KernelSet {
  std::string_view name;
  void (*oct_mul)(const double* a, const double* b, double* out,
                  const PackedTable& table);
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// x <- c*x - s*y, y <- s*x + c*y
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// y <- y + alpha*x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

const KernelSet& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels();

/// Chosen once on first use. OCTEIG_KERNELS=scalar forces the reference path.
const KernelSet& active_kernels();

}  // namespace octeig::kernels
