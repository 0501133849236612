#pragma once

// Small dense real kernels used to linearize octonion-linear maps. Sizes stay
// at or below 24x24, so everything is written out directly.

#include <cstddef>
#include <functional>
#include <vector>

#include "octeig/jordan.hpp"
#include "octeig/kernels.hpp"

namespace octeig {

using RealVec = std::vector<double>;

/// Dense row-major real matrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RealMatrix identity(std::size_t n);
  static RealMatrix diagonal(const RealVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  RealVec column(std::size_t c) const;
  RealMatrix transpose() const;
  double frobenius() const;
  /// Largest absolute row sum.
  double norm_inf() const;

  RealVec operator*(const RealVec& x) const;
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> e_;
};

double norm2(const RealVec& v);

RealVec to_real(const Octonion& o);
RealVec to_real(const OctVec3& v);
Octonion octonion_from_real(const double* coeffs);
OctVec3 vec3_from_real(const RealVec& r);

using OctMap = std::function<Octonion(const Octonion&)>;
using VecMap = std::function<OctVec3(const OctVec3&)>;

/// 8x8 matrix whose column q holds the coefficients of f(e_q).
RealMatrix linearize_oct_map(const OctMap& f);
/// 24x24 analogue, basis vectors ordered x-slot, y-slot, z-slot.
RealMatrix linearize_vec_map(const VecMap& f);

struct SingularSystem {
  RealVec values;  ///< descending
  RealMatrix v;    ///< right singular vectors as columns, same order
};

/// One-sided Jacobi on the columns of a square matrix.
SingularSystem singular_value_decomposition(
    const RealMatrix& m, const kernels::KernelSet& ks = kernels::active_kernels());

struct SmallestSingular {
  double value = 0.0;
  RealVec vector;
};
SmallestSingular smallest_singular(const RealMatrix& m);

/// Number of singular values below tol * max(1, sigma_max).
std::size_t nullity(const RealMatrix& m, double tol = 1e-7);

/// Orthonormal basis (columns) of the numerical null space at the same threshold.
RealMatrix null_space_basis(const RealMatrix& m, double tol = 1e-7);

/// Real eigenvalues (|imag| < tol) of a general square matrix, ascending and
/// merged when closer than tol. Hessenberg reduction then Francis double-shift
/// QR. Throws NoConvergence.
RealVec real_eigenvalues(const RealMatrix& m, double tol);

/// All eigenvalues as (re, im) pairs, unsorted.
struct ComplexEig {
  double re, im;
};
std::vector<ComplexEig> eigenvalues(const RealMatrix& m);

/// Real roots of x^3 + t2 x^2 + t1 x + t0, ascending, repeated per multiplicity
/// when all three are real.
RealVec cubic_roots(double t2, double t1, double t0);

/// Solves S x = rhs for symmetric positive-definite S by Cholesky.
/// Returns false if S is not numerically positive definite.
bool solve_spd(const RealMatrix& s, const RealVec& rhs, RealVec& x);

}  // namespace octeig
