#pragma once

// Right eigenvalue problem A v = v lambda for 3x3 octonionic Hermitian A:
// residuals and the identities every eigenpair satisfies, the reduction of the
// real spectrum to two cubics, a numerical search for non-real eigenvalues,
// and the orthogonality / decomposition checkers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octeig/jordan.hpp"
#include "octeig/realops.hpp"

namespace octeig {

inline constexpr double kNullityTol = 1e-7;
inline constexpr int kSearchMaxIter = 200;
inline constexpr double kSearchTol = 1e-10;
/// |‖v‖ - 1| allowed by operations that require a normalized vector.
inline constexpr double kNormalizationTol = 1e-9;

struct EigenPair {
  Octonion lambda;
  OctVec3 v;
  double residual = 0.0;  ///< ‖Av - v lambda‖
};

/// One family of real eigenvalues: roots of
///   x^3 - tr(A) x^2 + sigma(A) x - (det(A) + r) = 0.
struct RealEigenFamily {
  double r = 0.0;
  RealVec lambdas;
};

/// Non-real eigenvalue (p + rho) - beta kl of the first worked example.
struct LformParams {
  double rho = 0.0, beta = 0.0, q = 0.0;
};

struct Eigenspace {
  std::string label;
  Octonion lambda;
  RealMatrix basis;  ///< 24 x dim, orthonormal columns
};

/// Av - v lambda
OctVec3 residual(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda);
double residual_norm(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda);
EigenPair make_pair(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda);

/// 24x24 real matrix of v -> Av - v lambda.
RealMatrix eigen_operator(const JordanMatrix& a, const Octonion& lambda);

/// v^dagger (A v); equals lambda for a normalized eigenvector. Throws NotNormalized.
Octonion lambda_from_vector(const JordanMatrix& a, const OctVec3& v);

/// (v^dagger A) v - v^dagger (A v); equals -2 Im(lambda) on a normalized eigenpair.
Octonion hermitian_sandwich(const JordanMatrix& a, const OctVec3& v);

/// Real part of lambda from the dot product of row `which` (0, 1, 2) of the
/// component equations with the matching component. Throws ZeroComponent.
double re_lambda_formula(const JordanMatrix& a, const OctVec3& v, int which);
/// All three cyclic forms; the ones whose component vanishes are empty.
std::array<std::optional<double>, 3> re_lambda_formulas(const JordanMatrix& a, const OctVec3& v);
/// [x,a,y] + [z,b,x] + [y,c,z]; Im(lambda) for a normalized eigenpair. Throws NotNormalized.
Octonion im_lambda_formula(const JordanMatrix& a, const OctVec3& v);

/// Closed form for lambda whose real term is
///   (p|x|^2 + m|y|^2 +- n|z|^2 + 2 x.(ay)) / (|x|^2 + |y|^2 +- |z|^2)
/// with the sign chosen below. Empty when the denominator vanishes.
enum class ZSign { minus, plus };
std::optional<Octonion> lambda_closed_form(const JordanMatrix& a, const OctVec3& v, ZSign sign);

/// Both sides of the generalized characteristic equation, each evaluated with
/// the parenthesization of its derivation.
struct CharSides {
  Octonion lhs, rhs;
};
CharSides char3_sides(const JordanMatrix& a, const OctVec3& v, const Octonion& lambda);

/// 8x8 linearization of z -> b(a(cz)) + c̄(ā(b̄z)) - (b(ac) + (c̄ā)b̄) z.
RealMatrix rhs_multiplier_operator(const JordanMatrix& a);

/// The two real eigenvalue families, ordered by r. When only one multiplier
/// exists it is reported for both. Throws UnexpectedMultiplierCount for > 2.
std::array<RealEigenFamily, 2> real_eigen_families(const JordanMatrix& a);

/// Alternates v <- smallest singular vector of eigen_operator(lambda) and
/// lambda <- v^dagger (A v). Returns the lowest-residual pair seen; convergence
/// is not guaranteed and is reported through `residual`.
EigenPair eigen_search(const JordanMatrix& a, const Octonion& lambda0,
                       int max_iter = kSearchMaxIter, double tol = kSearchTol);

/// Both roots beta = +-sqrt(rhs/32) of
///   32 beta^2 = (sqrt(32 rho^2 - 7 q^2) - 5q)(11q - sqrt(32 rho^2 - 7 q^2)).
/// Throws OutOfRange unless q^2 <= rho^2 <= 4 q^2.
std::pair<double, double> lform_beta(double rho, double q);

std::size_t eigenspace_dim(const JordanMatrix& a, const Octonion& lambda, double tol = kNullityTol);
Eigenspace eigenspace(const JordanMatrix& a, const Octonion& lambda, std::string label = {},
                      double tol = kNullityTol);

/// ‖(v v^dagger) w‖ / (‖v‖^2 ‖w‖)
double ortho_check(const OctVec3& v, const OctVec3& w);
/// ‖((v lambda) v^dagger) w‖ / (‖v‖^2 ‖w‖ |lambda|)
double new_ortho_check(const OctVec3& v, const Octonion& lambda, const OctVec3& w);

struct DecompositionDeviation {
  double hermitian_sum = 0.0;   ///< ‖A - sum lambda (v v^dagger)‖ / scale(A)
  double weighted_sum = 0.0;    ///< ‖A - sum (v lambda) v^dagger‖ / scale(A)
  double unitarity = 0.0;       ///< ‖U U^dagger - I‖
  double associativity = 0.0;   ///< ‖(A U) U^dagger - A (U U^dagger)‖ / scale(A)
};
/// Pairs must be normalized; U has the three vectors as columns.
DecompositionDeviation decomposition_checks(const JordanMatrix& a,
                                            const std::array<EigenPair, 3>& pairs);

/// sum of outer(v, v) over the given (normalized) vectors.
OctMatrix3 six_square_sum(std::span<const OctVec3> vectors);

struct IdentityDeviation {
  double rank_one = 0.0;     ///< ‖((v lambda) v^dagger) v - v lambda‖, v normalized
  double associator = 0.0;   ///< ‖(v^dagger v) lambda - v^dagger (v lambda)‖, any v
};
IdentityDeviation identity_checks(const OctVec3& v, const Octonion& lambda);

struct TripleSearchResult {
  double best_residual = 0.0;  ///< lowest max pairwise ortho_check found
  OctVec3 u, w;
  std::string u_space, w_space;
  int restarts = 0;
};

/// Multi-restart Levenberg-Marquardt minimization of the largest pairwise
/// ortho_check among {fixed, u, w}, with u and w ranging over unit vectors of
/// the given eigenspaces (every unordered pair of spaces, a space may be used
/// twice). Restart k works on space pair k mod (#pairs) and draws its start
/// from (seed, k) alone, so the result does not depend on evaluation order.
TripleSearchResult orthogonal_triple_search(const JordanMatrix& a, const EigenPair& fixed,
                                            const std::vector<Eigenspace>& others,
                                            int restarts, std::uint64_t seed);

}  // namespace octeig
