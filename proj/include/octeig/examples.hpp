#pragma once

// Built-in constructors for the three worked example matrices and their listed
// eigenpairs. Products inside the constructors go through `table`, so the
// calibration can rebuild everything under a candidate orientation.

#include <array>
#include <string>

#include "octeig/jordan.hpp"
#include "octeig/octonion.hpp"

namespace octeig {

/// An eigenpair as listed: v is not normalized.
struct ListedPair {
  std::string label;
  Octonion lambda;
  OctVec3 v;
};

/// B with p = m = n, a = q i, b = -q k s, c = q j, s = cos(theta) + kl sin(theta).
/// Pairs in order u+, v+, w+, u-, v-, w-; the "+" family has
/// lambda_u = p + q conj(s) and lambda_w = p - 2q conj(s).
struct Example1 {
  JordanMatrix matrix;
  Octonion s;
  std::array<ListedPair, 6> pairs;
  double p = 0.0, q = 0.0, theta = 0.0;
};

/// B-hat with a = q i, b = -(q/2) k s, c = (q/2) j, s = sqrt(5)/3 - (2/3) kl.
/// Pairs in order u1, u2, v1, v2, w1, w2.
struct Example2 {
  JordanMatrix matrix;
  Octonion s;
  std::array<ListedPair, 6> pairs;
  /// Real eigenvalues as printed, upper-sign family then lower-sign family.
  std::array<std::array<double, 3>, 2> printed_real{};
  double p = 0.0, q = 0.0;
};

/// C with a = q i, b = q (j - il - jl), c = q (1 + k + l).
struct Example3 {
  JordanMatrix matrix;
  ListedPair pair;  ///< ((j, l, 0), p + q lk)
  /// Unscaled off-diagonal entries whose associator is 2(l - k).
  Octonion a_unit, b_unit, c_unit;
  double p = 0.0, q = 0.0;
};

Example1 make_example1(double p, double q, double theta,
                       const MultiplicationTable& table = default_table());
Example2 make_example2(double p, double q, const MultiplicationTable& table = default_table());
Example3 make_example3(double p, double q, const MultiplicationTable& table = default_table());

/// Index of `label` in the example's pair list; throws std::out_of_range.
const ListedPair& find_pair(const std::array<ListedPair, 6>& pairs, const std::string& label);

}  // namespace octeig
