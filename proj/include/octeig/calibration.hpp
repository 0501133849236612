#pragma once

#include <vector>

#include "octeig/octonion.hpp"

namespace octeig {

struct CalibrationResult {
  MultiplicationTable table;
  unsigned mask = 0;                     ///< reversed-line mask relative to the default
  std::vector<unsigned> passing_masks;   ///< every orientation satisfying all examples
  double default_worst_residual = 0.0;   ///< worst example residual under the default
};

/// Worst scale-relative residual ‖Av - v lambda‖ / (scale(A) ‖v‖) over all
/// listed eigenpairs of the three examples (several parameter sets), with
/// every product evaluated under `table`.
double example_worst_residual(const MultiplicationTable& table);

/// Returns the default table if it satisfies every listed example eigenpair,
/// otherwise the first of the 128 orientation assignments that does. All
/// passing assignments are reported. Throws NoConsistentTable if none passes.
CalibrationResult calibrate_table(double tol = 1e-10);

}  // namespace octeig
