#pragma once

#include <cstdint>

#include "octeig/cli/json_io.hpp"
#include "octeig/cli/report.hpp"
#include "octeig/eigen.hpp"

namespace octeig::cli {

/// Restarts used by the Example 2 orthogonal-triple search.
inline constexpr int kTripleRestarts = 264;

/// Runs every worked-example and identity check with pinned tolerances.
Report cmd_verify_paper(std::uint64_t seed);

struct EigsOptions {
  bool search_nonreal = false;
  int seeds = 16;
  std::uint64_t seed = 42;
  double nullity_tol = kNullityTol;
};
Json cmd_eigs(const MatrixFile& file, const EigsOptions& opts);
std::string eigs_text(const Json& eigs);

Json cmd_nullity(const MatrixFile& file, const Octonion& lambda, double tol = kNullityTol);

}  // namespace octeig::cli
