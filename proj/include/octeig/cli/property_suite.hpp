#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octeig/cli/json_io.hpp"

namespace octeig::cli {

struct PropertyResult {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed() const { return max_deviation <= tolerance; }
};

/// Octonion identities run on `trials` tuples of unit octonions; Jordan and
/// eigenvector identities on max(1, trials / 10) samples. Deterministic in
/// (trials, seed).
std::vector<PropertyResult> run_property_suite(std::size_t trials, std::uint64_t seed);

Json to_json(const std::vector<PropertyResult>& results);
std::string to_text(const std::vector<PropertyResult>& results);

}  // namespace octeig::cli
