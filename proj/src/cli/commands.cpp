#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "octeig/cli/commands.hpp"
#include "octeig/random.hpp"

namespace octeig::cli {

namespace {

constexpr double kDedupDistance = 1e-6;
constexpr double kAcceptResidual = 1e-8;

}  // namespace

Json cmd_eigs(const MatrixFile& file, const EigsOptions& opts) {
  const JordanMatrix& a = file.matrix;
  Json out = {{"matrix", to_json(a)}, {"trace", trace(a)}, {"sigma", sigma(a)}, {"det", det(a)}};

  Json fams = Json::array();
  for (const auto& fam : real_eigen_families(a)) {
    Json nul = Json::array();
    for (double l : fam.lambdas) nul.push_back(eigenspace_dim(a, l, opts.nullity_tol));
    fams.push_back({{"r", fam.r}, {"lambdas", fam.lambdas}, {"nullities", nul}});
  }
  out["families"] = std::move(fams);

  if (opts.search_nonreal) {
    Json found = Json::array();
    std::vector<Octonion> seen;
    const double centre = trace(a) / 3.0;
    const double spread = a.scale();
    for (int k = 0; k < opts.seeds; ++k) {
      Rng rng(opts.seed, static_cast<std::uint64_t>(k));
      const Octonion start = centre + rng.octonion(-spread, spread);
      const EigenPair pr = eigen_search(a, start);
      if (pr.residual > kAcceptResidual || im(pr.lambda).norm() <= kDedupDistance) continue;
      const bool dup = std::any_of(seen.begin(), seen.end(),
                                   [&](const Octonion& o) { return distance(o, pr.lambda) < kDedupDistance; });
      if (dup) continue;
      seen.push_back(pr.lambda);
      found.push_back({{"lambda", to_json(pr.lambda)},
                       {"residual", pr.residual},
                       {"nullity", eigenspace_dim(a, pr.lambda, opts.nullity_tol)},
                       {"v", to_json(pr.v)}});
    }
    out["nonreal"] = std::move(found);
    out["search"] = {{"seeds", opts.seeds}, {"seed", opts.seed}};
  }
  return out;
}

std::string eigs_text(const Json& eigs) {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "tr=%.12g sigma=%.12g det=%.12g\n", eigs["trace"].get<double>(),
                eigs["sigma"].get<double>(), eigs["det"].get<double>());
  os << buf;
  for (const auto& f : eigs["families"]) {
    std::snprintf(buf, sizeof buf, "family r=%.12g:", f["r"].get<double>());
    os << buf;
    for (std::size_t k = 0; k < f["lambdas"].size(); ++k) {
      std::snprintf(buf, sizeof buf, " %.12g (nullity %d)", f["lambdas"][k].get<double>(),
                    f["nullities"][k].get<int>());
      os << buf;
    }
    os << "\n";
  }
  if (eigs.contains("nonreal")) {
    for (const auto& pr : eigs["nonreal"]) {
      Octonion l;
      for (int q = 0; q < 8; ++q) l[q] = pr["lambda"][q].get<double>();
      std::snprintf(buf, sizeof buf, "  (residual %.2e, nullity %d)\n", pr["residual"].get<double>(),
                    pr["nullity"].get<int>());
      os << "nonreal " << to_string(l, 10) << buf;
    }
  }
  return os.str();
}

Json cmd_nullity(const MatrixFile& file, const Octonion& lambda, double tol) {
  return {{"lambda", to_json(lambda)},
          {"nullity", eigenspace_dim(file.matrix, lambda, tol)},
          {"tolerance", tol},
          {"residual_operator_smallest_singular", smallest_singular(eigen_operator(file.matrix, lambda)).value}};
}

}  // namespace octeig::cli
