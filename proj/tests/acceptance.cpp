// Acceptance suite: one line per criterion, "criterion N: PASS|FAIL ...".
// Usage: acceptance [N]   (no argument runs all thirteen)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "octeig/cli/commands.hpp"
#include "octeig/cli/property_suite.hpp"
#include "octeig/error.hpp"
#include "octeig/examples.hpp"
#include "octeig/random.hpp"

using namespace octeig;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

EigenPair norm_pair(const JordanMatrix& a, const ListedPair& pr) { return make_pair(a, pr.v.normalized(), pr.lambda); }

struct Verified {
  JordanMatrix a;
  EigenPair pair;
};

std::vector<Verified> example1_pairs() {
  std::vector<Verified> out;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}})
    for (double th : {0.0, kPi / 5, kPi / 3}) {
      const Example1 ex = make_example1(p, q, th);
      for (const auto& pr : ex.pairs) out.push_back({ex.matrix, norm_pair(ex.matrix, pr)});
    }
  return out;
}

std::vector<Verified> example2_pairs() {
  std::vector<Verified> out;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.7}}) {
    const Example2 ex = make_example2(p, q);
    for (const auto& pr : ex.pairs) out.push_back({ex.matrix, norm_pair(ex.matrix, pr)});
  }
  return out;
}

Verified lform_pair() {
  const Example1 ex = make_example1(0.0, 1.0, 0.0);
  const double rho = std::sqrt(2.5);
  const Octonion seed = rho - lform_beta(rho, 1.0).first * basis::kl;
  return {ex.matrix, eigen_search(ex.matrix, seed)};
}

Verified example3_pair() {
  const Example3 ex = make_example3(0.4, 1.3);
  return {ex.matrix, norm_pair(ex.matrix, ex.pair)};
}

Outcome suite_outcome(const std::vector<std::string>& prefixes, std::size_t trials) {
  const auto results = cli::run_property_suite(trials, kSeed);
  bool ok = true;
  std::string d;
  for (const auto& r : results) {
    if (std::none_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) { return r.name == p; })) continue;
    ok = ok && r.passed();
    d += r.name + "=" + sci(r.max_deviation) + " ";
  }
  return {ok, d};
}

Outcome c1() {
  return suite_outcome({"octonion.inner_product_transfer", "octonion.inner_product_scaling",
                        "octonion.norm_multiplicative", "octonion.alternativity", "octonion.associator_identity"},
                       10000);
}

Outcome c2() {
  return suite_outcome({"jordan.power_associativity", "jordan.characteristic_identity", "jordan.sigma_forms",
                        "jordan.det_forms"},
                       10000);
}

Outcome c3() {
  double worst = 0.0;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}})
    for (double th : {0.0, kPi / 5, kPi / 3}) {
      const Example1 ex = make_example1(p, q, th);
      for (const auto& pr : ex.pairs) worst = std::max(worst, residual_norm(ex.matrix, pr.v, pr.lambda));
    }
  return {worst <= 1e-12, "max residual " + sci(worst) + " over 36 pairs"};
}

Outcome c4() {
  bool ok = true;
  std::string d;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{1.0, 2.0}})
    for (double th : {kPi / 5, kPi / 3}) {
      const Example1 ex = make_example1(p, q, th);
      const auto nw = eigenspace_dim(ex.matrix, find_pair(ex.pairs, "w+").lambda);
      const auto nu = eigenspace_dim(ex.matrix, find_pair(ex.pairs, "u+").lambda);
      ok = ok && nw == 1 && nu == 5;
      d += "(" + std::to_string(nw) + "," + std::to_string(nu) + ") ";
    }
  return {ok, "nullity (w, u) " + d};
}

Outcome c5() {
  double worst = 0.0;
  for (double th : {0.0, kPi / 5, kPi / 3}) {
    const Example1 ex = make_example1(1.0, 2.0, th);
    for (int f = 0; f < 2; ++f) {
      const std::array<EigenPair, 3> t = {norm_pair(ex.matrix, ex.pairs[3 * f]), norm_pair(ex.matrix, ex.pairs[3 * f + 1]),
                                          norm_pair(ex.matrix, ex.pairs[3 * f + 2])};
      const DecompositionDeviation d = decomposition_checks(ex.matrix, t);
      worst = std::max({worst, d.hermitian_sum, d.weighted_sum, d.unitarity, d.associativity});
    }
  }
  return {worst <= 1e-10, "max deviation " + sci(worst) + " for +++ and ---"};
}

Outcome c6() {
  bool zero = true;
  for (double q : {1.0, 1.7})
    for (double rho : {q, -q, 2 * q, -2 * q}) {
      const auto [b1, b2] = lform_beta(rho, q);
      zero = zero && b1 == 0.0 && b2 == 0.0;
    }
  const Verified v = lform_pair();
  const double rho = std::sqrt(2.5);
  const auto dim = eigenspace_dim(v.a, rho - lform_beta(rho, 1.0).first * basis::kl);
  return {zero && v.pair.residual <= 1e-8 && dim == 3,
          std::string("boundary beta zero: ") + (zero ? "yes" : "no") + ", search residual " + sci(v.pair.residual) +
              ", dim " + std::to_string(dim)};
}

Outcome c7() {
  double worst = 0.0, six = 0.0, vu = 0.0, vw = 0.0, uw = INFINITY;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.7}}) {
    const Example2 ex = make_example2(p, q);
    std::vector<OctVec3> vs;
    for (const auto& pr : ex.pairs) {
      worst = std::max(worst, residual_norm(ex.matrix, pr.v, pr.lambda));
      vs.push_back(pr.v.normalized());
    }
    six = std::max(six, (six_square_sum(vs) - 2.0 * OctMatrix3::identity()).norm());
    const OctVec3 u1 = find_pair(ex.pairs, "u1").v, v1 = find_pair(ex.pairs, "v1").v, w1 = find_pair(ex.pairs, "w1").v;
    vu = std::max(vu, ortho_check(v1, u1));
    vw = std::max(vw, ortho_check(v1, w1));
    uw = std::min(uw, ortho_check(u1, w1));
  }
  return {worst <= 1e-10 && six <= 1e-10 && vu <= 1e-10 && vw <= 1e-10 && uw >= 0.05,
          "residual " + sci(worst) + ", six-square " + sci(six) + ", (v1,u1) " + sci(vu) + ", (v1,w1) " + sci(vw) +
              ", (u1,w1) " + sci(uw)};
}

Outcome c8() {
  const Example2 ex = make_example2(0.0, 1.0);
  std::vector<Eigenspace> spaces;
  for (const auto& pr : ex.pairs)
    if (pr.label != "w1") spaces.push_back(eigenspace(ex.matrix, pr.lambda, pr.label));
  for (const auto& fam : real_eigen_families(ex.matrix))
    for (double l : fam.lambdas) spaces.push_back(eigenspace(ex.matrix, l, "real"));
  const TripleSearchResult r = orthogonal_triple_search(ex.matrix, norm_pair(ex.matrix, find_pair(ex.pairs, "w1")),
                                                        spaces, cli::kTripleRestarts, kSeed);
  return {r.restarts >= 200 && r.best_residual > 0.01,
          "best residual " + sci(r.best_residual) + " after " + std::to_string(r.restarts) + " restarts"};
}

Outcome c9() {
  double worst = 0.0;
  for (auto [p, q] : {std::pair{0.0, 1.0}, std::pair{0.4, 1.3}}) {
    const Example3 ex = make_example3(p, q);
    worst = std::max(worst, residual_norm(ex.matrix, ex.pair.v, ex.pair.lambda));
  }
  const Example3 ex = make_example3(0.4, 1.3);
  const Octonion a = associator(ex.matrix.a, ex.matrix.b, ex.matrix.c) / (1.3 * 1.3 * 1.3);
  const Octonion target = 2.0 * (basis::l - basis::k);
  const double plus = distance(a, target), minus = distance(a, -1.0 * target);
  const double dev = std::min(plus, minus);
  return {worst <= 1e-12 && dev <= 1e-12, "residual " + sci(worst) + ", associator sign " +
                                              (plus <= minus ? "+1" : "-1") + " deviation " + sci(dev)};
}

Outcome c10() {
  Rng rng(kSeed, 10);
  std::size_t max_count = 0, min_null = 24;
  double vieta = 0.0;
  try {
    for (int t = 0; t < 100; ++t) {
      const JordanMatrix a = rng.jordan();
      const RealMatrix op = rhs_multiplier_operator(a);
      max_count = std::max(max_count, real_eigenvalues(op, 1e-7 * std::max(1.0, op.frobenius())).size());
      for (const auto& fam : real_eigen_families(a)) {
        double sum = 0.0;
        for (double l : fam.lambdas) {
          sum += l;
          min_null = std::min(min_null, eigenspace_dim(a, l));
        }
        if (fam.lambdas.size() != 3) min_null = 0;
        vieta = std::max(vieta, std::fabs(sum - trace(a)));
      }
    }
  } catch (const Error& e) {
    return {false, std::string("solver error: ") + e.what()};
  }
  return {max_count <= 2 && min_null >= 1 && vieta <= 1e-9,
          "max multipliers " + std::to_string(max_count) + ", min nullity " + std::to_string(min_null) +
              ", max |sum - tr| " + sci(vieta)};
}

Outcome c11() {
  std::vector<Verified> all = example1_pairs();
  for (const auto& v : example2_pairs()) all.push_back(v);
  all.push_back(lform_pair());
  all.push_back(example3_pair());
  double sand = 0.0, imf = 0.0, ref = 0.0, chr = 0.0;
  for (const auto& [a, pr] : all) {
    sand = std::max(sand, (hermitian_sandwich(a, pr.v) + 2.0 * im(pr.lambda)).norm());
    imf = std::max(imf, (im_lambda_formula(a, pr.v) - im(pr.lambda)).norm());
    for (const auto& r : re_lambda_formulas(a, pr.v))
      if (r) ref = std::max(ref, std::fabs(*r - re(pr.lambda)));
    const CharSides s = char3_sides(a, pr.v, pr.lambda);
    chr = std::max(chr, distance(s.lhs, s.rhs) / a.scale());
  }
  return {sand <= 1e-8 && imf <= 1e-8 && ref <= 1e-8 && chr <= 1e-8,
          std::to_string(all.size()) + " pairs: sandwich " + sci(sand) + ", Im " + sci(imf) + ", Re " + sci(ref) +
              ", characteristic " + sci(chr)};
}

Outcome c12() { return suite_outcome({"eigen.vector_associator_identity", "eigen.rank_one_identity"}, 10000); }

Outcome c13() {
  const cli::Report rep = cli::cmd_verify_paper(kSeed);
  std::vector<std::string> disc;
  for (const auto& c : rep.sorted())
    if (c.status == cli::Status::discrepancy) disc.push_back(c.name);
  const cli::Check* closed = rep.find("closed_form.denominator_sign");
  const cli::Check* real = rep.find("example2.real_eigenvalues");
  const bool ok = disc.size() == 2 && closed && closed->status == cli::Status::discrepancy && real &&
                  real->status == cli::Status::discrepancy && !real->measured.empty();
  std::string d = std::to_string(disc.size()) + " discrepancy entries [";
  for (const auto& n : disc) d += n + " ";
  d += "]";
  if (closed) d += "; closed-form denominator check: " + std::string(cli::to_string(closed->status)) + " (" + closed->note + ")";
  return {ok, d};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"algebra identities over 1e4 unit-octonion tuples", c1},
    {"Jordan identities over 1e3 random matrices", c2},
    {"Example 1 listed eigenpairs", c3},
    {"Example 1 eigenspace dimensions", c4},
    {"Example 1 decompositions", c5},
    {"beta family boundaries, search and dimension", c6},
    {"Example 2 eigenpairs, six-square sum and orthogonality", c7},
    {"Example 2 orthogonal-triple search", c8},
    {"Example 3 eigenpair and associator", c9},
    {"real-eigenvalue solver on 100 random matrices", c10},
    {"eigenpair identities on all verified pairs", c11},
    {"vector associator and rank-one identities", c12},
    {"discrepancy reporting", c13},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::fprintf(stderr, "usage: acceptance [1-%zu]\n", kCriteria.size());
    return 2;
  }
  bool all_ok = true;
  for (std::size_t k = 0; k < kCriteria.size(); ++k) {
    if (only != 0 && static_cast<int>(k) + 1 != only) continue;
    Outcome o;
    try {
      o = kCriteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2zu: %s  %s  [%s]\n", k + 1, o.pass ? "PASS" : "FAIL", kCriteria[k].first.c_str(),
                o.detail.c_str());
    all_ok = all_ok && o.pass;
  }
  return all_ok ? 0 : 1;
}
