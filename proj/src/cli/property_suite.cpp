#include "octeig/cli/property_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "octeig/eigen.hpp"
#include "octeig/random.hpp"

namespace octeig::cli {

namespace {

struct Tracker {
  std::string name;
  double tol;
  double worst = 0.0;
  std::size_t n = 0;
  void add(double dev) {
    // NaN must register as a failure.
    if (!(dev <= worst)) worst = std::isnan(dev) ? INFINITY : dev;
    ++n;
  }
  PropertyResult result() const { return {name, worst, tol, n}; }
};

double max_entry_dev(const JordanMatrix& d) {
  double m = std::max({std::fabs(d.p), std::fabs(d.m), std::fabs(d.n)});
  return std::max({m, d.a.norm(), d.b.norm(), d.c.norm()});
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::size_t trials, std::uint64_t seed) {
  trials = std::max<std::size_t>(trials, 1);
  const std::size_t small = std::max<std::size_t>(trials / 10, 1);

  Tracker transfer{"octonion.inner_product_transfer", 1e-12};
  Tracker scaling{"octonion.inner_product_scaling", 1e-12};
  Tracker norm_mult{"octonion.norm_multiplicative", 1e-12};
  Tracker alternative{"octonion.alternativity", 1e-12};
  Tracker assoc_id{"octonion.associator_identity", 1e-12};
  Tracker anti{"octonion.conjugation_antiautomorphism", 1e-12};
  Tracker antisym{"octonion.associator_antisymmetry", 1e-12};

  Rng rng(seed, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const Octonion a = rng.unit_octonion(), b = rng.unit_octonion();
    const Octonion c = rng.unit_octonion(), d = rng.unit_octonion();
    const Octonion x = rng.unit_octonion();

    transfer.add(std::fabs(dot(a, x * b) - dot(b, conj(x) * a)));
    scaling.add(std::fabs(dot(a * x, b * x) - x.norm2() * dot(a, b)));
    norm_mult.add(std::fabs((a * b).norm() - a.norm() * b.norm()));
    alternative.add(std::max(associator(b, a, a).norm(), associator(b, a, conj(a)).norm()));
    const Octonion lhs = associator(a, b, c) * d + a * associator(b, c, d);
    const Octonion rhs = associator(a * b, c, d) - associator(a, b * c, d) + associator(a, b, c * d);
    assoc_id.add((lhs - rhs).norm());
    anti.add((conj(a * b) - conj(b) * conj(a)).norm());
    const Octonion abc = associator(a, b, c);
    double dev = std::fabs(abc.re());
    for (const Octonion& perm : {associator(b, c, a), associator(c, a, b)}) dev = std::max(dev, (perm - abc).norm());
    for (const Octonion& perm : {associator(b, a, c), associator(a, c, b), associator(c, b, a)})
      dev = std::max(dev, (perm + abc).norm());
    antisym.add(dev);
  }

  Tracker power{"jordan.power_associativity", 1e-10};
  Tracker charid{"jordan.characteristic_identity", 1e-10};
  Tracker sig{"jordan.sigma_forms", 1e-12};
  Tracker dets{"jordan.det_forms", 1e-12};
  Rng jr(seed, 1);
  for (std::size_t t = 0; t < small; ++t) {
    const JordanMatrix a = jr.jordan();
    const double s = a.scale();
    const double s3 = s * s * s;
    power.add(max_entry_dev(power3(a) - power3_right(a)) / s3);
    charid.add(max_entry_dev(char_residual(a)) / s3);
    sig.add(std::fabs(sigma(a) - sigma_closed_form(a)) / (s * s));
    dets.add(std::fabs(det(a) - det_freudenthal(a)) / s3);
  }

  Tracker assoc35{"eigen.vector_associator_identity", 1e-12};
  Tracker rank1{"eigen.rank_one_identity", 1e-12};
  Rng er(seed, 2);
  for (std::size_t t = 0; t < small; ++t) {
    const OctVec3 v = er.vec3();
    const Octonion lambda = er.octonion();
    const double lscale = std::max(1.0, lambda.norm());
    assoc35.add(identity_checks(v, lambda).associator / (lscale * std::max(1.0, v.norm2())));
    rank1.add(identity_checks(v.normalized(), lambda).rank_one / lscale);
  }

  std::vector<PropertyResult> out;
  for (const Tracker* tr : {&transfer, &scaling, &norm_mult, &alternative, &assoc_id, &anti, &antisym, &power,
                            &charid, &sig, &dets, &assoc35, &rank1})
    out.push_back(tr->result());
  return out;
}

Json to_json(const std::vector<PropertyResult>& results) {
  Json arr = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    arr.push_back({{"name", r.name},
                   {"max_deviation", r.max_deviation},
                   {"tolerance", r.tolerance},
                   {"samples", r.samples},
                   {"status", r.passed() ? "pass" : "fail"}});
    ok = ok && r.passed();
  }
  return {{"status", ok ? "pass" : "fail"}, {"identities", std::move(arr)}};
}

std::string to_text(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-4s %-40s max=%.3e tol=%.0e n=%zu\n", r.passed() ? "pass" : "fail",
                  r.name.c_str(), r.max_deviation, r.tolerance, r.samples);
    os << buf;
  }
  return os.str();
}

}  // namespace octeig::cli
