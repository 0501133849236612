#include "octeig/examples.hpp"

#include <cmath>
#include <stdexcept>

namespace octeig {

using namespace basis;

Example1 make_example1(double p, double q, double theta, const MultiplicationTable& t) {
  Example1 ex;
  ex.p = p;
  ex.q = q;
  ex.theta = theta;
  ex.s = std::cos(theta) * one + std::sin(theta) * kl;
  ex.matrix.p = ex.matrix.m = ex.matrix.n = p;
  ex.matrix.a = q * i;
  ex.matrix.b = -q * t.multiply(k, ex.s);
  ex.matrix.c = q * j;

  const Octonion ks = t.multiply(k, ex.s);
  const Octonion sbar = conj(ex.s);
  const std::array<Octonion, 2> right = {-kl, one};
  const std::array<const char*, 2> tag = {"+", "-"};
  for (int f = 0; f < 2; ++f) {
    const Octonion& r = right[f];
    const double sign = f == 0 ? 1.0 : -1.0;
    const Octonion lu = p + sign * q * sbar;
    const Octonion lw = p - sign * 2.0 * q * sbar;
    auto m = [&](const Octonion& x) { return t.multiply(x, r); };
    ex.pairs[3 * f] = {std::string("u") + tag[f], lu, {m(i), Octonion(), m(j)}};
    ex.pairs[3 * f + 1] = {std::string("v") + tag[f], lu, {m(j), m(2.0 * ks), m(i)}};
    ex.pairs[3 * f + 2] = {std::string("w") + tag[f], lw, {m(j), m(-ks), m(i)}};
  }
  return ex;
}

Example2 make_example2(double p, double q, const MultiplicationTable& t) {
  const double r5 = std::sqrt(5.0);
  const double r3 = std::sqrt(3.0);
  Example2 ex;
  ex.p = p;
  ex.q = q;
  ex.s = (r5 / 3.0) * one - (2.0 / 3.0) * kl;
  ex.matrix.p = ex.matrix.m = ex.matrix.n = p;
  ex.matrix.a = q * i;
  ex.matrix.b = -(q / 2.0) * t.multiply(k, ex.s);
  ex.matrix.c = (q / 2.0) * j;

  const Octonion x1 = 3.0 * k, y1 = r5 * j - 2.0 * il;
  const Octonion x2 = r5 * k + 2.0 * l, y2 = 3.0 * j;
  ex.pairs[0] = {"u1", (p + r5 / 2.0 * q) - (q / 2.0) * kl, {x1, y1, one + r5 * kl}};
  ex.pairs[1] = {"u2", (p + r5 / 2.0 * q) + (q / 2.0) * kl, {x2, y2, r5 * one - kl}};
  ex.pairs[2] = {"v1", (p - r5 / 3.0 * q) + (2.0 * q / 3.0) * kl, {y1, x1, Octonion()}};
  ex.pairs[3] = {"v2", (p - r5 / 3.0 * q) - (2.0 * q / 3.0) * kl, {y2, x2, Octonion()}};
  ex.pairs[4] = {"w1", (p - r5 / 6.0 * q) - (q / 6.0) * kl, {x1, y1, -7.0 * one - r5 * kl}};
  ex.pairs[5] = {"w2", (p - r5 / 6.0 * q) + (q / 6.0) * kl,
                 {x2, y2, -3.0 * r5 * one - 3.0 * kl}};

  ex.printed_real[0] = {p + q, p - (q / 2.0) * (1.0 + r3), p - (q / 2.0) * (1.0 - r3 / 2.0)};
  ex.printed_real[1] = {p - q, p + (q / 2.0) * (1.0 + r3), p + (q / 2.0) * (1.0 - r3 / 2.0)};
  return ex;
}

Example3 make_example3(double p, double q, const MultiplicationTable& t) {
  Example3 ex;
  ex.p = p;
  ex.q = q;
  ex.a_unit = i;
  ex.b_unit = j - il - jl;
  ex.c_unit = one + k + l;
  ex.matrix.p = ex.matrix.m = ex.matrix.n = p;
  ex.matrix.a = q * ex.a_unit;
  ex.matrix.b = q * ex.b_unit;
  ex.matrix.c = q * ex.c_unit;
  ex.pair = {"v", p + q * t.multiply(l, k), {j, l, Octonion()}};
  return ex;
}

const ListedPair& find_pair(const std::array<ListedPair, 6>& pairs, const std::string& label) {
  for (const auto& pr : pairs)
    if (pr.label == label) return pr;
  throw std::out_of_range("no listed pair named " + label);
}

}  // namespace octeig
