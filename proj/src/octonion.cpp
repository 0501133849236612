#include "octeig/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace octeig {
namespace {

using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat qadd(const Quat& a, const Quat& b, double sb = 1.0) {
  return {a[0] + sb * b[0], a[1] + sb * b[1], a[2] + sb * b[2], a[3] + sb * b[3]};
}

// Octonion x = A + B l, with B = b0 + b1 i + b2 j + b3 k and
// B l = b0 l + b1 il + b2 jl + b3 kl.
void split(const std::array<double, 8>& x, Quat& a, Quat& b) {
  a = {x[0], x[1], x[2], x[3]};
  b = {x[7], x[6], x[5], x[4]};
}

std::array<double, 8> join(const Quat& a, const Quat& b) {
  return {a[0], a[1], a[2], a[3], b[3], b[2], b[1], b[0]};
}

std::array<double, 8> doubling_product(const std::array<double, 8>& x,
                                       const std::array<double, 8>& y) {
  Quat a, b, c, d;
  split(x, a, b);
  split(y, c, d);
  return join(qadd(qmul(a, c), qmul(qconj(d), b), -1.0),
              qadd(qmul(d, a), qmul(b, qconj(c))));
}

OrientedLine canonical(OrientedLine line) {
  auto& u = line.units;
  while (u[0] > u[1] || u[0] > u[2]) std::rotate(u.begin(), u.begin() + 1, u.end());
  return line;
}

}  // namespace

double Octonion::norm() const { return std::sqrt(norm2()); }

bool Octonion::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

MultiplicationTable MultiplicationTable::cayley_dickson() {
  MultiplicationTable t;
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      std::array<double, 8> ep{}, eq{};
      ep[p] = 1.0;
      eq[q] = 1.0;
      const auto prod = doubling_product(ep, eq);
      for (int r = 0; r < 8; ++r) {
        if (prod[r] != 0.0) {
          t.index_[p][q] = r;
          t.sign_[p][q] = prod[r] > 0 ? 1 : -1;
        }
      }
    }
  }
  std::vector<OrientedLine> found;
  for (int p = 1; p < 8; ++p) {
    for (int q = p + 1; q < 8; ++q) {
      const int r = t.index_[p][q];
      OrientedLine line = t.sign_[p][q] > 0 ? OrientedLine{{p, q, r}}
                                            : OrientedLine{{q, p, r}};
      line = canonical(line);
      if (std::find(found.begin(), found.end(), line) == found.end())
        found.push_back(line);
    }
  }
  if (found.size() != 7)
    throw std::logic_error("doubling table does not form a Fano plane");
  std::sort(found.begin(), found.end(), [](const OrientedLine& a, const OrientedLine& b) {
    return a.units < b.units;
  });
  std::copy(found.begin(), found.end(), t.lines_.begin());
  t.pack();
  return t;
}

MultiplicationTable MultiplicationTable::from_lines(
    const std::array<OrientedLine, 7>& lines) {
  MultiplicationTable t;
  std::array<std::array<int, 8>, 8> seen{};
  for (int q = 0; q < 8; ++q) {
    t.index_[0][q] = q;
    t.sign_[0][q] = 1;
    t.index_[q][0] = q;
    t.sign_[q][0] = 1;
  }
  for (int q = 1; q < 8; ++q) {
    t.index_[q][q] = 0;
    t.sign_[q][q] = -1;
  }
  for (const auto& line : lines) {
    const auto& u = line.units;
    for (int s = 0; s < 3; ++s) {
      const int a = u[s], b = u[(s + 1) % 3], c = u[(s + 2) % 3];
      if (a < 1 || a > 7 || a == b)
        throw std::invalid_argument("Fano line must hold three distinct imaginary units");
      t.index_[a][b] = c;
      t.sign_[a][b] = 1;
      t.index_[b][a] = c;
      t.sign_[b][a] = -1;
      ++seen[std::min(a, b)][std::max(a, b)];
    }
  }
  for (int p = 1; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q)
      if (seen[p][q] != 1)
        throw std::invalid_argument("every pair of imaginary units must lie on exactly one line");
  t.lines_ = lines;
  t.pack();
  return t;
}

MultiplicationTable MultiplicationTable::with_reversed_lines(unsigned mask) const {
  auto lines = lines_;
  for (int n = 0; n < 7; ++n)
    if (mask & (1u << n)) std::swap(lines[n].units[0], lines[n].units[1]);
  return from_lines(lines);
}

void MultiplicationTable::pack() {
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      const int r = index_[p][q];
      packed_.src[p][r] = q;
      packed_.coef[p][r] = sign_[p][q];
    }
  }
}

Octonion MultiplicationTable::multiply(const Octonion& a, const Octonion& b) const {
  return multiply(a, b, kernels::active_kernels());
}

Octonion MultiplicationTable::multiply(const Octonion& a, const Octonion& b,
                                       const kernels::KernelSet& ks) const {
  Octonion out;
  ks.oct_mul(a.data(), b.data(), out.data(), packed_);
  return out;
}

std::string MultiplicationTable::describe() const {
  std::string s;
  for (const auto& line : lines_) {
    if (!s.empty()) s += ' ';
    s += '(';
    for (int n = 0; n < 3; ++n) {
      if (n) s += ',';
      s += kUnitNames[line.units[n]];
    }
    s += ')';
  }
  return s;
}

const MultiplicationTable& default_table() {
  static const MultiplicationTable table = MultiplicationTable::cayley_dickson();
  return table;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  static const kernels::KernelSet& ks = kernels::active_kernels();
  static const kernels::PackedTable& packed = default_table().packed();
  Octonion out;
  ks.oct_mul(a.data(), b.data(), out.data(), packed);
  return out;
}

double dot(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (int q = 0; q < 8; ++q) s += a[q] * b[q];
  return s;
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

Octonion pow(const Octonion& a, int n) {
  if (n < 0) throw std::invalid_argument("negative octonion power");
  Octonion r(1.0);
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

double distance(const Octonion& a, const Octonion& b) { return (a - b).norm(); }

bool approx_equal(const Octonion& a, const Octonion& b, double abs_tol, double rel_tol) {
  return distance(a, b) <= abs_tol + rel_tol * std::max(a.norm(), b.norm());
}

std::string to_string(const Octonion& a, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (int q = 0; q < 8; ++q) {
    const double v = a[q];
    if (v == 0.0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << '-';
    const double mag = std::fabs(v);
    if (q == 0) os << mag;
    else if (mag == 1.0) os << kUnitNames[q];
    else os << mag << kUnitNames[q];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Octonion& a) { return os << to_string(a); }

}  // namespace octeig
