#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "octeig/examples.hpp"
#include "octeig/jordan.hpp"
#include "octeig/random.hpp"

using namespace octeig;
using namespace octeig::basis;

namespace {

double entry_dev(const JordanMatrix& x, const JordanMatrix& y) {
  const JordanMatrix d = x - y;
  return std::max({std::fabs(d.p), std::fabs(d.m), std::fabs(d.n), d.a.norm(), d.b.norm(), d.c.norm()});
}

/// Random matrix whose off-diagonal entries lie in span{1, i}: an ordinary
/// complex Hermitian matrix.
JordanMatrix complex_jordan(Rng& rng) {
  JordanMatrix a = JordanMatrix::diag(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  a.a = rng.uniform(-1, 1) + rng.uniform(-1, 1) * i;
  a.b = rng.uniform(-1, 1) + rng.uniform(-1, 1) * i;
  a.c = rng.uniform(-1, 1) + rng.uniform(-1, 1) * i;
  return a;
}

std::complex<double> cplx(const Octonion& o) { return {o[0], o[1]}; }

}  // namespace

TEST(Jordan, ToMatrixLayout) {
  JordanMatrix a = JordanMatrix::diag(1, 2, 3);
  a.a = i;
  a.b = j;
  a.c = l;
  const OctMatrix3 f = a.to_matrix();
  EXPECT_LE(distance(f(0, 1), i), 0.0);
  EXPECT_LE(distance(f(0, 2), -j), 0.0);
  EXPECT_LE(distance(f(1, 0), -i), 0.0);
  EXPECT_LE(distance(f(2, 0), j), 0.0);
  EXPECT_LE(distance(f(1, 2), l), 0.0);
  EXPECT_LE(distance(f(2, 1), -l), 0.0);
  EXPECT_LE(entry_dev(JordanMatrix::from_matrix(f), a), 0.0);
}

TEST(Jordan, ProductExamples) {
  Rng rng(1);
  const JordanMatrix a = rng.jordan();
  EXPECT_LE(entry_dev(jordan_product(a, JordanMatrix::identity()), a), 1e-15);
  EXPECT_LE(entry_dev(jordan_product(JordanMatrix::diag(1, 2, 3), JordanMatrix::diag(4, 5, 6)),
                      JordanMatrix::diag(4, 10, 18)),
            0.0);
  const Example1 ex = make_example1(0.0, 1.0, 0.0);
  EXPECT_NEAR(trace(power2(ex.matrix)), 6.0, 1e-14);
}

TEST(Jordan, ProductCommutes) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const JordanMatrix a = rng.jordan(), b = rng.jordan();
    EXPECT_EQ(entry_dev(jordan_product(a, b), jordan_product(b, a)), 0.0);
  }
}

TEST(Jordan, Powers) {
  const JordanMatrix d = JordanMatrix::diag(1, 2, 3);
  EXPECT_LE(entry_dev(power2(d), JordanMatrix::diag(1, 4, 9)), 0.0);
  EXPECT_LE(entry_dev(power3(d), JordanMatrix::diag(1, 8, 27)), 0.0);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const JordanMatrix a = rng.jordan();
    const double s = a.scale();
    EXPECT_LE(entry_dev(power3(a), power3_right(a)), 1e-12 * s * s * s);
  }
}

TEST(Jordan, TraceSigmaDetExamples) {
  const JordanMatrix d = JordanMatrix::diag(1, 2, 3);
  EXPECT_DOUBLE_EQ(trace(d), 6.0);
  EXPECT_DOUBLE_EQ(sigma(d), 11.0);
  EXPECT_DOUBLE_EQ(det(d), 6.0);
  const Example1 ex = make_example1(0.0, 1.0, 0.0);
  EXPECT_NEAR(det(ex.matrix), 2.0, 1e-14);
  EXPECT_NEAR(det_freudenthal(ex.matrix), 2.0, 1e-14);
  for (double theta : {0.0, 0.4, 2.0})
    for (double p : {0.0, 1.5}) {
      const Example1 e = make_example1(p, 0.7, theta);
      EXPECT_NEAR(sigma(e.matrix), 3 * p * p - 3 * 0.7 * 0.7, 1e-13);
      EXPECT_NEAR(sigma_closed_form(e.matrix), 3 * p * p - 3 * 0.7 * 0.7, 1e-13);
    }
}

TEST(Jordan, DetMatchesComplexDeterminant) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const JordanMatrix a = complex_jordan(rng);
    const OctMatrix3 f = a.to_matrix();
    std::complex<double> m[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] = cplx(f(r, c));
    const std::complex<double> ref = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_NEAR(det(a), ref.real(), 1e-13);
    EXPECT_NEAR(ref.imag(), 0.0, 1e-13);
  }
}

TEST(Jordan, SigmaAndDetFormsAgree) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const JordanMatrix a = rng.jordan(-2, 2);
    const double s = a.scale();
    EXPECT_LE(std::fabs(sigma(a) - sigma_closed_form(a)), 1e-12 * s * s);
    EXPECT_LE(std::fabs(det(a) - det_freudenthal(a)), 1e-12 * s * s * s);
  }
}

TEST(Jordan, DetIsCubic) {
  Rng rng(6);
  const JordanMatrix a = rng.jordan();
  EXPECT_NEAR(det(2.5 * a), 2.5 * 2.5 * 2.5 * det(a), 1e-12);
  EXPECT_NEAR(trace(a + a), 2 * trace(a), 1e-15);
}

TEST(Jordan, FreudenthalExamples) {
  const JordanMatrix d = JordanMatrix::diag(1, 2, 3);
  EXPECT_LE(entry_dev(freudenthal(d, d), JordanMatrix::diag(6, 3, 2)), 1e-15);
  EXPECT_LE(entry_dev(freudenthal(JordanMatrix::identity(), JordanMatrix::identity()), JordanMatrix::identity()), 0.0);
  Rng rng(7);
  const JordanMatrix a = rng.jordan(), b = rng.jordan();
  EXPECT_LE(entry_dev(freudenthal(a, b), freudenthal(b, a)), 1e-15);
}

TEST(Jordan, CharacteristicIdentity) {
  EXPECT_LE(entry_dev(char_residual(JordanMatrix::diag(1, 2, 3)), JordanMatrix()), 1e-13);
  const Example1 ex = make_example1(1.0, 1.0, std::numbers::pi / 3);
  EXPECT_LE(entry_dev(char_residual(ex.matrix), JordanMatrix()), 1e-10);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const JordanMatrix a = rng.jordan();
    const double s = std::max(1.0, a.norm());
    EXPECT_LE(entry_dev(char_residual(a), JordanMatrix()), 1e-10 * s * s * s);
  }
}

TEST(Jordan, MatvecExamples) {
  Rng rng(9);
  const OctVec3 v = rng.vec3();
  const OctVec3 w = matvec(JordanMatrix::identity(), v);
  EXPECT_LE((w - v).norm(), 0.0);
  const OctVec3 u = matvec(JordanMatrix::diag(2, 3, 4), v);
  EXPECT_LE((u - OctVec3{v.x * 2.0, v.y * 3.0, v.z * 4.0}).norm(), 1e-15);
  const Example1 ex = make_example1(2.0, 3.0, std::numbers::pi / 5);
  const ListedPair& up = find_pair(ex.pairs, "u+");
  EXPECT_LE((matvec(ex.matrix, up.v) - up.v * (2.0 + 3.0 * conj(ex.s))).norm(), 1e-13);
}

TEST(Jordan, OuterExamples) {
  const OctVec3 e1{one, Octonion(), Octonion()};
  const OctMatrix3 m = outer(e1, e1);
  EXPECT_LE(distance(m(0, 0), one), 0.0);
  EXPECT_EQ(m.norm(), 1.0);
  Rng rng(10);
  const OctVec3 v = rng.vec3();
  const OctMatrix3 o = outer(v, v);
  EXPECT_LE((o - o.conj_transpose()).norm(), 1e-15);
  EXPECT_LE((outer_scaled(v, one) - o).norm(), 1e-15);
}

TEST(Jordan, GenMatmul) {
  Rng rng(11);
  OctMatrix3 b;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) b(r, c) = rng.octonion();
  EXPECT_LE((gen_matmul(OctMatrix3::identity(), b) - b).norm(), 0.0);

  double best = 0.0;
  for (int t = 0; t < 20 && best <= 0.1; ++t) {
    OctMatrix3 x, y, z;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        x(r, c) = rng.unit_octonion();
        y(r, c) = rng.unit_octonion();
        z(r, c) = rng.unit_octonion();
      }
    best = std::max(best, (gen_matmul(gen_matmul(x, y), z) - gen_matmul(x, gen_matmul(y, z))).norm());
  }
  EXPECT_GT(best, 0.1);

  const Example1 ex = make_example1(0.3, 1.1, 0.9);
  const OctMatrix3 u = OctMatrix3::from_columns(find_pair(ex.pairs, "u+").v.normalized(),
                                                find_pair(ex.pairs, "v+").v.normalized(),
                                                find_pair(ex.pairs, "w+").v.normalized());
  EXPECT_LE((gen_matmul(u, u.conj_transpose()) - OctMatrix3::identity()).norm(), 1e-12);
}

TEST(Jordan, ScaleAndVectorHelpers) {
  JordanMatrix a = JordanMatrix::diag(0.1, -0.2, 0.3);
  EXPECT_EQ(a.scale(), 1.0);
  a.b = 3.0 * l;
  EXPECT_EQ(a.scale(), 3.0);
  const OctVec3 v{3.0 * one, Octonion(), 4.0 * i};
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_NEAR(v.normalized().norm(), 1.0, 1e-15);
  EXPECT_LE(distance(inner(v, v), Octonion(25.0)), 0.0);
}
