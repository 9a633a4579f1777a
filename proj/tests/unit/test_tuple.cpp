// Copyright 2026 The Aluthge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "aluthge/error.hpp"
#include "aluthge/models.hpp"
#include "aluthge/tuple.hpp"
#include "support/generators.hpp"

namespace aluthge {
namespace {

using testing::explicit_power_norm;
using testing::for_all;
using testing::max_abs;

TEST(Tuple, RejectsShapeMismatch) {
  EXPECT_THROW(CommutingTuple({}), Error);
  try {
    CommutingTuple({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShapeMismatch);
  }
  try {
    CommutingTuple({ComplexMatrix::Zero(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kShapeMismatch);
  }
}

TEST(Tuple, RejectsNonCommutingAndNamesPair) {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 0, 1, 0, 0;
  b << 0, 0, 1, 0;
  try {
    CommutingTuple({ComplexMatrix::Identity(2, 2), a, b});
    FAIL();
  } catch (const NotCommutingError& e) {
    EXPECT_EQ(e.first(), 1);
    EXPECT_EQ(e.second(), 2);
    EXPECT_GT(e.residual(), 0.1);
  }
}

TEST(Tuple, RejectsNonFinite) {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  a(0, 0) = INFINITY;
  try {
    CommutingTuple({a});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonFinite);
  }
}

TEST(Tuple, TwoNormIsSqrtOfGramNorm) {
  // Diagonal tuple: ||T||_2 = max_k sqrt(sum_i |t_i,k|^2).
  for_all(20, 21, [](Rng& rng, int) {
    const int n = rng.integer(1, 6), d = rng.integer(1, 4);
    const CommutingTuple t = testing::random_diagonal(rng, n, d);
    double oracle = 0.0;
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += std::norm(t[i](k, k));
      oracle = std::max(oracle, std::sqrt(s));
    }
    EXPECT_NEAR(tuple_two_norm(t), oracle, 1e-12 * (1 + oracle));
  });
}

TEST(Tuple, ShiftSubtractsScalars) {
  const CommutingTuple t({ComplexMatrix::Identity(2, 2), 2.0 * ComplexMatrix::Identity(2, 2)});
  const CommutingTuple s = shift(t, PointCd{Complex(1, 0), Complex(0, 1)});
  EXPECT_LT(max_abs(s[0]), 1e-15);
  EXPECT_EQ(s[1](0, 0), Complex(2, -1));
  EXPECT_EQ(s[1](0, 1), Complex(0, 0));
  EXPECT_THROW(shift(t, PointCd{Complex(1, 0)}), Error);
}

TEST(Tuple, PowerNormMatchesExplicitWords) {
  for_all(20, 22, [](Rng& rng, int) {
    const int n = rng.integer(2, 6), d = rng.integer(1, 3);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, d);
    for (int k = 1; k <= 4; ++k) {
      const double oracle = explicit_power_norm(t, k);
      EXPECT_NEAR(power_norm(t, k), oracle, 1e-9 * (1 + oracle)) << "k=" << k;
    }
  });
}

TEST(Tuple, PowerNormsSequenceAgreesWithSingle) {
  Rng rng(23);
  const CommutingTuple t = testing::random_polynomial_tuple(rng, 5, 2);
  const std::vector<double> all = power_norms(t, 6);
  ASSERT_EQ(all.size(), 6u);
  for (int k = 1; k <= 6; ++k) EXPECT_DOUBLE_EQ(all[k - 1], power_norm(t, k));
  EXPECT_EQ(power_norm(t, 0), 1.0);
  EXPECT_NEAR(all[0], tuple_two_norm(t), 1e-12 * all[0]);
  EXPECT_THROW(power_norm(t, -1), Error);
}

TEST(Tuple, ExplicitPowerTupleNormAgrees) {
  for_all(10, 24, [](Rng& rng, int) {
    const int n = rng.integer(2, 5), d = rng.integer(1, 3);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, d);
    for (int k = 1; k <= 3; ++k) {
      const CommutingTuple tk = explicit_power_tuple(t, k);
      EXPECT_EQ(tk.arity(), static_cast<int>(std::pow(d, k)));
      const double via_tuple = tuple_two_norm(tk);
      EXPECT_NEAR(via_tuple, power_norm(t, k), 1e-9 * (1 + via_tuple));
    }
  });
}

TEST(Tuple, ExplicitPowerOrderIsLexicographic) {
  ComplexMatrix a = ComplexMatrix::Identity(1, 1), b = ComplexMatrix::Identity(1, 1);
  a(0, 0) = 2.0;
  b(0, 0) = 3.0;
  const CommutingTuple t2 = explicit_power_tuple(CommutingTuple({a, b}), 2);
  ASSERT_EQ(t2.arity(), 4);
  EXPECT_EQ(t2[0](0, 0), Complex(4.0));
  EXPECT_EQ(t2[1](0, 0), Complex(6.0));
  EXPECT_EQ(t2[2](0, 0), Complex(6.0));
  EXPECT_EQ(t2[3](0, 0), Complex(9.0));
}

TEST(Tuple, ExplicitPowerGuard) {
  std::vector<ComplexMatrix> ms(4, ComplexMatrix::Identity(1, 1));
  const CommutingTuple t(ms);
  try {
    explicit_power_tuple(t, 7);  // 4^7 = 16384
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeGuard);
  }
  EXPECT_NO_THROW(explicit_power_tuple(t, 6));  // 4096
}

TEST(Tuple, NilpotentPowerNormVanishes) {
  const CommutingTuple t({unilateral_shift(3)});
  EXPECT_GT(power_norm(t, 2), 0.5);
  EXPECT_EQ(power_norm(t, 3), 0.0);
  EXPECT_EQ(power_norm(t, 5), 0.0);
}

TEST(Tuple, ElementaryApplyDefinition) {
  Rng rng(25);
  const CommutingTuple t = testing::random_polynomial_tuple(rng, 3, 2);
  const ComplexMatrix x = rng.complex_gaussian(3, 3);
  const ComplexMatrix oracle = t[0].adjoint() * x * t[0] + t[1].adjoint() * x * t[1];
  EXPECT_LT(max_abs(elementary_apply(t, x) - oracle), 1e-12 * (1 + max_abs(oracle)));
}

TEST(Tuple, CrissCrossHoldsForScalarMultiplesOfOneMatrix) {
  Rng rng(26);
  const ComplexMatrix m = rng.complex_gaussian(3, 3);
  const ComplexMatrix w = rng.complex_gaussian(3, 3);
  const std::vector<ComplexMatrix> a = {m, 2.0 * m, Complex(0, 1) * m};
  const std::vector<ComplexMatrix> b = {w, -w, 3.0 * w};
  EXPECT_LT(criss_cross_residual(a, b), 1e-12);
  const std::vector<ComplexMatrix> c = {m, w, m};
  EXPECT_GT(criss_cross_residual(c, c), 1e-3);
  EXPECT_THROW(criss_cross_residual(a, std::vector<ComplexMatrix>{m}), Error);
}

TEST(Tuple, CommutantProjectionRestoresCommutativity) {
  for_all(10, 27, [](Rng& rng, int) {
    const int n = rng.integer(3, 6);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, 2);
    std::vector<ComplexMatrix> noisy = t.matrices();
    for (ComplexMatrix& m : noisy) m += 1e-12 * rng.complex_gaussian(n, n);
    const CommutingTuple perturbed(noisy, 1e-6);
    const auto projected = commutant_projection(perturbed);
    ASSERT_TRUE(projected.has_value());
    EXPECT_LE(projected->commutator_residual(), perturbed.commutator_residual());
    EXPECT_LT(projected->commutator_residual(), 1e-13);
    for (int i = 0; i < 2; ++i) EXPECT_LT(max_abs((*projected)[i] - t[i]), 1e-10);
  });
}

TEST(Tuple, CommutantProjectionDeclinesDerogatory) {
  const CommutingTuple t({ComplexMatrix::Identity(3, 3), 2.0 * ComplexMatrix::Identity(3, 3)});
  EXPECT_FALSE(commutant_projection(t).has_value());
}

TEST(Tuple, PointDistance) {
  const PointCd a{Complex(3, 0), Complex(0, 4)};
  EXPECT_DOUBLE_EQ(a.norm2(), 5.0);
  EXPECT_DOUBLE_EQ(distance(a, PointCd::zero(2)), 5.0);
  EXPECT_DOUBLE_EQ((-a)[1].imag(), -4.0);
  EXPECT_THROW(distance(a, PointCd::zero(3)), Error);
}

}  // namespace
}  // namespace aluthge
