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
#include "aluthge/polar.hpp"
#include "support/generators.hpp"

namespace aluthge {
namespace {

using testing::for_all;
using testing::max_abs;

TEST(Polar, Ex41FactorsMatchClosedForm) {
  const Ex41Matrix ex = ex41_matrix(2.0);
  const SphericalPolar polar = spherical_polar(ex.tuple);
  EXPECT_EQ(polar.rank_p, 2);
  EXPECT_LT(max_abs(polar.p - ex.p), 1e-12);
  EXPECT_LT(max_abs(polar.v[0] - ex.v), 1e-12);
}

TEST(Polar, PIsSquareRootOfGram) {
  // Independent route: P from the Hermitian square root of sum T_i^* T_i.
  for_all(20, 31, [](Rng& rng, int) {
    const int n = rng.integer(2, 7), d = rng.integer(1, 3);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, d);
    const SphericalPolar polar = spherical_polar(t);
    const ComplexMatrix oracle = psd_power(t.gram(), 0.5);
    EXPECT_LT(max_abs(polar.p - oracle), 1e-9 * (1 + max_abs(oracle)));
  });
}

TEST(Polar, InvariantsOnRandomTuples) {
  for_all(20, 32, [](Rng& rng, int) {
    const int n = rng.integer(2, 7), d = rng.integer(1, 3);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, d);
    const SphericalPolar polar = spherical_polar(t);
    const PolarResiduals r = polar_residuals(t, polar);
    EXPECT_LT(r.reconstruction, 1e-10);
    EXPECT_LT(r.projection, 1e-9);
    EXPECT_LT(r.kernel, 1e-9);
    EXPECT_LT(r.intertwining, 1e-9);
  });
}

TEST(Polar, RankDeficientKernelIsAnnihilated) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3), b = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 2.0;
  b(0, 0) = -1.0;
  const CommutingTuple t({a, b});
  const SphericalPolar polar = spherical_polar(t);
  EXPECT_EQ(polar.rank_p, 2);
  ComplexVector e2 = ComplexVector::Zero(3);
  e2(2) = 1.0;
  for (const ComplexMatrix& v : polar.v) EXPECT_LT((v * e2).norm(), 1e-14);
  EXPECT_NEAR(polar.p(0, 0).real(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(polar.p(1, 1).real(), 2.0, 1e-14);
  EXPECT_EQ(polar.power(0.0)(2, 2), Complex(1.0));  // 0^0 = 1
  EXPECT_LT(max_abs(polar.range_projection() - ComplexMatrix(ComplexVector(ComplexVector::Ones(3) - e2).asDiagonal())), 1e-14);
}

TEST(Polar, ZeroTuple) {
  const CommutingTuple t({ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2)});
  const SphericalPolar polar = spherical_polar(t);
  EXPECT_EQ(polar.rank_p, 0);
  const CommutingTuple delta = aluthge(t, 0.5);
  EXPECT_EQ(max_abs(delta[0]), 0.0);
}

TEST(Polar, TransformAtZeroIsIdentityMap) {
  for_all(10, 33, [](Rng& rng, int) {
    const CommutingTuple t = testing::random_polynomial_tuple(rng, rng.integer(2, 6), 2);
    const CommutingTuple d0 = aluthge(t, 0.0);
    for (int i = 0; i < t.arity(); ++i) EXPECT_LT(max_abs(d0[i] - t[i]), 1e-10 * (1 + max_abs(t[i])));
  });
}

TEST(Polar, TransformMatchesDirectFormula) {
  // Dual route: P^t V_i P^{1-t} with P from psd_power and V_i = T_i P^+.
  for_all(10, 34, [](Rng& rng, int) {
    const int n = rng.integer(2, 6);
    const CommutingTuple t = testing::random_polynomial_tuple(rng, n, 2);
    const double s = rng.uniform(0.1, 1.0);
    const ComplexMatrix p = psd_power(t.gram(), 0.5);
    const ComplexMatrix pp = pinv(p);
    const CommutingTuple delta = aluthge(t, s);
    for (int i = 0; i < 2; ++i) {
      const ComplexMatrix oracle = psd_power(p, s) * (t[i] * pp) * psd_power(p, 1 - s);
      EXPECT_LT(max_abs(delta[i] - oracle), 1e-8 * (1 + max_abs(oracle)));
    }
  });
}

TEST(Polar, TransformDoesNotIncreaseNormAndCommutes) {
  for_all(20, 35, [](Rng& rng, int) {
    const CommutingTuple t = testing::random_polynomial_tuple(rng, rng.integer(2, 7), rng.integer(1, 3));
    const double s = rng.uniform(0.05, 1.0);
    const CommutingTuple delta = aluthge(t, s);
    EXPECT_LE(tuple_two_norm(delta), tuple_two_norm(t) * (1 + 1e-10));
    EXPECT_LT(delta.commutator_residual(), kTransformCommuteTol);
  });
}

TEST(Polar, QuasinormalIsFixedPoint) {
  for_all(10, 36, [](Rng& rng, int) {
    const CommutingTuple t = testing::random_normal_scaled(rng, rng.integer(2, 6), rng.integer(1, 3));
    EXPECT_TRUE(is_spherically_quasinormal(t).quasinormal);
    const CommutingTuple delta = aluthge(t, rng.uniform(0.1, 1.0));
    for (int i = 0; i < t.arity(); ++i) EXPECT_LT(max_abs(delta[i] - t[i]), 1e-10);
  });
  EXPECT_FALSE(is_spherically_quasinormal(ex41_matrix(2.0).tuple).quasinormal);
}

TEST(Polar, Ex41DuggalAlternates) {
  const Ex41Matrix ex = ex41_matrix(3.0);
  const CommutingTuple d1 = aluthge(ex.tuple, 1.0);
  EXPECT_LT(max_abs(d1[0] - ex.duggal), 1e-12);
  const CommutingTuple d2 = aluthge(d1, 1.0);
  EXPECT_LT(max_abs(d2[0] - ex.t), 1e-12);
}

TEST(Polar, RejectsExponentOutsideUnitInterval) {
  const CommutingTuple t({ComplexMatrix::Identity(2, 2)});
  for (double bad : {-0.1, 1.5, std::nan("")}) {
    try {
      aluthge(t, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
  }
}

TEST(Polar, IterateStopsOnStall) {
  Rng rng(37);
  const CommutingTuple t = testing::random_polynomial_tuple(rng, 4, 2);
  IterateOptions opts;
  opts.stop_tol = 1e-9;
  const IterateTrace trace = iterate(t, 0.5, opts);
  ASSERT_TRUE(trace.converged);
  EXPECT_LE(trace.entries.back().delta, 1e-9);
  for (std::size_t i = 0; i + 1 < trace.entries.size(); ++i) {
    EXPECT_GT(trace.entries[i].delta, 1e-9);
    EXPECT_LE(trace.entries[i + 1].norm2, trace.entries[i].norm2 * (1 + 1e-12));
  }
  EXPECT_EQ(trace.limit_estimate, trace.entries.back().norm2);
}

TEST(Polar, IterateWithoutStallRunsFullBudget) {
  const Ex41Matrix ex = ex41_matrix(2.0);
  IterateOptions opts;
  opts.max_iter = 6;
  opts.stop_on_stall = false;
  const IterateTrace trace = iterate(ex.tuple, 1.0, opts);
  EXPECT_EQ(trace.entries.size(), 6u);
  EXPECT_TRUE(trace.period_two);
  for (const IterateEntry& e : trace.entries) EXPECT_NEAR(e.norm2, 3.0, 1e-10);
}

TEST(Polar, IterateValidatesOptions) {
  const CommutingTuple t({ComplexMatrix::Identity(2, 2)});
  IterateOptions opts;
  opts.max_iter = 0;
  EXPECT_THROW(iterate(t, 0.5, opts), Error);
  opts.max_iter = 5;
  opts.stop_tol = 0.0;
  EXPECT_THROW(iterate(t, 0.5, opts), Error);
}

TEST(Polar, AluthgePowerComposes) {
  Rng rng(38);
  const CommutingTuple t = testing::random_polynomial_tuple(rng, 4, 2);
  const CommutingTuple two = aluthge_power(t, 0.5, 2);
  const CommutingTuple manual = aluthge(aluthge(t, 0.5), 0.5);
  for (int i = 0; i < 2; ++i) EXPECT_LT(max_abs(two[i] - manual[i]), 1e-9);
}

TEST(Polar, IterationErrorCarriesPartialTrace) {
  IterateTrace partial;
  partial.entries.resize(3);
  const IterationError e(Error(ErrorKind::kNumericalFailure, "x"), partial);
  EXPECT_EQ(e.kind(), ErrorKind::kNumericalFailure);
  EXPECT_EQ(e.partial().entries.size(), 3u);
  EXPECT_FALSE(e.is_input_error());
}

}  // namespace
}  // namespace aluthge
