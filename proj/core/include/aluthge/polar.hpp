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

// Spherical polar decomposition and the generalized spherical Aluthge
// transform
//
//   Delta_t(T) = (P^t V_1 P^{1-t}, ..., P^t V_d P^{1-t}),
//
// where P = (sum T_i^* T_i)^{1/2} and (V_1, ..., V_d) is the joint partial
// isometry with T_i = V_i P and ker V = ker P.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aluthge/error.hpp"
#include "aluthge/tuple.hpp"

namespace aluthge {

// Residual tolerance used when a transformed tuple is re-certified.
inline constexpr double kTransformCommuteTol = 1e-8;

struct SphericalPolar {
  ComplexMatrix p;
  std::vector<ComplexMatrix> v;
  int rank_p = 0;
  double tol = kDefaultRankTol;

  // Spectral data of P: p = basis * diag(spectrum) * basis^*, with the
  // entries below the rank cutoff set to exactly zero.
  ComplexMatrix basis;
  RealVector spectrum;

  // P^s via the stored spectral data (0^0 = 1).
  ComplexMatrix power(double s) const;
  // Orthogonal projection onto range(P).
  ComplexMatrix range_projection() const;
};

struct PolarResiduals {
  double reconstruction = 0.0;  // max_i ||V_i P - T_i||_F / (1 + ||T_i||_F)
  double projection = 0.0;      // ||sum V_i^* V_i - Proj_range(P)||_F
  double kernel = 0.0;          // max_i ||V_i (I - Proj_range(P))||_F
  double intertwining = 0.0;    // max_{i,j} V_i P V_j - V_j P V_i, normalized
};

PolarResiduals polar_residuals(const CommutingTuple& t,
                               const SphericalPolar& polar);

// Throws kNumericalFailure if an invariant residual exceeds 100 * 1e-9.
SphericalPolar spherical_polar(const CommutingTuple& t,
                               double rel_tol = kDefaultRankTol);

// Throws kInvalidArgument for t outside [0, 1].
CommutingTuple aluthge(const CommutingTuple& t, double exponent,
                       double rel_tol = kDefaultRankTol);
CommutingTuple aluthge(const CommutingTuple& t, const SphericalPolar& polar,
                       double exponent);

// Repeated transforms amplify the non-commuting part of the roundoff by about
// (sigma_max / sigma_min)^t per step. Past this residual an iteration step
// projects its output back onto a commutant (see commutant_projection).
inline constexpr double kRecommuteTrigger = 1e-13;

struct IterationStep {
  CommutingTuple tuple;
  bool projected = false;
};

// aluthge() plus the projection above; used by iterate, aluthge_power and
// the ladder.
IterationStep iteration_step(const CommutingTuple& t, double exponent,
                             double rel_tol = kDefaultRankTol);

struct IterateEntry {
  int n = 0;
  double norm2 = 0.0;
  double commutator_residual = 0.0;
  double delta = 0.0;       // |norm_n - norm_{n-1}|, norm_0 = ||T||_2
  double tuple_step = 0.0;  // max_i ||X_i^{(n)} - X_i^{(n-1)}||_F
  bool projected = false;   // the step was re-projected onto a commutant
};

struct IterateTrace {
  double t = 0.0;
  double initial_norm2 = 0.0;
  std::vector<IterateEntry> entries;
  bool converged = false;
  double limit_estimate = 0.0;
  // Set when X^{(n)} returns to X^{(n-2)} without being a fixed point.
  bool period_two = false;
};

struct IterateOptions {
  int max_iter = 500;
  double stop_tol = 1e-9;
  // When false, all max_iter steps are taken regardless of norm stall.
  bool stop_on_stall = true;
  double rank_tol = kDefaultRankTol;
};

// Thrown when a step fails; carries everything computed before the failure.
class IterationError : public Error {
 public:
  IterationError(const Error& cause, IterateTrace partial)
      : Error(cause.kind(), cause.what()), partial_(std::move(partial)) {}
  const IterateTrace& partial() const noexcept { return partial_; }

 private:
  IterateTrace partial_;
};

IterateTrace iterate(const CommutingTuple& t, double exponent,
                     const IterateOptions& options = {});

// Applies Delta_t n times.
CommutingTuple aluthge_power(const CommutingTuple& t, double exponent, int n,
                             double rel_tol = kDefaultRankTol);

struct QuasinormalCheck {
  bool quasinormal = false;
  double residual = 0.0;  // max_i ||P T_i - T_i P||_F / (1 + ||P|| ||T_i||)
};

QuasinormalCheck is_spherically_quasinormal(const CommutingTuple& t,
                                            double tol = 1e-9);

}  // namespace aluthge
