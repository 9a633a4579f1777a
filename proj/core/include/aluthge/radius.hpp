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

// Joint spectral radius estimators. radius_joint_eig is the ground truth at
// finite dimension; the other three are limit formulas evaluated at a finite
// budget.

#pragma once

#include <string>
#include <vector>

#include "aluthge/koszul.hpp"
#include "aluthge/polar.hpp"
#include "aluthge/tuple.hpp"

namespace aluthge {

// max ||lambda||_2 over the joint eigenvalues.
double radius_joint_eig(const CommutingTuple& t,
                        const JointEigenOptions& options = {});

struct PowerEstimate {
  double value = 0.0;   // ||T^k||_2^{1/k} at k = k_reached
  int k_reached = 0;
  bool stalled = false;  // early stop on successive relative change
};

// ||T^k||_2^{1/k} up to k_max, stopping early when successive estimates differ
// by at most rel_tol (relative); rel_tol = 0 runs to k_max. Throws
// kInvalidArgument for k_max < 1.
PowerEstimate radius_power(const CommutingTuple& t, int k_max = 40,
                           double rel_tol = 1e-12);

struct AluthgeEstimate {
  double value = 0.0;
  IterateTrace trace;
  // t == 1: the limit of the Duggal iterates need not be the radius.
  bool duggal_warning = false;
};

// lim ||Delta_t^{(n)}(T)||_2 at the given budget. Requires 0 < t <= 1.
AluthgeEstimate radius_aluthge(const CommutingTuple& t, double exponent,
                               const IterateOptions& options = {});

inline constexpr int kElementaryGuard = 64;

// sqrt of the spectral radius of X -> sum T_i^* X T_i on n x n matrices.
// Throws kSizeGuard for n > kElementaryGuard.
double radius_elementary(const CommutingTuple& t);

struct RadiusConfig {
  double t = 0.5;
  int k_max = 40;
  double power_rel_tol = 1e-12;
  IterateOptions iterate;
  JointEigenOptions eigen;
};

struct RadiusReport {
  double r_joint_eig = 0.0;
  double r_power = 0.0;
  double r_aluthge = 0.0;
  double r_elementary = 0.0;
  double two_norm = 0.0;

  int power_k_reached = 0;
  bool power_stalled = false;
  int aluthge_n_reached = 0;
  bool aluthge_converged = false;
  bool aluthge_period_two = false;
  bool elementary_skipped = false;  // n above the size guard

  double spread = 0.0;  // max pairwise difference of the computed estimates
  std::vector<std::string> warnings;
};

RadiusReport radius_report(const CommutingTuple& t,
                           const RadiusConfig& config = {});

struct LadderOptions {
  int rows = 30;      // n = 0..rows
  int columns = 6;    // k = 1..columns
  // Iterations allowed past the table when extracting the column limits.
  int tail_budget = 500;
  double tail_tol = 1e-12;
  double rank_tol = kDefaultRankTol;
};

// cells[n][k-1] = ||(Delta_t^{(n)}(T))^k||_2 for n = 0..rows, k = 1..columns.
struct LadderTable {
  double t = 0.0;
  std::vector<std::vector<double>> cells;
  // Column limits L_{t,k}, k = 1..columns, from the continued iteration with
  // an Aitken correction on its last three values.
  std::vector<double> limits;
  int tail_iterations = 0;
  bool tail_converged = false;
};

// Throws kSizeGuard if rows > 30 or columns > 6.
LadderTable ladder_diagnostics(const CommutingTuple& t, double exponent,
                               const LadderOptions& options = {});

}  // namespace aluthge
