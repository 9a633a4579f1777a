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

#include "aluthge/radius.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include <Eigen/Eigenvalues>

namespace aluthge {

namespace {

// Aitken delta-squared on the last three terms of a sequence, used only when
// the increments shrink without changing sign.
double aitken(double x0, double x1, double x2) {
  const double d1 = x1 - x0;
  const double d2 = x2 - x1;
  if (d1 == 0.0 || d2 == 0.0 || (d1 > 0.0) != (d2 > 0.0) ||
      std::abs(d2) >= std::abs(d1)) {
    return x2;
  }
  return x2 - d2 * d2 / (d2 - d1);
}

double max_distance(const std::vector<ComplexMatrix>& a,
                    const std::vector<ComplexMatrix>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).norm());
  return worst;
}

double frobenius(const std::vector<ComplexMatrix>& a) {
  double sum = 0.0;
  for (const ComplexMatrix& m : a) sum += m.squaredNorm();
  return std::sqrt(sum);
}

}  // namespace

double radius_joint_eig(const CommutingTuple& t, const JointEigenOptions& options) {
  double r = 0.0;
  for (const PointCd& p : joint_eigenvalues(t, options)) r = std::max(r, p.norm2());
  return r;
}

PowerEstimate radius_power(const CommutingTuple& t, int k_max, double rel_tol) {
  if (k_max < 1) throw Error(ErrorKind::kInvalidArgument, "k_max must be >= 1");
  if (!(rel_tol >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "rel_tol must be >= 0");
  const std::vector<double> norms = power_norms(t, k_max);
  PowerEstimate estimate;
  double previous = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double norm = norms[k - 1];
    const double value = norm > 0.0 ? std::pow(norm, 1.0 / k) : 0.0;
    estimate.value = value;
    estimate.k_reached = k;
    if (norm == 0.0 ||
        (rel_tol > 0.0 && k > 1 &&
         std::abs(value - previous) <= rel_tol * std::max(value, previous))) {
      estimate.stalled = true;
      break;
    }
    previous = value;
  }
  return estimate;
}

AluthgeEstimate radius_aluthge(const CommutingTuple& t, double exponent,
                               const IterateOptions& options) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in (0, 1]");
  }
  AluthgeEstimate estimate;
  estimate.trace = iterate(t, exponent, options);
  estimate.value = estimate.trace.limit_estimate;
  if (exponent == 1.0) {
    estimate.duggal_warning = true;
    // A norm stall at n = 1 hides a rotating orbit; look two steps ahead.
    const CommutingTuple once = aluthge(t, 1.0, options.rank_tol);
    const CommutingTuple twice = aluthge(once, 1.0, options.rank_tol);
    const double scale = 1.0 + frobenius(t.matrices());
    if (max_distance(once.matrices(), t.matrices()) > 1e-8 * scale &&
        max_distance(twice.matrices(), t.matrices()) <= 1e-10 * scale) {
      estimate.trace.period_two = true;
    }
  }
  return estimate;
}

double radius_elementary(const CommutingTuple& t) {
  const int n = t.dim();
  if (n > kElementaryGuard) {
    throw Error(ErrorKind::kSizeGuard, "n = " + std::to_string(n) + " exceeds " +
                                           std::to_string(kElementaryGuard));
  }
  if (n == 0) return 0.0;
  // vec(T^* X T) = (T^T (x) T^*) vec(X) for column-major vec.
  ComplexMatrix op = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < t.arity(); ++i) op += kron(t[i].transpose(), t[i].adjoint());
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(op, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "eigenvalues of the elementary operator");
  }
  return std::sqrt(solver.eigenvalues().cwiseAbs().maxCoeff());
}

RadiusReport radius_report(const CommutingTuple& t, const RadiusConfig& config) {
  RadiusReport report;
  report.two_norm = tuple_two_norm(t);
  report.r_joint_eig = radius_joint_eig(t, config.eigen);

  const PowerEstimate power = radius_power(t, config.k_max, config.power_rel_tol);
  report.r_power = power.value;
  report.power_k_reached = power.k_reached;
  report.power_stalled = power.stalled;

  const AluthgeEstimate al = radius_aluthge(t, config.t, config.iterate);
  report.r_aluthge = al.value;
  report.aluthge_n_reached = al.trace.entries.empty() ? 0 : al.trace.entries.back().n;
  report.aluthge_converged = al.trace.converged;
  report.aluthge_period_two = al.trace.period_two;

  std::vector<double> computed = {report.r_joint_eig, report.r_power, report.r_aluthge};
  if (t.dim() > kElementaryGuard) {
    report.elementary_skipped = true;
    report.warnings.push_back("elementary estimate skipped: n above " +
                              std::to_string(kElementaryGuard));
  } else {
    report.r_elementary = radius_elementary(t);
    computed.push_back(report.r_elementary);
  }
  const auto [lo, hi] = std::minmax_element(computed.begin(), computed.end());
  report.spread = *hi - *lo;

  if (!power.stalled) {
    report.warnings.push_back("power estimate still moving at k = " +
                              std::to_string(power.k_reached));
  }
  if (al.duggal_warning) {
    report.warnings.push_back(
        "t = 1: the Duggal iterates need not converge to the spectral radius");
  }
  if (al.trace.period_two) {
    report.warnings.push_back("transform orbit has period two; norm limit is not the radius");
  }
  if (!al.trace.converged) {
    report.warnings.push_back("transform norms did not settle within " +
                              std::to_string(config.iterate.max_iter) + " iterations");
  }
  return report;
}

LadderTable ladder_diagnostics(const CommutingTuple& t, double exponent,
                               const LadderOptions& options) {
  if (options.rows < 0 || options.rows > 30 || options.columns < 1 ||
      options.columns > 6) {
    throw Error(ErrorKind::kSizeGuard, "ladder is limited to 30 rows and 6 columns");
  }
  if (options.tail_budget < 0 || !(options.tail_tol >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tail budget and tolerance must be >= 0");
  }
  if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in [0, 1]");
  }
  LadderTable table;
  table.t = exponent;
  CommutingTuple x = t;
  for (int n = 0; n <= options.rows; ++n) {
    if (n > 0) x = iteration_step(x, exponent, options.rank_tol).tuple;
    table.cells.push_back(power_norms(x, options.columns));
  }

  std::deque<std::vector<double>> recent(
      table.cells.end() - std::min<std::ptrdiff_t>(3, std::ssize(table.cells)),
      table.cells.end());
  for (int it = 1; it <= options.tail_budget; ++it) {
    x = iteration_step(x, exponent, options.rank_tol).tuple;
    std::vector<double> row = power_norms(x, options.columns);
    double change = 0.0;
    for (int k = 0; k < options.columns; ++k) {
      change = std::max(change, std::abs(row[k] - recent.back()[k]) /
                                    std::max(1.0, row[k]));
    }
    recent.push_back(std::move(row));
    if (recent.size() > 3) recent.pop_front();
    table.tail_iterations = it;
    if (change <= options.tail_tol) {
      table.tail_converged = true;
      break;
    }
  }

  for (int k = 0; k < options.columns; ++k) {
    if (recent.size() < 3) {
      table.limits.push_back(recent.back()[k]);
    } else {
      table.limits.push_back(aitken(recent[0][k], recent[1][k], recent[2][k]));
    }
  }
  return table;
}

}  // namespace aluthge
