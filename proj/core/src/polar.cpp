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

#include "aluthge/polar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace aluthge {

namespace {

constexpr double kPolarInvariantTol = 1e-9;
constexpr double kPolarFailureFactor = 100.0;

ComplexMatrix column_operator(const CommutingTuple& t) {
  const int n = t.dim();
  ComplexMatrix column(static_cast<Eigen::Index>(t.arity()) * n, n);
  for (int i = 0; i < t.arity(); ++i) column.middleRows(i * n, n) = t[i];
  return column;
}

struct ThinSvd {
  ComplexMatrix u;  // dn x n
  RealVector s;     // n, descending
  ComplexMatrix v;  // n x n
};

ThinSvd thin_svd(const ComplexMatrix& a) {
  if (a.cols() > 64) {
    Eigen::BDCSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

double max_tuple_step(const std::vector<ComplexMatrix>& a,
                      const std::vector<ComplexMatrix>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, (a[i] - b[i]).norm());
  }
  return worst;
}

double tuple_frobenius(const std::vector<ComplexMatrix>& a) {
  double sum = 0.0;
  for (const ComplexMatrix& m : a) sum += m.squaredNorm();
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix SphericalPolar::power(double s) const {
  RealVector powered(spectrum.size());
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    powered(i) = std::pow(spectrum(i), s);
  }
  return basis * powered.asDiagonal() * basis.adjoint();
}

ComplexMatrix SphericalPolar::range_projection() const {
  const ComplexMatrix range = basis.leftCols(rank_p);
  return range * range.adjoint();
}

PolarResiduals polar_residuals(const CommutingTuple& t,
                               const SphericalPolar& polar) {
  PolarResiduals r;
  const int n = t.dim();
  const ComplexMatrix proj = polar.range_projection();
  const ComplexMatrix kernel_proj = ComplexMatrix::Identity(n, n) - proj;
  ComplexMatrix vv = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < t.arity(); ++i) {
    const ComplexMatrix& v = polar.v[i];
    r.reconstruction =
        std::max(r.reconstruction, relative_residual(v * polar.p, t[i]));
    r.kernel = std::max(r.kernel, (v * kernel_proj).norm());
    vv.noalias() += v.adjoint() * v;
  }
  r.projection = (vv - proj).norm();
  const double p_norm = polar.spectrum.size() ? polar.spectrum(0) : 0.0;
  for (int i = 0; i < t.arity(); ++i) {
    const ComplexMatrix vp = polar.v[i] * polar.p;
    for (int j = i + 1; j < t.arity(); ++j) {
      const ComplexMatrix lhs = vp * polar.v[j];
      const ComplexMatrix rhs = polar.v[j] * polar.p * polar.v[i];
      r.intertwining = std::max(r.intertwining, (lhs - rhs).norm() / (1.0 + p_norm));
    }
  }
  return r;
}

SphericalPolar spherical_polar(const CommutingTuple& t, double rel_tol) {
  if (!(rel_tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "rank tolerance must be > 0");
  }
  const int n = t.dim();
  const int d = t.arity();
  // D_T = W S X^* gives P = X S X^* and D_V = W_r X_r^*, the partial isometry
  // with initial space range(P).
  const ThinSvd f = thin_svd(column_operator(t));
  const double cutoff = rank_cutoff(f.s.size() ? f.s(0) : 0.0, rel_tol);

  SphericalPolar polar;
  polar.tol = rel_tol;
  polar.basis = f.v;
  polar.spectrum = f.s;
  for (Eigen::Index i = 0; i < f.s.size(); ++i) {
    if (f.s(i) > cutoff) {
      ++polar.rank_p;
    } else {
      polar.spectrum(i) = 0.0;
    }
  }
  polar.p = polar.basis * polar.spectrum.asDiagonal() * polar.basis.adjoint();
  polar.p = 0.5 * (polar.p + polar.p.adjoint()).eval();

  const int r = polar.rank_p;
  const ComplexMatrix range = f.v.leftCols(r);
  const ComplexMatrix column_v = f.u.leftCols(r) * range.adjoint();
  // Annihilate ker P explicitly so that ker V = ker P in rank arithmetic.
  const ComplexMatrix proj = range * range.adjoint();
  polar.v.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    polar.v.push_back(column_v.middleRows(i * n, n) * proj);
  }

  const PolarResiduals res = polar_residuals(t, polar);
  const double limit = kPolarFailureFactor * kPolarInvariantTol;
  const double worst = std::max({res.reconstruction, res.projection, res.kernel});
  if (!(worst <= limit)) {
    throw Error(ErrorKind::kNumericalFailure,
                "spherical polar invariant residual " + std::to_string(worst));
  }
  return polar;
}

CommutingTuple aluthge(const CommutingTuple& t, const SphericalPolar& polar,
                       double exponent) {
  if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in [0, 1]");
  }
  const ComplexMatrix left = polar.power(exponent);
  const ComplexMatrix right = polar.power(1.0 - exponent);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(t.arity()));
  for (const ComplexMatrix& v : polar.v) out.push_back(left * v * right);
  try {
    return CommutingTuple(std::move(out),
                          std::max(kTransformCommuteTol, t.commute_tol()));
  } catch (const NotCommutingError& e) {
    throw Error(ErrorKind::kNumericalFailure,
                std::string("transformed tuple lost commutativity: ") + e.what());
  }
}

CommutingTuple aluthge(const CommutingTuple& t, double exponent,
                       double rel_tol) {
  if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in [0, 1]");
  }
  return aluthge(t, spherical_polar(t, rel_tol), exponent);
}

IterationStep iteration_step(const CommutingTuple& t, double exponent,
                             double rel_tol) {
  IterationStep step{aluthge(t, exponent, rel_tol)};
  if (step.tuple.commutator_residual() > kRecommuteTrigger) {
    if (auto projected = commutant_projection(step.tuple)) {
      step.tuple = std::move(*projected);
      step.projected = true;
    }
  }
  return step;
}

CommutingTuple aluthge_power(const CommutingTuple& t, double exponent, int n,
                             double rel_tol) {
  CommutingTuple x = t;
  for (int i = 0; i < n; ++i) x = iteration_step(x, exponent, rel_tol).tuple;
  return x;
}

IterateTrace iterate(const CommutingTuple& t, double exponent,
                     const IterateOptions& options) {
  if (options.max_iter < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_iter must be >= 1");
  }
  if (!(options.stop_tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "stop_tol must be > 0");
  }
  if (!(exponent >= 0.0 && exponent <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in [0, 1]");
  }
  IterateTrace trace;
  trace.t = exponent;
  trace.initial_norm2 = tuple_two_norm(t);
  trace.limit_estimate = trace.initial_norm2;

  CommutingTuple current = t;
  std::vector<ComplexMatrix> two_back;
  double previous_norm = trace.initial_norm2;
  for (int n = 1; n <= options.max_iter; ++n) {
    try {
      IterationStep step = iteration_step(current, exponent, options.rank_tol);
      CommutingTuple& next = step.tuple;
      IterateEntry entry;
      entry.n = n;
      entry.projected = step.projected;
      entry.norm2 = tuple_two_norm(next);
      entry.commutator_residual = next.commutator_residual();
      entry.delta = std::abs(entry.norm2 - previous_norm);
      entry.tuple_step = max_tuple_step(next.matrices(), current.matrices());
      const double scale = 1.0 + tuple_frobenius(next.matrices());
      if (!two_back.empty() && entry.tuple_step > 1e-8 * scale &&
          max_tuple_step(next.matrices(), two_back) <= 1e-10 * scale) {
        trace.period_two = true;
      }
      trace.entries.push_back(entry);
      trace.limit_estimate = entry.norm2;
      previous_norm = entry.norm2;
      two_back = current.matrices();
      current = std::move(next);
      if (options.stop_on_stall && entry.delta <= options.stop_tol) {
        trace.converged = true;
        break;
      }
    } catch (const Error& e) {
      throw IterationError(e, std::move(trace));
    }
  }
  return trace;
}

QuasinormalCheck is_spherically_quasinormal(const CommutingTuple& t,
                                            double tol) {
  const SphericalPolar polar = spherical_polar(t);
  const double p_norm = polar.spectrum.size() ? polar.spectrum(0) : 0.0;
  QuasinormalCheck check;
  for (int i = 0; i < t.arity(); ++i) {
    const double r = (polar.p * t[i] - t[i] * polar.p).norm() /
                     (1.0 + p_norm * op_norm(t[i]));
    check.residual = std::max(check.residual, r);
  }
  check.quasinormal = check.residual <= tol;
  return check;
}

}  // namespace aluthge
