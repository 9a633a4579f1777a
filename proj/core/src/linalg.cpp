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

#include "aluthge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "aluthge/error.hpp"

namespace aluthge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonSquare: return "NonSquare";
    case ErrorKind::kNonHermitian: return "NonHermitian";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kNegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kNotCommuting: return "NotCommuting";
    case ErrorKind::kSizeGuard: return "SizeGuard";
    case ErrorKind::kNumericalFailure: return "NumericalFailure";
    case ErrorKind::kGenericityFailure: return "GenericityFailure";
    case ErrorKind::kNegativeHomology: return "NegativeHomology";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kNonSquare,
                std::string(what) + " is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
}

}  // namespace

void require_finite(const ComplexMatrix& a, std::string_view what) {
  if (!a.allFinite()) {
    throw Error(ErrorKind::kNonFinite,
                std::string(what) + " has NaN or infinite entries");
  }
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= tol * (1.0 + h.norm());
}

HermEig herm_eig(const ComplexMatrix& h) {
  require_square(h, "herm_eig input");
  require_finite(h, "herm_eig input");
  if (!is_hermitian(h)) {
    throw Error(ErrorKind::kNonHermitian,
                "||H - H*||_F = " + std::to_string((h - h.adjoint()).norm()));
  }
  if (h.rows() == 0) return {RealVector(0), ComplexMatrix(0, 0)};
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "Hermitian eigensolver");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Svd svd(const ComplexMatrix& a) {
  require_finite(a, "svd input");
  if (a.size() == 0) {
    return {ComplexMatrix::Identity(a.rows(), a.rows()), RealVector(0),
            ComplexMatrix::Identity(a.cols(), a.cols())};
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(a,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& a) {
  require_finite(a, "svd input");
  if (a.size() == 0) return RealVector(0);
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
}

double op_norm(const ComplexMatrix& a) {
  const RealVector s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

double rank_cutoff(double sigma_max, double rel_tol) {
  return rel_tol * std::max(1.0, sigma_max);
}

int numerical_rank(const ComplexMatrix& a, double rel_tol) {
  const RealVector s = singular_values(a);
  if (s.size() == 0) return 0;
  const double cutoff = rank_cutoff(s(0), rel_tol);
  return static_cast<int>((s.array() > cutoff).count());
}

ComplexMatrix pinv(const ComplexMatrix& a, double rel_tol) {
  const Svd d = svd(a);
  ComplexMatrix result = ComplexMatrix::Zero(a.cols(), a.rows());
  if (d.singular_values.size() == 0) return result;
  const double cutoff = rank_cutoff(d.singular_values(0), rel_tol);
  for (Eigen::Index i = 0; i < d.singular_values.size(); ++i) {
    const double s = d.singular_values(i);
    if (s <= cutoff) break;
    result += (d.v.col(i) / s) * d.u.col(i).adjoint();
  }
  return result;
}

ComplexMatrix psd_power(const ComplexMatrix& h, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::kInvalidArgument,
                "psd_power exponent must be finite and >= 0");
  }
  const HermEig e = herm_eig(h);
  const Eigen::Index n = e.eigenvalues.size();
  if (n == 0) return ComplexMatrix(0, 0);
  const double scale = e.eigenvalues.cwiseAbs().maxCoeff();
  const double clamp = kPsdClampTol * scale;
  RealVector powered(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = e.eigenvalues(i);
    if (lambda < -clamp) {
      throw Error(ErrorKind::kNegativeEigenvalue,
                  "eigenvalue " + std::to_string(lambda) + " below clamp " +
                      std::to_string(-clamp));
    }
    powered(i) = std::pow(lambda <= clamp ? 0.0 : lambda, t);
  }
  return e.vectors * powered.asDiagonal() * e.vectors.adjoint();
}

Schur schur_triangularize(const ComplexMatrix& a) {
  require_square(a, "schur input");
  require_finite(a, "schur input");
  if (a.rows() == 0) return {ComplexMatrix(0, 0), ComplexMatrix(0, 0)};
  Eigen::ComplexSchur<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "complex Schur iteration");
  }
  return {solver.matrixU(), solver.matrixT()};
}

ComplexMatrix range_projector(const ComplexMatrix& a, double rel_tol) {
  const Svd d = svd(a);
  ComplexMatrix proj = ComplexMatrix::Zero(a.rows(), a.rows());
  if (d.singular_values.size() == 0) return proj;
  const double cutoff = rank_cutoff(d.singular_values(0), rel_tol);
  for (Eigen::Index i = 0; i < d.singular_values.size(); ++i) {
    if (d.singular_values(i) <= cutoff) break;
    proj += d.u.col(i) * d.u.col(i).adjoint();
  }
  return proj;
}

double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / (1.0 + b.norm());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace aluthge
