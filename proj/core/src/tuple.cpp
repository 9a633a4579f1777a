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

#include "aluthge/tuple.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aluthge/error.hpp"
#include "aluthge/random.hpp"

namespace aluthge {

PointCd::PointCd(std::vector<Complex> coords) : coords_(std::move(coords)) {
  double sum = 0.0;
  for (const Complex& z : coords_) sum += std::norm(z);
  norm2_ = std::sqrt(sum);
}

PointCd::PointCd(std::initializer_list<Complex> coords)
    : PointCd(std::vector<Complex>(coords)) {}

PointCd PointCd::zero(int d) {
  return PointCd(std::vector<Complex>(static_cast<std::size_t>(d)));
}

PointCd PointCd::operator-() const {
  std::vector<Complex> neg(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) neg[i] = -coords_[i];
  return PointCd(std::move(neg));
}

double distance(const PointCd& a, const PointCd& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "points of different dimension");
  }
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

CommutatorReport commutator_residual(std::span<const ComplexMatrix> matrices) {
  std::vector<double> norms;
  norms.reserve(matrices.size());
  for (const ComplexMatrix& m : matrices) norms.push_back(op_norm(m));
  CommutatorReport report;
  report.residual = 0.0;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const double r =
          (matrices[i] * matrices[j] - matrices[j] * matrices[i]).norm() /
          (1.0 + norms[i] * norms[j]);
      if (r > report.residual || report.first < 0) {
        report.residual = r;
        report.first = static_cast<int>(i);
        report.second = static_cast<int>(j);
      }
    }
  }
  return report;
}

CommutingTuple::CommutingTuple(std::vector<ComplexMatrix> matrices,
                               double commute_tol)
    : matrices_(std::move(matrices)), commute_tol_(commute_tol) {
  if (matrices_.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "a tuple needs at least one matrix");
  }
  dim_ = static_cast<int>(matrices_.front().rows());
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const ComplexMatrix& m = matrices_[i];
    if (m.rows() != m.cols() || m.rows() != dim_) {
      throw Error(ErrorKind::kShapeMismatch,
                  "entry " + std::to_string(i) + " is " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      ", expected " + std::to_string(dim_) + "x" +
                      std::to_string(dim_));
    }
    require_finite(m, "tuple entry " + std::to_string(i));
  }
  const CommutatorReport report = aluthge::commutator_residual(matrices_);
  residual_ = report.residual;
  if (residual_ > commute_tol_) {
    throw NotCommutingError(residual_, report.first, report.second);
  }
}

ComplexMatrix CommutingTuple::gram() const {
  ComplexMatrix g = ComplexMatrix::Zero(dim_, dim_);
  for (const ComplexMatrix& m : matrices_) g.noalias() += m.adjoint() * m;
  return g;
}

CommutingTuple validate_commuting(std::vector<ComplexMatrix> matrices,
                                  double commute_tol) {
  return CommutingTuple(std::move(matrices), commute_tol);
}

double tuple_two_norm(const CommutingTuple& t) {
  return std::sqrt(op_norm(t.gram()));
}

CommutingTuple shift(const CommutingTuple& t, const PointCd& lambda) {
  if (lambda.dim() != t.arity()) {
    throw Error(ErrorKind::kShapeMismatch,
                "point has " + std::to_string(lambda.dim()) +
                    " coordinates, tuple has " + std::to_string(t.arity()));
  }
  std::vector<ComplexMatrix> shifted = t.matrices();
  for (int i = 0; i < t.arity(); ++i) {
    shifted[i].diagonal().array() -= lambda[i];
  }
  return CommutingTuple(std::move(shifted), t.commute_tol());
}

ComplexMatrix elementary_apply(const CommutingTuple& t,
                               const ComplexMatrix& x) {
  if (x.rows() != t.dim() || x.cols() != t.dim()) {
    throw Error(ErrorKind::kShapeMismatch, "elementary operator argument");
  }
  ComplexMatrix out = ComplexMatrix::Zero(t.dim(), t.dim());
  for (const ComplexMatrix& m : t.matrices()) {
    out.noalias() += m.adjoint() * x * m;
  }
  return out;
}

std::vector<double> power_norms(const CommutingTuple& t, int k_max) {
  std::vector<double> norms;
  norms.reserve(static_cast<std::size_t>(std::max(k_max, 0)));
  // X_k = M_T^k(I) / exp(log_scale), kept at unit norm.
  ComplexMatrix x = ComplexMatrix::Identity(t.dim(), t.dim());
  double log_scale = 0.0;
  bool vanished = false;
  for (int k = 1; k <= k_max; ++k) {
    if (vanished) {
      norms.push_back(0.0);
      continue;
    }
    x = elementary_apply(t, x);
    x = 0.5 * (x + x.adjoint()).eval();
    const double s = op_norm(x);
    if (s == 0.0) {
      vanished = true;
      norms.push_back(0.0);
      continue;
    }
    x /= s;
    log_scale += std::log(s);
    norms.push_back(std::exp(0.5 * log_scale));
  }
  return norms;
}

double power_norm(const CommutingTuple& t, int k) {
  if (k < 0) throw Error(ErrorKind::kInvalidArgument, "power must be >= 0");
  if (k == 0) return t.dim() > 0 ? 1.0 : 0.0;
  return power_norms(t, k).back();
}

CommutingTuple explicit_power_tuple(const CommutingTuple& t, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "power must be >= 1");
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) {
    count *= static_cast<std::size_t>(t.arity());
    if (count > kExplicitPowerGuard) {
      throw Error(ErrorKind::kSizeGuard,
                  "d^k exceeds " + std::to_string(kExplicitPowerGuard));
    }
  }
  std::vector<ComplexMatrix> current = t.matrices();
  for (int step = 1; step < k; ++step) {
    std::vector<ComplexMatrix> next;
    next.reserve(current.size() * t.matrices().size());
    for (const ComplexMatrix& head : t.matrices()) {
      for (const ComplexMatrix& tail : current) next.push_back(head * tail);
    }
    current = std::move(next);
  }
  return CommutingTuple(std::move(current),
                        std::max(t.commute_tol(), kCommuteTol));
}

namespace {

double one_sided_criss_cross(std::span<const ComplexMatrix> a,
                             std::span<const ComplexMatrix> b,
                             const std::vector<double>& na,
                             const std::vector<double>& nb) {
  double worst = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const ComplexMatrix ab = a[i] * b[j];
      for (std::size_t k = i + 1; k < a.size(); ++k) {
        const ComplexMatrix lhs = ab * a[k];
        const ComplexMatrix rhs = a[k] * b[j] * a[i];
        worst = std::max(worst, (lhs - rhs).norm() /
                                    (1.0 + na[i] * nb[j] * na[k]));
      }
    }
  }
  return worst;
}

}  // namespace

double criss_cross_residual(std::span<const ComplexMatrix> a,
                            std::span<const ComplexMatrix> b) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorKind::kShapeMismatch, "criss-cross tuples differ in arity");
  }
  const auto n = a.front().rows();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rows() != n || a[i].cols() != n || b[i].rows() != n ||
        b[i].cols() != n) {
      throw Error(ErrorKind::kShapeMismatch, "criss-cross entries differ in size");
    }
  }
  std::vector<double> na, nb;
  for (const ComplexMatrix& m : a) na.push_back(op_norm(m));
  for (const ComplexMatrix& m : b) nb.push_back(op_norm(m));
  return std::max(one_sided_criss_cross(a, b, na, nb),
                  one_sided_criss_cross(b, a, nb, na));
}

std::optional<CommutingTuple> commutant_projection(const CommutingTuple& t,
                                                   std::uint64_t seed,
                                                   double max_move) {
  const int n = t.dim();
  if (t.arity() < 2 || n < 2) return t;
  Rng rng(seed);
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < t.arity(); ++i) c += rng.complex_normal() * t[i];

  // vec(C Y - Y C) = (I (x) C - C^T (x) I) vec(Y), column-major.
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix sylvester = kron(id, c) - kron(c.transpose(), id);
  const int m = n * n;
  ComplexMatrix null_basis;
  RealVector s;
  if (m > 64) {
    Eigen::BDCSVD<ComplexMatrix> f(sylvester, Eigen::ComputeFullV);
    s = f.singularValues();
    null_basis = f.matrixV().rightCols(n);
  } else {
    Eigen::JacobiSVD<ComplexMatrix> f(sylvester, Eigen::ComputeFullV);
    s = f.singularValues();
    null_basis = f.matrixV().rightCols(n);
  }
  const double scale = std::max(1.0, s(0));
  // Nonderogatory: exactly n singular values vanish, the next one does not.
  if (s(m - n) > 1e-10 * scale || s(m - n - 1) <= 1e-8 * scale) return std::nullopt;

  std::vector<ComplexMatrix> projected;
  projected.reserve(static_cast<std::size_t>(t.arity()));
  for (int i = 0; i < t.arity(); ++i) {
    const Eigen::Map<const ComplexVector> x(t[i].data(), m);
    const ComplexVector y = null_basis * (null_basis.adjoint() * x);
    ComplexMatrix yi = Eigen::Map<const ComplexMatrix>(y.data(), n, n);
    if ((yi - t[i]).norm() > max_move * (1.0 + t[i].norm())) return std::nullopt;
    projected.push_back(std::move(yi));
  }
  if (aluthge::commutator_residual(projected).residual > t.commutator_residual()) {
    return std::nullopt;
  }
  return CommutingTuple(std::move(projected), t.commute_tol());
}

}  // namespace aluthge
