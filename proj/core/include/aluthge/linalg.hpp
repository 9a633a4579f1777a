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

// Dense complex linear-algebra primitives. Everything above this layer sees
// matrices only through these functions, so tolerances and orderings are
// fixed here: eigenvalues ascend, singular values descend, and rank cutoffs
// are relative to max(1, sigma_max).

#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace aluthge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdClampTol = 1e-10;

// Throws kNonFinite if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& a, std::string_view what);

// ||H - H*||_F <= kHermitianTol * (1 + ||H||_F).
bool is_hermitian(const ComplexMatrix& h, double tol = kHermitianTol);

struct HermEig {
  RealVector eigenvalues;  // ascending
  ComplexMatrix vectors;   // unitary, columns are eigenvectors
};

HermEig herm_eig(const ComplexMatrix& h);

struct Svd {
  ComplexMatrix u;
  RealVector singular_values;  // descending, length min(rows, cols)
  ComplexMatrix v;
};

// Full SVD: a = u * diag(s) * v^*.
Svd svd(const ComplexMatrix& a);

RealVector singular_values(const ComplexMatrix& a);

double op_norm(const ComplexMatrix& a);

// Number of singular values strictly above rel_tol * max(1, sigma_max).
int numerical_rank(const ComplexMatrix& a, double rel_tol = kDefaultRankTol);

double rank_cutoff(double sigma_max, double rel_tol);

ComplexMatrix pinv(const ComplexMatrix& a, double rel_tol = kDefaultRankTol);

// H^t for Hermitian positive semidefinite H, t >= 0, with 0^0 = 1.
// Eigenvalues in [-kPsdClampTol * ||H||, 0) are clamped to zero; anything more
// negative raises kNegativeEigenvalue.
ComplexMatrix psd_power(const ComplexMatrix& h, double t);

struct Schur {
  ComplexMatrix q;  // unitary
  ComplexMatrix r;  // upper triangular
};

Schur schur_triangularize(const ComplexMatrix& a);

// Orthogonal projection onto range(a).
ComplexMatrix range_projector(const ComplexMatrix& a,
                              double rel_tol = kDefaultRankTol);

// Relative Frobenius residual ||a - b||_F / (1 + ||b||_F).
double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace aluthge
