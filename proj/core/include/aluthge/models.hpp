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

// Builders for finite truncations of weighted shifts and the worked examples,
// plus a seeded corpus of commuting tuples with exactly known joint spectra.
//
// Truncation compresses to span(e_0, ..., e_{N-1}). Where a truncated
// identity only holds away from the last basis vector, the builder returns a
// mask of the indices on which it holds.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aluthge/tuple.hpp"

namespace aluthge {

struct ShiftSpec {
  std::vector<double> weights;  // w_0..w_{N-2}, all > 0; N = size + 1
  int size() const { return static_cast<int>(weights.size()) + 1; }
};

// N x N matrix with entry (k+1, k) = w_k.
ComplexMatrix weighted_shift(const ShiftSpec& spec);

// Truncated unweighted shift U_+ on C^N.
ComplexMatrix unilateral_shift(int n);

struct TwoVarShiftSpec {
  int n1 = 0, n2 = 0;
  // Row-major over (k1, k2): alpha[k1 * n2 + k2].
  std::vector<double> alpha;
  std::vector<double> beta;

  double a(int k1, int k2) const { return alpha[k1 * n2 + k2]; }
  double b(int k1, int k2) const { return beta[k1 * n2 + k2]; }

  // alpha_(k1,k2) = omega_k1, beta_(k1,k2) = tau_k2.
  static TwoVarShiftSpec product(const std::vector<double>& omega,
                                 const std::vector<double>& tau);
};

// T_1 e_(k1,k2) = alpha e_(k1+1,k2), T_2 e_(k1,k2) = beta e_(k1,k2+1) on the
// basis e_k1 (x) e_k2 (index k1 * n2 + k2). Throws NotCommutingError if the
// weights violate beta_(k1+1,k2) alpha_(k1,k2) = alpha_(k1,k2+1) beta_(k1,k2).
CommutingTuple two_variable_shift(const TwoVarShiftSpec& spec);

// (U_+^*, 0) on C^N; its transform is ((I - E_0) U_+^*, 0) for all t in (0,1].
struct Ex14Pair {
  double t = 0.0;
  CommutingTuple tuple;
  std::vector<ComplexMatrix> expected_aluthge;
};
Ex14Pair ex14_pair(int n, double t);

// (I (x) U_+^*, U_+ (x) I) on C^N (x) C^N with the closed forms of its polar
// factors and transform. `interior` marks basis indices whose first tensor
// coordinate is not N-1; the closed forms hold on interior rows and columns.
struct Ex24Pair {
  int n = 0;
  CommutingTuple tuple;
  std::vector<bool> interior;
  ComplexMatrix expected_p;
  ComplexMatrix expected_v1;
  ComplexMatrix expected_v2;

  std::vector<ComplexMatrix> expected_aluthge(double t) const;
};
Ex24Pair ex24_pair(int n);

// max |a - b| over entries (i, j) with interior[i] && interior[j].
double masked_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                           const std::vector<bool>& interior);

// T = [[1, k], [-k, -1]] = V P with V = [[0, 1], [-1, 0]], P = [[k, 1], [1, k]].
// V^2 = -I, so Delta_1 alternates between T and -T^*.
struct Ex41Matrix {
  double k = 0.0;
  CommutingTuple tuple;  // d = 1
  ComplexMatrix t;
  ComplexMatrix p;
  ComplexMatrix v;
  ComplexMatrix duggal;  // -T^*
  double radius = 0.0;   // sqrt(k^2 - 1)
  double norm = 0.0;     // k + 1
};
Ex41Matrix ex41_matrix(double k);

// Coefficients lowest degree first; p(x) = c_0 + c_1 x + ...
using Polynomial = std::vector<Complex>;

Complex evaluate(const Polynomial& p, Complex x);
ComplexMatrix evaluate(const Polynomial& p, const ComplexMatrix& a);

struct PolynomialTuple {
  CommutingTuple tuple;
  std::vector<PointCd> spectrum;  // (p_1(mu), ..., p_d(mu)), mu in eig(A)
};

inline constexpr int kMaxPolynomialDegree = 6;

// T_i = p_i(A). The ground truth uses the eigenvalues of A, computed
// numerically unless supplied.
PolynomialTuple polynomial_tuple(const ComplexMatrix& a,
                                 const std::vector<Polynomial>& polys);
PolynomialTuple polynomial_tuple(const ComplexMatrix& a,
                                 const std::vector<Polynomial>& polys,
                                 const std::vector<Complex>& eigenvalues_of_a);

enum class CorpusStyle { kDiagonalizable, kJordanMixed, kShiftBased };

std::string_view to_string(CorpusStyle style);

struct CorpusEntry {
  std::uint64_t seed = 0;
  CorpusStyle style = CorpusStyle::kDiagonalizable;
  CommutingTuple tuple;
  std::vector<PointCd> spectrum;  // exact up to the roundoff of p_i(mu)
  double radius = 0.0;
};

// T_i = p_i(A) with deg p_i = 2 and A built from prescribed eigenvalues:
//   diagonalizable  A = S diag(mu) S^{-1}, S a random similarity;
//   jordan-mixed    A = Q J Q^*, J holding one 2x2 Jordan block on a
//                   non-dominant eigenvalue (needs n >= 3);
//   shift-based     A = diag(mu) + a weighted subdiagonal shift.
// The polynomials are redrawn until the largest ||lambda||_2 exceeds every
// other joint eigenvalue norm by the factor 1 / kCorpusGap.
// Requires 1 <= n <= 16, 1 <= d <= 4.
CorpusEntry random_commuting(std::uint64_t seed, int n, int d,
                             CorpusStyle style);

inline constexpr double kCorpusGap = 0.9;

// Entry i: style i % 3, n in [3, max_n], d in [1, max_d], all drawn from
// (seed, i).
std::vector<CorpusEntry> corpus(std::uint64_t seed, int count, int max_n = 8,
                                int max_d = 3);

// T (+) (c I, 0, ..., 0) on C^n (+) C^m.
CommutingTuple direct_sum_scalar(const CommutingTuple& t, Complex c, int m);

}  // namespace aluthge
