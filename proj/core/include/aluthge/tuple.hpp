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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "aluthge/error.hpp"
#include "aluthge/linalg.hpp"

namespace aluthge {

inline constexpr double kCommuteTol = 1e-10;

// A point of C^d.
class PointCd {
 public:
  PointCd() = default;
  explicit PointCd(std::vector<Complex> coords);
  PointCd(std::initializer_list<Complex> coords);

  static PointCd zero(int d);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  const Complex& operator[](int i) const { return coords_[i]; }
  const std::vector<Complex>& coords() const noexcept { return coords_; }
  double norm2() const noexcept { return norm2_; }

  PointCd operator-() const;
  bool is_zero(double tol = 0.0) const noexcept { return norm2_ <= tol; }

 private:
  std::vector<Complex> coords_;
  double norm2_ = 0.0;
};

double distance(const PointCd& a, const PointCd& b);

// An ordered d-tuple of commuting n x n matrices. The commutator residual is
// certified once at construction; later operations trust it.
class CommutingTuple {
 public:
  // Validates shapes and commutativity against commute_tol.
  // Throws kShapeMismatch or NotCommutingError.
  explicit CommutingTuple(std::vector<ComplexMatrix> matrices,
                          double commute_tol = kCommuteTol);

  int arity() const noexcept { return static_cast<int>(matrices_.size()); }
  int dim() const noexcept { return dim_; }
  const ComplexMatrix& operator[](int i) const { return matrices_[i]; }
  const std::vector<ComplexMatrix>& matrices() const noexcept {
    return matrices_;
  }
  double commutator_residual() const noexcept { return residual_; }
  double commute_tol() const noexcept { return commute_tol_; }

  // Sum_i T_i^* T_i.
  ComplexMatrix gram() const;

 private:
  std::vector<ComplexMatrix> matrices_;
  int dim_ = 0;
  double residual_ = 0.0;
  double commute_tol_ = kCommuteTol;
};

struct CommutatorReport {
  double residual = 0.0;
  int first = -1;
  int second = -1;
};

// max_{i<j} ||T_i T_j - T_j T_i||_F / (1 + ||T_i|| ||T_j||), with the worst
// pair. Does not require the family to commute.
CommutatorReport commutator_residual(std::span<const ComplexMatrix> matrices);

CommutingTuple validate_commuting(std::vector<ComplexMatrix> matrices,
                                  double commute_tol = kCommuteTol);

// ||T||_2 = ||P|| = ||sum T_i^* T_i||^{1/2}.
double tuple_two_norm(const CommutingTuple& t);

// (T_1 - l_1 I, ..., T_d - l_d I).
CommutingTuple shift(const CommutingTuple& t, const PointCd& lambda);

// M_T(X) = sum_i T_i^* X T_i.
ComplexMatrix elementary_apply(const CommutingTuple& t, const ComplexMatrix& x);

// ||T^k||_2 = ||M_T^k(I)||^{1/2}, computed without forming the d^k-tuple.
// k = 0 gives ||I|| = 1.
double power_norm(const CommutingTuple& t, int k);

// Same as power_norm for every k = 1..k_max in one pass (index 0 holds k=1).
std::vector<double> power_norms(const CommutingTuple& t, int k_max);

inline constexpr std::size_t kExplicitPowerGuard = 4096;

// The d^k-tuple T^k = T * T^{k-1}, multi-indices in lexicographic order.
// Throws kSizeGuard if d^k exceeds kExplicitPowerGuard.
CommutingTuple explicit_power_tuple(const CommutingTuple& t, int k);

// Orthogonal projection of every T_i onto the commutant of a seeded generic
// combination C = sum c_i T_i. When C is nonderogatory its commutant is a
// commutative algebra, so the result commutes to roundoff. Returns nullopt if
// C looks derogatory or the projection moves some T_i by more than max_move
// (relative), i.e. when the tuple was not close to a commuting one of this kind.
std::optional<CommutingTuple> commutant_projection(const CommutingTuple& t,
                                                   std::uint64_t seed = 0x5eed,
                                                   double max_move = 1e-8);

// Max normalized residual of A_i B_j A_k = A_k B_j A_i and
// B_i A_j B_k = B_k A_j B_i. Neither family needs to commute.
double criss_cross_residual(std::span<const ComplexMatrix> a,
                            std::span<const ComplexMatrix> b);

}  // namespace aluthge
