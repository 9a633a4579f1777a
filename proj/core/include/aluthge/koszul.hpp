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

// Koszul complex of a commuting tuple and the joint spectra it defines.
//
// Stage p of the complex is Lambda^p(C^d) (x) C^n. Its basis is indexed by the
// p-subsets S of {0, ..., d-1} in lexicographic order, each carrying an n-block.
// The boundary D^p : stage p -> stage p+1 maps the S-block into the
// (S u {i})-block by (-1)^{#{j in S : j < i}} T_i. For d = 2 this gives
// D^0 = [T_1; T_2] and D^1 = [-T_2, T_1].
//
// On a finite-dimensional space every boundary map has closed range, so the
// Slodkowski systems reduce to rank conditions and the Taylor essential
// spectrum is empty with index identically zero.

#pragma once

#include <cstdint>
#include <vector>

#include "aluthge/polar.hpp"
#include "aluthge/tuple.hpp"

namespace aluthge {

inline constexpr double kMembershipTol = 1e-8;

struct KoszulComplex {
  int d = 0;
  int n = 0;
  // boundary[p] has C(d, p+1) n rows and C(d, p) n columns, p = 0..d-1.
  std::vector<ComplexMatrix> boundary;

  // dimension of stage p
  int stage_dim(int p) const;
};

// Subsets of {0..d-1} of size p, lexicographic, as bitmasks.
std::vector<std::uint32_t> koszul_basis(int d, int p);

KoszulComplex boundary_maps(const CommutingTuple& t);

// max_p ||D^{p+1} D^p||_F / (1 + ||D^{p+1}||_F ||D^p||_F).
double boundary_square_residual(const KoszulComplex& k);

struct Homology {
  std::vector<int> dims;   // h_0..h_d
  std::vector<int> ranks;  // rank D^0..D^{d-1}
  int euler_characteristic() const;
};

// h_p = dim ker D^p - rank D^{p-1}. Throws kNegativeHomology when the rank
// decisions are mutually inconsistent.
Homology homology_dims(const KoszulComplex& k,
                       double rel_tol = kDefaultRankTol);
Homology homology_dims(const CommutingTuple& t,
                       double rel_tol = kDefaultRankTol);

struct SpectrumReport {
  PointCd point;
  bool point_spectrum = false;  // sigma_p
  bool left = false;            // sigma_l
  bool right = false;           // sigma_r
  bool harte = false;           // sigma_H = sigma_l u sigma_r
  bool taylor = false;          // sigma_T
  bool taylor_essential = false;  // always false in finite dimension
  int fredholm_index = 0;         // always 0 in finite dimension
  std::vector<bool> pi;     // sigma_{pi,k}, k = 0..d
  std::vector<bool> delta;  // sigma_{delta,k}, k = 0..d
  std::vector<int> homology;
  double left_margin = 0.0;   // sigma_min of the column operator / scale
  double right_margin = 0.0;  // sigma_min of the adjoint column / scale
};

SpectrumReport membership_report(const CommutingTuple& t,
                                 const PointCd& lambda,
                                 double rel_tol = kMembershipTol);

struct JointEigenOptions {
  double cluster_tol = 1e-6;
  std::uint64_t seed = 0x5eed;
  int max_attempts = 5;
  // Strictly-lower mass allowed in the transported family, relative.
  double triangular_tol = 1e-7;
};

// Joint eigenvalues (= Taylor spectrum) of a commuting family via Schur
// triangularization of a seeded random linear combination. Returned points
// are sorted by descending norm, then lexicographically.
std::vector<PointCd> joint_eigenvalues(const CommutingTuple& t,
                                       const JointEigenOptions& options = {});

// Symmetric Hausdorff distance between finite point sets.
double hausdorff_distance(const std::vector<PointCd>& a,
                          const std::vector<PointCd>& b);

struct GridSlice {
  PointCd fixed;        // coordinate `varying` is overwritten per grid point
  int varying = 0;
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
  int re_steps = 1, im_steps = 1;  // nodes per axis, endpoints included
};

inline constexpr std::int64_t kGridGuard = 1'000'000;

struct GridPoint {
  Complex value;  // the varying coordinate
  SpectrumReport report;
};

// One report per node, ordered re-major (re outer, im inner). The result is
// independent of the worker count.
std::vector<GridPoint> grid_scan(const CommutingTuple& t,
                                 const GridSlice& slice,
                                 double rel_tol = kMembershipTol,
                                 int workers = 1);

// max_p of the intertwining residual
// (P^t (+) ... (+) P^t) D_T^p - D_{Delta_t(T)}^p (P^t (+) ... (+) P^t).
double cochain_residual(const CommutingTuple& t, double exponent,
                        double rel_tol = kDefaultRankTol);

}  // namespace aluthge
