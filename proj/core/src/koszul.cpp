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

#include "aluthge/koszul.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "aluthge/parallel.hpp"
#include "aluthge/random.hpp"

namespace aluthge {

namespace {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

void collect_subsets(int d, int p, int start, std::uint32_t mask,
                     std::vector<std::uint32_t>& out) {
  if (p == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = start; i <= d - p; ++i) {
    collect_subsets(d, p - 1, i + 1, mask | (1u << i), out);
  }
}

ComplexMatrix block_diagonal(const ComplexMatrix& block, int copies) {
  const Eigen::Index n = block.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n * copies, n * copies);
  for (int c = 0; c < copies; ++c) out.block(c * n, c * n, n, n) = block;
  return out;
}

ComplexMatrix adjoint_column(const CommutingTuple& t) {
  const int n = t.dim();
  ComplexMatrix column(static_cast<Eigen::Index>(t.arity()) * n, n);
  for (int i = 0; i < t.arity(); ++i) column.middleRows(i * n, n) = t[i].adjoint();
  return column;
}

// sigma_min / max(1, sigma_max), and whether it falls at or below rel_tol.
double injectivity_margin(const ComplexMatrix& column) {
  const RealVector s = singular_values(column);
  if (s.size() == 0) return 0.0;
  return s(s.size() - 1) / std::max(1.0, s(0));
}

bool point_less(const PointCd& a, const PointCd& b) {
  if (a.norm2() != b.norm2()) return a.norm2() > b.norm2();
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

std::vector<PointCd> cluster_points(const std::vector<PointCd>& raw,
                                    double tol) {
  const std::size_t m = raw.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (distance(raw[i], raw[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<PointCd> out;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    const int d = raw[g.front()].dim();
    std::vector<Complex> mean(static_cast<std::size_t>(d));
    for (std::size_t idx : g) {
      for (int c = 0; c < d; ++c) mean[c] += raw[idx][c];
    }
    for (Complex& z : mean) z /= static_cast<double>(g.size());
    out.emplace_back(std::move(mean));
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

}  // namespace

int KoszulComplex::stage_dim(int p) const { return binomial(d, p) * n; }

std::vector<std::uint32_t> koszul_basis(int d, int p) {
  std::vector<std::uint32_t> out;
  if (p < 0 || p > d) return out;
  collect_subsets(d, p, 0, 0u, out);
  return out;
}

KoszulComplex boundary_maps(const CommutingTuple& t) {
  KoszulComplex k;
  k.d = t.arity();
  k.n = t.dim();
  const int n = k.n;
  for (int p = 0; p < k.d; ++p) {
    const std::vector<std::uint32_t> from = koszul_basis(k.d, p);
    const std::vector<std::uint32_t> to = koszul_basis(k.d, p + 1);
    std::unordered_map<std::uint32_t, int> row_of;
    for (std::size_t r = 0; r < to.size(); ++r) row_of[to[r]] = static_cast<int>(r);
    ComplexMatrix map = ComplexMatrix::Zero(
        static_cast<Eigen::Index>(to.size()) * n,
        static_cast<Eigen::Index>(from.size()) * n);
    for (std::size_t c = 0; c < from.size(); ++c) {
      const std::uint32_t s = from[c];
      for (int i = 0; i < k.d; ++i) {
        if (s & (1u << i)) continue;
        const int below = std::popcount(s & ((1u << i) - 1u));
        const double sign = (below % 2 == 0) ? 1.0 : -1.0;
        const int r = row_of.at(s | (1u << i));
        map.block(r * n, static_cast<Eigen::Index>(c) * n, n, n) = sign * t[i];
      }
    }
    k.boundary.push_back(std::move(map));
  }
  return k;
}

double boundary_square_residual(const KoszulComplex& k) {
  double worst = 0.0;
  for (std::size_t p = 0; p + 1 < k.boundary.size(); ++p) {
    const ComplexMatrix& first = k.boundary[p];
    const ComplexMatrix& second = k.boundary[p + 1];
    worst = std::max(worst, (second * first).norm() /
                                (1.0 + second.norm() * first.norm()));
  }
  return worst;
}

int Homology::euler_characteristic() const {
  int chi = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    chi += (p % 2 == 0 ? 1 : -1) * dims[p];
  }
  return chi;
}

Homology homology_dims(const KoszulComplex& k, double rel_tol) {
  Homology h;
  for (const ComplexMatrix& map : k.boundary) {
    h.ranks.push_back(numerical_rank(map, rel_tol));
  }
  for (int p = 0; p <= k.d; ++p) {
    const int kernel = p < k.d ? k.stage_dim(p) - h.ranks[p] : k.stage_dim(p);
    const int image = p > 0 ? h.ranks[p - 1] : 0;
    const int dim = kernel - image;
    if (dim < 0) {
      throw Error(ErrorKind::kNegativeHomology,
                  "stage " + std::to_string(p) + " has kernel " +
                      std::to_string(kernel) + " < image " +
                      std::to_string(image));
    }
    h.dims.push_back(dim);
  }
  return h;
}

Homology homology_dims(const CommutingTuple& t, double rel_tol) {
  return homology_dims(boundary_maps(t), rel_tol);
}

SpectrumReport membership_report(const CommutingTuple& t, const PointCd& lambda,
                                 double rel_tol) {
  const CommutingTuple s = shift(t, lambda);
  const KoszulComplex k = boundary_maps(s);
  const Homology h = homology_dims(k, rel_tol);
  const int d = t.arity();

  SpectrumReport report;
  report.point = lambda;
  report.homology = h.dims;
  report.point_spectrum = t.dim() - h.ranks[0] > 0;
  report.left_margin = injectivity_margin(k.boundary[0]);
  report.right_margin = injectivity_margin(adjoint_column(s));
  report.left = report.left_margin <= rel_tol;
  report.right = report.right_margin <= rel_tol;
  report.harte = report.left || report.right;
  report.taylor = std::any_of(h.dims.begin(), h.dims.end(),
                              [](int v) { return v > 0; });
  report.pi.assign(static_cast<std::size_t>(d) + 1, false);
  report.delta.assign(static_cast<std::size_t>(d) + 1, false);
  for (int kk = 0; kk <= d; ++kk) {
    for (int p = 0; p <= kk; ++p) report.pi[kk] = report.pi[kk] || h.dims[p] > 0;
    for (int p = d - kk; p <= d; ++p) {
      report.delta[kk] = report.delta[kk] || h.dims[p] > 0;
    }
  }
  return report;
}

std::vector<PointCd> joint_eigenvalues(const CommutingTuple& t,
                                       const JointEigenOptions& options) {
  const int n = t.dim();
  const int d = t.arity();
  double best_mass = std::numeric_limits<double>::infinity();
  std::vector<PointCd> best;
  for (int attempt = 0; attempt < std::max(1, options.max_attempts); ++attempt) {
    Rng rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
    ComplexMatrix combo = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < d; ++i) combo += rng.complex_normal() * t[i];
    const Schur schur = schur_triangularize(combo);

    std::vector<ComplexMatrix> transported;
    double mass = 0.0;
    for (int i = 0; i < d; ++i) {
      ComplexMatrix r = schur.q.adjoint() * t[i] * schur.q;
      const ComplexMatrix lower = r.triangularView<Eigen::StrictlyLower>();
      mass = std::max(mass, lower.norm() / (1.0 + t[i].norm()));
      transported.push_back(std::move(r));
    }
    const double residual = commutator_residual(transported).residual;

    std::vector<PointCd> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      std::vector<Complex> coords(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) coords[i] = transported[i](j, j);
      raw.emplace_back(std::move(coords));
    }
    double scale = 1.0;
    for (const PointCd& p : raw) scale = std::max(scale, p.norm2());
    std::vector<PointCd> points = cluster_points(raw, options.cluster_tol * scale);
    if (mass <= options.triangular_tol && residual <= 1e-7) return points;
    if (mass < best_mass) {
      best_mass = mass;
      best = std::move(points);
    }
  }
  // No combination triangularized the whole family; accept the best candidate
  // set only if every point is confirmed by the Koszul complex.
  for (const PointCd& p : best) {
    if (!membership_report(t, p).taylor) {
      throw Error(ErrorKind::kGenericityFailure,
                  "off-triangular mass " + std::to_string(best_mass) +
                      " after " + std::to_string(options.max_attempts) +
                      " attempts");
    }
  }
  return best;
}

double hausdorff_distance(const std::vector<PointCd>& a,
                          const std::vector<PointCd>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<PointCd>& x, const std::vector<PointCd>& y) {
    double worst = 0.0;
    for (const PointCd& p : x) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const PointCd& q : y) nearest = std::min(nearest, distance(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<GridPoint> grid_scan(const CommutingTuple& t, const GridSlice& slice,
                                 double rel_tol, int workers) {
  if (slice.fixed.dim() != t.arity()) {
    throw Error(ErrorKind::kShapeMismatch, "slice point dimension");
  }
  if (slice.varying < 0 || slice.varying >= t.arity()) {
    throw Error(ErrorKind::kInvalidArgument, "varying coordinate out of range");
  }
  if (slice.re_steps < 1 || slice.im_steps < 1) {
    throw Error(ErrorKind::kInvalidArgument, "grid needs at least one node per axis");
  }
  const std::int64_t count =
      static_cast<std::int64_t>(slice.re_steps) * slice.im_steps;
  if (count > kGridGuard) {
    throw Error(ErrorKind::kSizeGuard,
                std::to_string(count) + " grid points exceed " +
                    std::to_string(kGridGuard));
  }
  auto node = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  };
  std::vector<GridPoint> out(static_cast<std::size_t>(count));
  parallel_for(out.size(), workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / slice.im_steps);
    const int j = static_cast<int>(idx % slice.im_steps);
    const Complex z(node(slice.re_min, slice.re_max, slice.re_steps, i),
                    node(slice.im_min, slice.im_max, slice.im_steps, j));
    std::vector<Complex> coords = slice.fixed.coords();
    coords[slice.varying] = z;
    out[idx].value = z;
    out[idx].report = membership_report(t, PointCd(std::move(coords)), rel_tol);
  });
  return out;
}

double cochain_residual(const CommutingTuple& t, double exponent,
                        double rel_tol) {
  const SphericalPolar polar = spherical_polar(t, rel_tol);
  const CommutingTuple transformed = aluthge(t, polar, exponent);
  const KoszulComplex source = boundary_maps(t);
  const KoszulComplex target = boundary_maps(transformed);
  const ComplexMatrix pt = polar.power(exponent);
  const int d = t.arity();
  double worst = 0.0;
  for (int p = 0; p < d; ++p) {
    const ComplexMatrix lhs =
        block_diagonal(pt, binomial(d, p + 1)) * source.boundary[p];
    const ComplexMatrix rhs = target.boundary[p] * block_diagonal(pt, binomial(d, p));
    worst = std::max(worst, relative_residual(lhs, rhs));
  }
  return worst;
}

}  // namespace aluthge
