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

#include "aluthge/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "aluthge/error.hpp"
#include "aluthge/random.hpp"

namespace aluthge {

namespace {

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

ComplexMatrix basis_projector(int n, int k) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(k, k) = 1.0;
  return e;
}

bool spectrum_order(const PointCd& a, const PointCd& b) {
  if (a.norm2() != b.norm2()) return a.norm2() > b.norm2();
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

// Keeps the first of any points closer than tol, then sorts like
// joint_eigenvalues.
std::vector<PointCd> dedupe(std::vector<PointCd> points, double tol) {
  std::vector<PointCd> out;
  for (PointCd& p : points) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const PointCd& q) {
      return distance(p, q) <= tol;
    });
    if (!seen) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), spectrum_order);
  return out;
}

std::vector<PointCd> mapped_points(const std::vector<Polynomial>& polys,
                                   const std::vector<Complex>& mu) {
  std::vector<PointCd> points;
  points.reserve(mu.size());
  for (const Complex& m : mu) {
    std::vector<Complex> coords;
    coords.reserve(polys.size());
    for (const Polynomial& p : polys) coords.push_back(evaluate(p, m));
    points.emplace_back(std::move(coords));
  }
  return points;
}

ComplexMatrix random_unitary(Rng& rng, int n) {
  const ComplexMatrix g = rng.complex_gaussian(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the phases so Q is a function of G alone.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

std::vector<Complex> unit_disk_eigenvalues(Rng& rng, int count) {
  std::vector<Complex> mu;
  double largest = 0.0;
  for (int i = 0; i < count; ++i) {
    mu.push_back(rng.complex_normal());
    largest = std::max(largest, std::abs(mu.back()));
  }
  for (Complex& m : mu) m /= largest;
  return mu;
}

// Largest and second-largest norms over the mapped points.
std::pair<double, double> top_two(const std::vector<PointCd>& points) {
  double first = 0.0, second = 0.0;
  for (const PointCd& p : points) {
    if (p.norm2() > first) {
      second = first;
      first = p.norm2();
    } else {
      second = std::max(second, p.norm2());
    }
  }
  return {first, second};
}

}  // namespace

ComplexMatrix weighted_shift(const ShiftSpec& spec) {
  for (double w : spec.weights) {
    require(std::isfinite(w) && w > 0.0, ErrorKind::kInvalidArgument,
            "shift weights must be positive");
  }
  const int n = spec.size();
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) s(k + 1, k) = spec.weights[k];
  return s;
}

ComplexMatrix unilateral_shift(int n) {
  require(n >= 1, ErrorKind::kInvalidArgument, "shift size must be >= 1");
  return weighted_shift(ShiftSpec{std::vector<double>(n - 1, 1.0)});
}

TwoVarShiftSpec TwoVarShiftSpec::product(const std::vector<double>& omega,
                                         const std::vector<double>& tau) {
  TwoVarShiftSpec spec;
  spec.n1 = static_cast<int>(omega.size());
  spec.n2 = static_cast<int>(tau.size());
  for (int k1 = 0; k1 < spec.n1; ++k1) {
    for (int k2 = 0; k2 < spec.n2; ++k2) {
      spec.alpha.push_back(omega[k1]);
      spec.beta.push_back(tau[k2]);
    }
  }
  return spec;
}

CommutingTuple two_variable_shift(const TwoVarShiftSpec& spec) {
  require(spec.n1 >= 1 && spec.n2 >= 1, ErrorKind::kInvalidArgument,
          "two-variable shift needs n1, n2 >= 1");
  const std::size_t count = static_cast<std::size_t>(spec.n1) * spec.n2;
  require(spec.alpha.size() == count && spec.beta.size() == count,
          ErrorKind::kShapeMismatch, "weight arrays must have n1 * n2 entries");
  for (std::size_t i = 0; i < count; ++i) {
    require(std::isfinite(spec.alpha[i]) && spec.alpha[i] > 0.0 &&
                std::isfinite(spec.beta[i]) && spec.beta[i] > 0.0,
            ErrorKind::kInvalidArgument, "shift weights must be positive");
  }
  const int n = static_cast<int>(count);
  auto index = [&](int k1, int k2) { return k1 * spec.n2 + k2; };
  ComplexMatrix t1 = ComplexMatrix::Zero(n, n);
  ComplexMatrix t2 = ComplexMatrix::Zero(n, n);
  for (int k1 = 0; k1 < spec.n1; ++k1) {
    for (int k2 = 0; k2 < spec.n2; ++k2) {
      if (k1 + 1 < spec.n1) t1(index(k1 + 1, k2), index(k1, k2)) = spec.a(k1, k2);
      if (k2 + 1 < spec.n2) t2(index(k1, k2 + 1), index(k1, k2)) = spec.b(k1, k2);
    }
  }
  return CommutingTuple({std::move(t1), std::move(t2)}, 1e-12);
}

Ex14Pair ex14_pair(int n, double t) {
  require(n >= 3, ErrorKind::kInvalidArgument, "ex14 needs N >= 3");
  require(t > 0.0 && t <= 1.0, ErrorKind::kInvalidArgument,
          "ex14 needs t in (0, 1]");
  const ComplexMatrix u_adj = unilateral_shift(n).adjoint();
  const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
  const ComplexMatrix off_e0 = ComplexMatrix::Identity(n, n) - basis_projector(n, 0);
  return Ex14Pair{t, CommutingTuple({u_adj, zero}), {off_e0 * u_adj, zero}};
}

std::vector<ComplexMatrix> Ex24Pair::expected_aluthge(double t) const {
  const ComplexMatrix u = unilateral_shift(n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix e0 = basis_projector(n, 0);
  const ComplexMatrix first =
      kron(id, std::pow(2.0, -t / 2.0) * e0 * u.adjoint() + (id - e0) * u.adjoint());
  return {first, kron(u, id)};
}

Ex24Pair ex24_pair(int n) {
  require(n >= 4, ErrorKind::kInvalidArgument, "ex24 needs N >= 4");
  const ComplexMatrix u = unilateral_shift(n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix e0 = basis_projector(n, 0);
  const ComplexMatrix perp = id - e0;
  const double root2 = std::sqrt(2.0);

  std::vector<bool> interior(static_cast<std::size_t>(n) * n);
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = 0; k2 < n; ++k2) interior[k1 * n + k2] = k1 != n - 1;
  }
  return Ex24Pair{n,
                  CommutingTuple({kron(id, u.adjoint()), kron(u, id)}),
                  std::move(interior),
                  kron(id, e0 + root2 * perp),
                  kron(id, u.adjoint() / root2),
                  kron(u, e0 + perp / root2)};
}

double masked_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                           const std::vector<bool>& interior) {
  require(a.rows() == b.rows() && a.cols() == b.cols() &&
              a.rows() == static_cast<Eigen::Index>(interior.size()) &&
              a.cols() == a.rows(),
          ErrorKind::kShapeMismatch, "masked comparison shapes");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!interior[i]) continue;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (interior[j]) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

Ex41Matrix ex41_matrix(double k) {
  require(std::isfinite(k) && k > 1.0, ErrorKind::kInvalidArgument,
          "ex41 needs k > 1");
  ComplexMatrix t(2, 2), p(2, 2), v(2, 2);
  t << 1.0, k, -k, -1.0;
  p << k, 1.0, 1.0, k;
  v << 0.0, 1.0, -1.0, 0.0;
  const ComplexMatrix duggal = -t.adjoint();
  return Ex41Matrix{k,      CommutingTuple({t}), t, p, v, duggal,
                    std::sqrt(k * k - 1.0), k + 1.0};
}

Complex evaluate(const Polynomial& p, Complex x) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexMatrix evaluate(const Polynomial& p, const ComplexMatrix& a) {
  require(a.rows() == a.cols(), ErrorKind::kNonSquare, "polynomial argument");
  const Eigen::Index n = a.rows();
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = (acc * a).eval();
    acc.diagonal().array() += *it;
  }
  return acc;
}

PolynomialTuple polynomial_tuple(const ComplexMatrix& a,
                                 const std::vector<Polynomial>& polys) {
  require(a.rows() == a.cols(), ErrorKind::kNonSquare, "polynomial_tuple");
  require_finite(a, "polynomial_tuple");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kConvergenceFailure, "eigenvalues of A");
  }
  const ComplexVector values = solver.eigenvalues();
  return polynomial_tuple(a, polys,
                          std::vector<Complex>(values.begin(), values.end()));
}

PolynomialTuple polynomial_tuple(const ComplexMatrix& a,
                                 const std::vector<Polynomial>& polys,
                                 const std::vector<Complex>& eigenvalues_of_a) {
  require(a.rows() == a.cols(), ErrorKind::kNonSquare, "polynomial_tuple");
  require_finite(a, "polynomial_tuple");
  require(!polys.empty(), ErrorKind::kInvalidArgument, "need at least one polynomial");
  for (const Polynomial& p : polys) {
    require(!p.empty() && static_cast<int>(p.size()) <= kMaxPolynomialDegree + 1,
            ErrorKind::kInvalidArgument,
            "polynomial degree must lie in [0, " +
                std::to_string(kMaxPolynomialDegree) + "]");
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(polys.size());
  for (const Polynomial& p : polys) mats.push_back(evaluate(p, a));
  std::vector<PointCd> points = mapped_points(polys, eigenvalues_of_a);
  double scale = 1.0;
  for (const PointCd& p : points) scale = std::max(scale, p.norm2());
  return PolynomialTuple{CommutingTuple(std::move(mats)),
                         dedupe(std::move(points), 1e-6 * scale)};
}

std::string_view to_string(CorpusStyle style) {
  switch (style) {
    case CorpusStyle::kDiagonalizable: return "diagonalizable";
    case CorpusStyle::kJordanMixed: return "jordan-mixed";
    case CorpusStyle::kShiftBased: return "shift-based";
  }
  return "unknown";
}

CorpusEntry random_commuting(std::uint64_t seed, int n, int d,
                             CorpusStyle style) {
  require(n >= 1 && n <= 16, ErrorKind::kInvalidArgument, "n must lie in [1, 16]");
  require(d >= 1 && d <= 4, ErrorKind::kInvalidArgument, "d must lie in [1, 4]");
  const bool jordan = style == CorpusStyle::kJordanMixed;
  require(!jordan || n >= 3, ErrorKind::kInvalidArgument,
          "jordan-mixed needs n >= 3");
  Rng rng(seed);

  constexpr int kMaxDraws = 1000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::vector<Complex> mu = unit_disk_eigenvalues(rng, jordan ? n - 1 : n);
    std::vector<Polynomial> polys(static_cast<std::size_t>(d));
    for (Polynomial& p : polys) {
      p = {rng.complex_normal(), rng.complex_normal(), rng.complex_normal()};
    }
    const std::vector<PointCd> points = mapped_points(polys, mu);
    const auto [r, second] = top_two(points);
    if (!(r > 0.0) || second > kCorpusGap * r) continue;

    ComplexMatrix a;
    std::vector<Complex> eigenvalues = mu;
    switch (style) {
      case CorpusStyle::kDiagonalizable: {
        const ComplexMatrix s = ComplexMatrix::Identity(n, n) +
                                0.5 * rng.complex_gaussian(n, n) / std::sqrt(n);
        ComplexMatrix diag = ComplexMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) diag(i, i) = mu[i];
        a = s * diag * s.inverse();
        break;
      }
      case CorpusStyle::kJordanMixed: {
        // The block sits on the eigenvalue whose image has the smallest norm.
        std::size_t block = 0;
        for (std::size_t i = 1; i < points.size(); ++i) {
          if (points[i].norm2() < points[block].norm2()) block = i;
        }
        eigenvalues.insert(eigenvalues.begin() + static_cast<long>(block) + 1,
                           mu[block]);
        ComplexMatrix j = ComplexMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) j(i, i) = eigenvalues[i];
        j(static_cast<Eigen::Index>(block), static_cast<Eigen::Index>(block) + 1) = 1.0;
        const ComplexMatrix q = random_unitary(rng, n);
        a = q * j * q.adjoint();
        break;
      }
      case CorpusStyle::kShiftBased: {
        a = ComplexMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) a(i, i) = mu[i];
        for (int i = 0; i + 1 < n; ++i) a(i + 1, i) = rng.uniform(0.5, 1.5);
        break;
      }
    }
    PolynomialTuple built = polynomial_tuple(a, polys, eigenvalues);
    return CorpusEntry{seed, style, std::move(built.tuple),
                       std::move(built.spectrum), r};
  }
  throw Error(ErrorKind::kNumericalFailure,
              "no polynomial draw met the spectral gap");
}

std::vector<CorpusEntry> corpus(std::uint64_t seed, int count, int max_n,
                                int max_d) {
  require(count >= 0, ErrorKind::kInvalidArgument, "count must be >= 0");
  require(max_n >= 3 && max_n <= 16, ErrorKind::kInvalidArgument,
          "max_n must lie in [3, 16]");
  require(max_d >= 1 && max_d <= 4, ErrorKind::kInvalidArgument,
          "max_d must lie in [1, 4]");
  std::vector<CorpusEntry> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
    const int n = rng.integer(3, max_n);
    const int d = rng.integer(1, max_d);
    const std::uint64_t entry_seed = rng.bits();
    out.push_back(random_commuting(entry_seed, n, d,
                                   static_cast<CorpusStyle>(i % 3)));
  }
  return out;
}

CommutingTuple direct_sum_scalar(const CommutingTuple& t, Complex c, int m) {
  require(m >= 1, ErrorKind::kInvalidArgument, "block size must be >= 1");
  const int n = t.dim();
  std::vector<ComplexMatrix> mats;
  for (int i = 0; i < t.arity(); ++i) {
    ComplexMatrix s = ComplexMatrix::Zero(n + m, n + m);
    s.topLeftCorner(n, n) = t[i];
    if (i == 0) s.bottomRightCorner(m, m).diagonal().setConstant(c);
    mats.push_back(std::move(s));
  }
  return CommutingTuple(std::move(mats), t.commute_tol());
}

}  // namespace aluthge
