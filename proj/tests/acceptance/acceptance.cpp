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

// One PASS/FAIL line per acceptance criterion. Tolerances and budgets are
// pinned below; the process exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aluthge/koszul.hpp"
#include "aluthge/models.hpp"
#include "aluthge/polar.hpp"
#include "aluthge/radius.hpp"
#include "aluthge/random.hpp"
#include "aluthge_cli/reproduce.hpp"

namespace aluthge {
namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kCorpusCount = 50;
constexpr int kMaxN = 8;
constexpr int kMaxD = 3;
constexpr int kOffSpectrumSamples = 20;
constexpr int kMaxIter = 500;
constexpr double kStopTol = 1e-9;

constexpr double kEx41NormTol = 1e-10;
constexpr double kEx41TwoStepTol = 1e-12;
constexpr double kEx41RadiusTol = 1e-10;
constexpr double kEx41TimeLimit = 1.0;

constexpr double kLimitTol = 1e-3;
constexpr double kSandwichSlack = 1e-8;
constexpr double kCorpusTimeLimit = 60.0;

constexpr double kHausdorffTol = 1e-6;
constexpr double kMembershipTolerance = 1e-8;

constexpr double kBoundarySquareTol = 1e-12;

constexpr int kPowerKMax = 40;
constexpr double kPowerTol = 1e-3;
constexpr double kElementaryTol = 1e-6;
constexpr double kEx41PowerTol = 1e-12;

constexpr double kClosedFormTol = 1e-12;
constexpr int kEx24Size = 16;

constexpr double kLadderSlack = 1e-10;
constexpr double kLadderRadiusSlack = 1e-8;
constexpr double kLadderFitTol = 1e-3;

constexpr int kDeterminismCount = 12;
constexpr int kDeterminismWorkers = 3;

const std::vector<double> kLimitExponents = {0.25, 0.5, 0.75};
const std::vector<double> kInvarianceExponents = {0.25, 0.5, 0.75, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

const std::vector<CorpusEntry>& the_corpus() {
  static const std::vector<CorpusEntry> entries = corpus(kSeed, kCorpusCount, kMaxN, kMaxD);
  return entries;
}

const std::vector<double>& corpus_radii() {
  static const std::vector<double> radii = [] {
    std::vector<double> r;
    for (const CorpusEntry& e : the_corpus()) r.push_back(radius_joint_eig(e.tuple));
    return r;
  }();
  return radii;
}

std::vector<PointCd> sample_points(const CorpusEntry& e, std::size_t i) {
  std::vector<PointCd> points = joint_eigenvalues(e.tuple);
  Rng rng(kSeed * 0x51ed270b27dULL + i);
  const double box = 1.2 * tuple_two_norm(e.tuple);
  for (int s = 0; s < kOffSpectrumSamples; ++s) {
    std::vector<Complex> coords;
    for (int c = 0; c < e.tuple.arity(); ++c) {
      coords.emplace_back(rng.uniform(-box, box), rng.uniform(-box, box));
    }
    points.emplace_back(std::move(coords));
  }
  return points;
}

Outcome ex41_counterexample() {
  Outcome o;
  const Ex41Matrix ex = ex41_matrix(2.0);
  double norm_err = 0.0;
  CommutingTuple x = ex.tuple;
  std::vector<ComplexMatrix> second;
  for (int n = 1; n <= 20; ++n) {
    x = aluthge(x, 1.0);
    norm_err = std::max(norm_err, std::abs(tuple_two_norm(x) - 3.0));
    if (n == 2) second = x.matrices();
  }
  const double two_step = max_abs(second[0] - ex.t);
  const double r = radius_joint_eig(ex.tuple);
  const double r_err = std::abs(r - std::sqrt(3.0));
  o.pass = norm_err <= kEx41NormTol && two_step <= kEx41TwoStepTol && r_err <= kEx41RadiusTol &&
           std::abs(3.0 - r) > kEx41NormTol;
  o.detail = "norm err " + fmt(norm_err) + ", two-step err " + fmt(two_step) + ", radius err " +
             fmt(r_err) + ", limit 3 vs radius " + fmt(r);
  return o;
}

Outcome limit_is_radius() {
  Outcome o;
  IterateOptions opts;
  opts.max_iter = kMaxIter;
  opts.stop_tol = kStopTol;
  double worst_limit = 0.0, worst_sandwich = 0.0;
  int failures = 0, errors = 0, max_steps = 0;
  for (std::size_t i = 0; i < the_corpus().size(); ++i) {
    const double r = corpus_radii()[i];
    for (double t : kLimitExponents) {
      try {
        const IterateTrace trace = iterate(the_corpus()[i].tuple, t, opts);
        double previous = trace.initial_norm2;
        double sandwich = std::max(0.0, r - previous);
        for (const IterateEntry& e : trace.entries) {
          sandwich = std::max({sandwich, r - e.norm2, e.norm2 - previous});
          previous = e.norm2;
        }
        const double gap = std::abs(trace.limit_estimate - r);
        worst_limit = std::max(worst_limit, gap);
        worst_sandwich = std::max(worst_sandwich, sandwich);
        max_steps = std::max(max_steps, static_cast<int>(trace.entries.size()));
        failures += gap > kLimitTol || sandwich > kSandwichSlack;
      } catch (const Error&) {
        ++errors;
      }
    }
  }
  o.pass = failures == 0 && errors == 0;
  o.detail = std::to_string(failures + errors) + " of " +
             std::to_string(the_corpus().size() * kLimitExponents.size()) +
             " runs off; worst |limit - r| " + fmt(worst_limit) + ", worst sandwich " +
             fmt(worst_sandwich) + ", max steps " + std::to_string(max_steps);
  return o;
}

Outcome spectral_invariance() {
  Outcome o;
  double worst_h = 0.0;
  int flag_bad = 0, errors = 0, probes = 0;
  for (std::size_t i = 0; i < the_corpus().size(); ++i) {
    const CorpusEntry& e = the_corpus()[i];
    const std::vector<PointCd> before = joint_eigenvalues(e.tuple);
    const std::vector<PointCd> points = sample_points(e, i);
    for (double t : kInvarianceExponents) {
      try {
        const CommutingTuple d = aluthge(e.tuple, t);
        worst_h = std::max(worst_h, hausdorff_distance(before, joint_eigenvalues(d)));
        for (const PointCd& lambda : points) {
          ++probes;
          const SpectrumReport a = membership_report(e.tuple, lambda, kMembershipTolerance);
          const SpectrumReport b = membership_report(d, lambda, kMembershipTolerance);
          const bool zero = lambda.is_zero();
          // Equal flags, or a one-sided inclusion that may gain the origin.
          auto sandwich = [&](bool x, bool y) { return x == y || (y && !x && zero) ? 0 : 1; };
          int bad = (a.point_spectrum != b.point_spectrum) + (a.left != b.left) +
                    (a.harte != b.harte) + sandwich(a.right, b.right);
          for (std::size_t k = 0; k < a.delta.size(); ++k) bad += sandwich(a.delta[k], b.delta[k]);
          flag_bad += bad > 0;
        }
      } catch (const Error&) {
        ++errors;
      }
    }
  }
  o.pass = worst_h <= kHausdorffTol && flag_bad == 0 && errors == 0;
  o.detail = "worst Hausdorff " + fmt(worst_h) + ", flag disagreements " +
             std::to_string(flag_bad) + " of " + std::to_string(probes) + " probes";
  return o;
}

Outcome koszul_soundness() {
  Outcome o;
  double worst_square = 0.0;
  int euler_bad = 0, display_bad = 0, homology_bad = 0, compared = 0, errors = 0;
  auto sound = [&](const CommutingTuple& t) {
    const KoszulComplex k = boundary_maps(t);
    for (std::size_t p = 0; p + 1 < k.boundary.size(); ++p) {
      const ComplexMatrix& a = k.boundary[p];
      const ComplexMatrix& b = k.boundary[p + 1];
      worst_square = std::max(worst_square, (b * a).norm() / (1.0 + a.norm() * b.norm()));
    }
    const Homology h = homology_dims(k);
    int chi = 0;
    for (std::size_t p = 0; p < h.dims.size(); ++p) chi += (p % 2 ? -1 : 1) * h.dims[p];
    euler_bad += chi != 0;
    if (t.arity() == 2) {
      ComplexMatrix d0(2 * t.dim(), t.dim()), d1(t.dim(), 2 * t.dim());
      d0 << t[0], t[1];
      d1 << -t[1], t[0];
      display_bad += !(k.boundary[0] == d0 && k.boundary[1] == d1);
    }
  };
  for (std::size_t i = 0; i < the_corpus().size(); ++i) {
    const CorpusEntry& e = the_corpus()[i];
    const std::vector<PointCd> points = sample_points(e, i);
    try {
      sound(e.tuple);
      const bool invertible_p = spherical_polar(e.tuple).rank_p == e.tuple.dim();
      for (double t : kInvarianceExponents) {
        const CommutingTuple d = aluthge(e.tuple, t);
        sound(d);
        std::vector<PointCd> tested = points;
        tested.push_back(PointCd::zero(e.tuple.arity()));
        for (const PointCd& lambda : tested) {
          if (lambda.is_zero() && !invertible_p) continue;
          ++compared;
          homology_bad += homology_dims(shift(e.tuple, lambda), kMembershipTolerance).dims !=
                          homology_dims(shift(d, lambda), kMembershipTolerance).dims;
        }
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  o.pass = worst_square <= kBoundarySquareTol && euler_bad == 0 && display_bad == 0 &&
           homology_bad == 0 && errors == 0;
  o.detail = "worst D^{p+1}D^p " + fmt(worst_square) + ", Euler != 0: " +
             std::to_string(euler_bad) + ", d=2 display mismatches " + std::to_string(display_bad) +
             ", homology mismatches " + std::to_string(homology_bad) + " of " +
             std::to_string(compared);
  return o;
}

Outcome estimator_cross_validation() {
  Outcome o;
  int power_off = 0, elementary_off = 0;
  double worst_power = 0.0, worst_elementary = 0.0;
  for (std::size_t i = 0; i < the_corpus().size(); ++i) {
    const double r = corpus_radii()[i];
    const double p = std::abs(radius_power(the_corpus()[i].tuple, kPowerKMax).value - r);
    const double m = std::abs(radius_elementary(the_corpus()[i].tuple) - r);
    worst_power = std::max(worst_power, p);
    worst_elementary = std::max(worst_elementary, m);
    power_off += p > kPowerTol;
    elementary_off += m > kElementaryTol;
  }
  const PowerEstimate ex = radius_power(ex41_matrix(2.0).tuple, 2, 0.0);
  const double ex_err = std::abs(ex.value - std::sqrt(3.0));
  o.pass = power_off == 0 && elementary_off == 0 && ex_err <= kEx41PowerTol && ex.k_reached == 2;
  o.detail = "power off on " + std::to_string(power_off) + "/" +
             std::to_string(the_corpus().size()) + " (worst " + fmt(worst_power) +
             "), elementary off on " + std::to_string(elementary_off) + " (worst " +
             fmt(worst_elementary) + "), ex41 power at k=2 err " + fmt(ex_err);
  return o;
}

Outcome structural_examples() {
  Outcome o;
  double worst14 = 0.0, worst24 = 0.0;
  for (int j = 1; j <= 10; ++j) {
    const double t = 0.1 * j;
    const Ex14Pair ex = ex14_pair(8, t);
    const CommutingTuple d = aluthge(ex.tuple, t);
    for (int i = 0; i < 2; ++i) worst14 = std::max(worst14, max_abs(d[i] - ex.expected_aluthge[i]));
  }
  const Ex24Pair ex = ex24_pair(kEx24Size);
  const SphericalPolar polar = spherical_polar(ex.tuple);
  worst24 = std::max({masked_max_abs_diff(polar.p, ex.expected_p, ex.interior),
                      masked_max_abs_diff(polar.v[0], ex.expected_v1, ex.interior),
                      masked_max_abs_diff(polar.v[1], ex.expected_v2, ex.interior)});
  for (double t : kInvarianceExponents) {
    const CommutingTuple d = aluthge(ex.tuple, polar, t);
    const std::vector<ComplexMatrix> expected = ex.expected_aluthge(t);
    for (int i = 0; i < 2; ++i)
      worst24 = std::max(worst24, masked_max_abs_diff(d[i], expected[i], ex.interior));
  }
  o.pass = worst14 <= kClosedFormTol && worst24 <= kClosedFormTol;
  o.detail = "ex14 worst " + fmt(worst14) + " over ten t, ex24 (N=16) worst masked " + fmt(worst24);
  return o;
}

// ||T^k||_2 from the explicit words T_{i_1} ... T_{i_k}: the square root of
// || sum_w W^* W ||.
double word_power_norm(const std::vector<ComplexMatrix>& ms, int k) {
  const Eigen::Index n = ms.front().rows();
  std::vector<ComplexMatrix> words = {ComplexMatrix::Identity(n, n)};
  for (int step = 0; step < k; ++step) {
    std::vector<ComplexMatrix> next;
    next.reserve(words.size() * ms.size());
    for (const ComplexMatrix& w : words)
      for (const ComplexMatrix& m : ms) next.push_back(m * w);
    words = std::move(next);
  }
  ComplexMatrix g = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& w : words) g.noalias() += w.adjoint() * w;
  return std::sqrt(Eigen::SelfAdjointEigenSolver<ComplexMatrix>(g).eigenvalues().maxCoeff());
}

double excess(double lhs, double rhs) { return std::max(0.0, lhs - rhs) / std::max(1.0, rhs); }

Outcome inequality_ladder() {
  Outcome o;
  double submult = 0.0, contract = 0.0, interp = 0.0, monotone = 0.0, below = 0.0, fit = 0.0;
  int errors = 0;
  LadderOptions opts;
  for (std::size_t i = 0; i < the_corpus().size(); ++i) {
    const CommutingTuple& t = the_corpus()[i].tuple;
    const double r = corpus_radii()[i];
    // ||T^k|| by an independent route: the explicit words.
    std::vector<double> norms = {1.0};
    for (int k = 1; k <= opts.columns + 1; ++k) norms.push_back(word_power_norm(t.matrices(), k));
    for (int k = 1; k <= opts.columns; ++k) {
      submult = std::max(submult, excess(norms[k + 1], norms[1] * norms[k]));
    }
    for (double s : kLimitExponents) {
      try {
        const LadderTable table = ladder_diagnostics(t, s, opts);
        const CommutingTuple d = aluthge(t, s);
        for (int k = 1; k <= opts.columns; ++k) {
          const double dk = word_power_norm(d.matrices(), k);
          contract = std::max(contract, excess(dk, norms[k]));
          const double lo = std::min(s, 1.0 - s), hi = std::max(s, 1.0 - s);
          // ||(Delta T)^k|| <= ||T^{k+1}||^a ||T^{k-1}||^b ||T||^{|1-2t|}
          interp = std::max(interp, excess(dk, std::pow(norms[k + 1], lo) *
                                                   std::pow(norms[k - 1], hi) *
                                                   std::pow(norms[1], hi - lo)));
        }
        for (std::size_t n = 0; n < table.cells.size(); ++n) {
          for (int k = 1; k <= opts.columns; ++k) {
            const double cell = table.cells[n][k - 1];
            if (n + 1 < table.cells.size()) {
              monotone = std::max(monotone, excess(table.cells[n + 1][k - 1], cell));
            }
            below = std::max(below, r - std::pow(cell, 1.0 / k));
          }
        }
        for (int k = 2; k <= opts.columns; ++k) {
          const double target = std::pow(table.limits[0], k);
          fit = std::max(fit, std::abs(table.limits[k - 1] - target) / target);
        }
      } catch (const Error&) {
        ++errors;
      }
    }
  }
  o.pass = submult <= kLadderSlack && contract <= kLadderSlack && interp <= kLadderSlack &&
           monotone <= kLadderSlack && below <= kLadderRadiusSlack && fit <= kLadderFitTol &&
           errors == 0;
  o.detail = "excess: submult " + fmt(submult) + ", contraction " + fmt(contract) +
             ", interpolation " + fmt(interp) + ", column increase " + fmt(monotone) +
             ", r - cell^(1/k) " + fmt(below) + ", L_k fit " + fmt(fit);
  return o;
}

Outcome determinism() {
  Outcome o;
  int differ = 0;
  std::string which;
  for (const std::string& id : cli::reproduce_cases()) {
    cli::ReproduceConfig base;
    base.seed = kSeed;
    base.count = kDeterminismCount;
    cli::ReproduceConfig parallel = base;
    parallel.workers = kDeterminismWorkers;
    const std::string a = cli::reproduce(id, base).to_json().dump(2);
    const std::string b = cli::reproduce(id, base).to_json().dump(2);
    const std::string c = cli::reproduce(id, parallel).to_json().dump(2);
    if (a != b || a != c) {
      ++differ;
      which += " " + id;
    }
  }
  o.pass = differ == 0;
  o.detail = std::to_string(differ) + " of " + std::to_string(cli::reproduce_cases().size()) +
             " cases differ across runs or worker counts" + which;
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace aluthge

int main() {
  using namespace aluthge;
  const std::vector<Criterion> criteria = {
      {1, "Duggal counterexample, k=2", kEx41TimeLimit, ex41_counterexample},
      {2, "transform norm limit equals the joint radius", kCorpusTimeLimit, limit_is_radius},
      {3, "spectral invariance under the transform", kCorpusTimeLimit, spectral_invariance},
      {4, "Koszul complex soundness", 0.0, koszul_soundness},
      {5, "radius estimator cross-validation", 0.0, estimator_cross_validation},
      {6, "closed-form shift examples", 0.0, structural_examples},
      {7, "inequality ladder", 0.0, inequality_ladder},
      {8, "reproduce is deterministic", 0.0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::string detail = o.detail + "; " + fmt(seconds) + " s";
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      pass = false;
      detail += " (limit " + fmt(c.time_limit) + " s)";
    }
    failed += !pass;
    std::printf("criterion %d %s: %s (%s)\n", c.id, pass ? "PASS" : "FAIL", c.title, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
