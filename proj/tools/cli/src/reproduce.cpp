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

#include "aluthge_cli/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aluthge/koszul.hpp"
#include "aluthge/models.hpp"
#include "aluthge/parallel.hpp"
#include "aluthge/radius.hpp"
#include "aluthge/random.hpp"

namespace aluthge::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::vector<double> kCorpusExponents = {0.25, 0.5, 0.75};
const std::vector<double> kInvarianceExponents = {0.25, 0.5, 0.75, 1.0};

Check check(std::string name, std::string anchor, double residual, double tolerance) {
  return Check{std::move(name), std::move(anchor), residual, tolerance,
               residual <= tolerance};
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string fmt(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string label(const CorpusEntry& e, std::size_t i) {
  return "entry " + std::to_string(i) + " (" + std::string(to_string(e.style)) +
         ", n=" + std::to_string(e.tuple.dim()) + ", d=" +
         std::to_string(e.tuple.arity()) + ")";
}

std::string exponent_label(double t) { return "t=" + fmt(t); }

struct CorpusContext {
  std::vector<CorpusEntry> entries;
  std::vector<double> radii;
};

CorpusContext load_corpus(const ReproduceConfig& config) {
  CorpusContext ctx;
  ctx.entries = corpus(config.seed, config.count, config.max_n, config.max_d);
  ctx.radii.resize(ctx.entries.size());
  parallel_for(ctx.entries.size(), config.workers, [&](std::size_t i) {
    ctx.radii[i] = radius_joint_eig(ctx.entries[i].tuple);
  });
  return ctx;
}

// Runs fn(entry, t) for every corpus entry and exponent, in parallel, and
// concatenates the per-task checks in (entry, t) order.
template <typename Fn>
std::vector<Check> over_corpus(const CorpusContext& ctx,
                               const std::vector<double>& exponents, int workers,
                               Fn&& fn) {
  const std::size_t tasks = ctx.entries.size() * exponents.size();
  std::vector<std::vector<Check>> slots(tasks);
  parallel_for(tasks, workers, [&](std::size_t idx) {
    const std::size_t i = idx / exponents.size();
    const double t = exponents[idx % exponents.size()];
    slots[idx] = fn(i, t);
  });
  std::vector<Check> out;
  for (auto& s : slots) {
    for (auto& c : s) out.push_back(std::move(c));
  }
  return out;
}

void ex41_checks(const ReproduceConfig& config, std::vector<Check>& out) {
  const double k = config.ex41_k;
  const Ex41Matrix ex = ex41_matrix(k);

  IterateOptions twenty = config.iterate;
  twenty.max_iter = 20;
  twenty.stop_on_stall = false;
  const IterateTrace trace = iterate(ex.tuple, 1.0, twenty);
  double worst = 0.0;
  for (const IterateEntry& e : trace.entries) worst = std::max(worst, std::abs(e.norm2 - ex.norm));
  out.push_back(check("duggal iterate norms equal k+1 for n = 1..20", "duggal-norm-constant",
                      worst, 1e-10));

  const CommutingTuple once = aluthge(ex.tuple, 1.0, config.iterate.rank_tol);
  const CommutingTuple twice = aluthge(once, 1.0, config.iterate.rank_tol);
  out.push_back(check("first duggal iterate equals -T^*", "duggal-adjoint-flip",
                      max_abs(once[0] - ex.duggal), 1e-12));
  out.push_back(check("second duggal iterate returns to T", "duggal-period-two",
                      max_abs(twice[0] - ex.t), 1e-12));

  const SphericalPolar polar = spherical_polar(ex.tuple, config.iterate.rank_tol);
  out.push_back(check("positive factor equals [[k, 1], [1, k]]", "ex41-polar-positive",
                      max_abs(polar.p - ex.p), 1e-12));
  out.push_back(check("isometric factor equals [[0, 1], [-1, 0]]", "ex41-polar-isometry",
                      max_abs(polar.v[0] - ex.v), 1e-12));

  const double r = radius_joint_eig(ex.tuple);
  out.push_back(check("joint radius equals sqrt(k^2 - 1)", "ex41-radius",
                      std::abs(r - ex.radius), 1e-10));
  out.push_back(check("power formula at k = 2 equals the radius", "power-formula-even-power",
                      std::abs(radius_power(ex.tuple, 2).value - ex.radius), 1e-12));

  const AluthgeEstimate half = radius_aluthge(ex.tuple, 0.5, config.iterate);
  out.push_back(check("t = 1/2 norm limit equals the radius", "aluthge-limit-half",
                      std::abs(half.value - ex.radius), 1e-6));
  const AluthgeEstimate duggal = radius_aluthge(ex.tuple, 1.0, config.iterate);
  out.push_back(check("t = 1 norm limit stays at k+1, above the radius",
                      "duggal-limit-not-radius", std::abs(duggal.value - ex.norm), 1e-10));
  out.push_back(check("t = 1 orbit flagged as period two", "duggal-orbit-flag",
                      duggal.trace.period_two ? 0.0 : 1.0, 0.0));
}

void ex14_checks(const ReproduceConfig& config, std::vector<Check>& out) {
  const int n = config.ex14_size;
  {
    const Ex14Pair base = ex14_pair(n, 1.0);
    const SphericalPolar polar = spherical_polar(base.tuple, config.iterate.rank_tol);
    ComplexMatrix expected = ComplexMatrix::Identity(n, n);
    expected(0, 0) = 0.0;
    out.push_back(check("positive factor equals I - E_0", "backward-shift-positive-factor",
                        max_abs(polar.p - expected), 1e-12));
  }
  for (int step = 1; step <= 10; ++step) {
    const double t = step / 10.0;
    const Ex14Pair pair = ex14_pair(n, t);
    const CommutingTuple transformed = aluthge(pair.tuple, t, config.iterate.rank_tol);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      worst = std::max(worst, max_abs(transformed[i] - pair.expected_aluthge[i]));
    }
    out.push_back(check("transform equals ((I - E_0) U^*, 0) at " + exponent_label(t),
                        "backward-shift-transform", worst, 1e-12));
  }
}

void ex24_checks(const ReproduceConfig& config, std::vector<Check>& out) {
  const Ex24Pair pair = ex24_pair(config.ex24_size);
  const SphericalPolar polar = spherical_polar(pair.tuple, config.iterate.rank_tol);
  out.push_back(check("interior P equals I (x) (E_0 + sqrt2 E_0^perp)", "tensor-shift-positive",
                      masked_max_abs_diff(polar.p, pair.expected_p, pair.interior), 1e-12));
  out.push_back(check("interior V_1 equals I (x) U^*/sqrt2", "tensor-shift-isometry-1",
                      masked_max_abs_diff(polar.v[0], pair.expected_v1, pair.interior), 1e-12));
  out.push_back(check("interior V_2 equals U (x) (E_0 + E_0^perp/sqrt2)", "tensor-shift-isometry-2",
                      masked_max_abs_diff(polar.v[1], pair.expected_v2, pair.interior), 1e-12));
  for (double t : {0.25, 0.5, 1.0}) {
    const CommutingTuple transformed = aluthge(pair.tuple, polar, t);
    const std::vector<ComplexMatrix> expected = pair.expected_aluthge(t);
    out.push_back(check("interior first transform coordinate at " + exponent_label(t),
                        "tensor-shift-transform-1",
                        masked_max_abs_diff(transformed[0], expected[0], pair.interior), 1e-12));
    out.push_back(check("interior second transform coordinate equals U (x) I at " +
                            exponent_label(t),
                        "tensor-shift-transform-2",
                        masked_max_abs_diff(transformed[1], expected[1], pair.interior), 1e-12));
  }
}

// r <= norm_{n+1} <= norm_n <= ||T||, as the largest violation.
double sandwich_violation(const IterateTrace& trace, double r) {
  double worst = std::max(0.0, r - trace.initial_norm2);
  double previous = trace.initial_norm2;
  for (const IterateEntry& e : trace.entries) {
    worst = std::max({worst, r - e.norm2, e.norm2 - previous});
    previous = e.norm2;
  }
  return worst;
}

std::vector<Check> limit_checks(const ReproduceConfig& config, const CorpusContext& ctx,
                                bool with_limit) {
  return over_corpus(ctx, kCorpusExponents, config.workers, [&](std::size_t i, double t) {
    const std::string where = label(ctx.entries[i], i) + " " + exponent_label(t);
    std::vector<Check> out;
    try {
      const IterateTrace trace = iterate(ctx.entries[i].tuple, t, config.iterate);
      out.push_back(check(where + ": norms sandwiched between radius and ||T||",
                          "monotone-sandwich", sandwich_violation(trace, ctx.radii[i]), 1e-8));
      if (with_limit) {
        const int steps = trace.entries.empty() ? 0 : trace.entries.back().n;
        out.push_back(check(where + ": |norm limit - joint radius| after " +
                                std::to_string(steps) + " steps",
                            "norm-limit-is-radius",
                            std::abs(trace.limit_estimate - ctx.radii[i]), 1e-3));
      }
    } catch (const Error& e) {
      out.push_back(check(where + ": iteration failed: " + e.what(), "monotone-sandwich",
                          kInf, 1e-8));
    }
    return out;
  });
}

std::vector<PointCd> sample_points(const CorpusEntry& e, std::size_t i,
                                   const ReproduceConfig& config,
                                   const std::vector<PointCd>& eigenvalues) {
  std::vector<PointCd> points = eigenvalues;
  Rng rng(config.seed * 0x2545f4914f6cdd1dULL + i);
  const double radius = 1.2 * tuple_two_norm(e.tuple);
  for (int s = 0; s < config.off_spectrum_samples; ++s) {
    std::vector<Complex> coords;
    for (int c = 0; c < e.tuple.arity(); ++c) {
      coords.emplace_back(rng.uniform(-radius, radius), rng.uniform(-radius, radius));
    }
    points.emplace_back(std::move(coords));
  }
  return points;
}

std::vector<Check> invariance_checks(const ReproduceConfig& config, const CorpusContext& ctx) {
  return over_corpus(ctx, kInvarianceExponents, config.workers, [&](std::size_t i, double t) {
    const CorpusEntry& e = ctx.entries[i];
    const std::string where = label(e, i) + " " + exponent_label(t);
    std::vector<Check> out;
    try {
      const CommutingTuple transformed = aluthge(e.tuple, t, config.iterate.rank_tol);
      const std::vector<PointCd> before = joint_eigenvalues(e.tuple);
      const std::vector<PointCd> after = joint_eigenvalues(transformed);
      out.push_back(check(where + ": Hausdorff distance of joint spectra", "taylor-spectrum-equal",
                          hausdorff_distance(before, after), 1e-6));

      int plh = 0, right = 0, pi = 0, delta = 0;
      for (const PointCd& lambda : sample_points(e, i, config, before)) {
        const SpectrumReport a = membership_report(e.tuple, lambda, config.membership_tol);
        const SpectrumReport b = membership_report(transformed, lambda, config.membership_tol);
        const bool zero = lambda.is_zero();
        plh += a.point_spectrum != b.point_spectrum || a.left != b.left || a.harte != b.harte;
        right += (a.right && !b.right) || (b.right && !a.right && !zero);
        bool pi_diff = false, delta_bad = false;
        for (std::size_t k = 0; k < a.pi.size(); ++k) {
          pi_diff = pi_diff || a.pi[k] != b.pi[k];
          delta_bad = delta_bad || (a.delta[k] && !b.delta[k]) ||
                      (b.delta[k] && !a.delta[k] && !zero);
        }
        pi += pi_diff;
        delta += delta_bad;
      }
      out.push_back(check(where + ": point/left/Harte flag mismatches", "point-left-harte-equal",
                          plh, 0.0));
      out.push_back(check(where + ": right spectrum sandwich violations", "right-spectrum-sandwich",
                          right, 0.0));
      out.push_back(check(where + ": pi_k flag mismatches", "slodkowski-pi-equal", pi, 0.0));
      out.push_back(check(where + ": delta_k sandwich violations", "slodkowski-delta-sandwich",
                          delta, 0.0));
    } catch (const Error& err) {
      out.push_back(check(where + ": failed: " + err.what(), "taylor-spectrum-equal", kInf, 1e-6));
    }
    return out;
  });
}

double relative_excess(double lhs, double rhs) {
  return std::max(0.0, lhs - rhs) / std::max(1.0, rhs);
}

std::vector<Check> ladder_checks(const ReproduceConfig& config, const CorpusContext& ctx) {
  return over_corpus(ctx, kCorpusExponents, config.workers, [&](std::size_t i, double t) {
    const CorpusEntry& e = ctx.entries[i];
    const std::string where = label(e, i) + " " + exponent_label(t);
    std::vector<Check> out;
    try {
      LadderOptions options;
      options.rank_tol = config.iterate.rank_tol;
      const LadderTable table = ladder_diagnostics(e.tuple, t, options);
      const int columns = options.columns;
      // norms[k] = ||T^k||, k = 0..columns+1.
      std::vector<double> norms = {1.0};
      for (double v : power_norms(e.tuple, columns + 1)) norms.push_back(v);

      double submult = 0.0, contract = 0.0, interp = 0.0;
      for (int k = 1; k <= columns; ++k) {
        submult = std::max(submult, relative_excess(norms[k + 1], norms[1] * norms[k]));
        const double transformed = table.cells[1][k - 1];
        contract = std::max(contract, relative_excess(transformed, norms[k]));
        if (t <= 0.5) {
          interp = std::max(interp, relative_excess(transformed,
                                                    std::pow(norms[k + 1], t) *
                                                        std::pow(norms[k - 1], 1.0 - t) *
                                                        std::pow(norms[1], 1.0 - 2.0 * t)));
        }
        if (t >= 0.5) {
          interp = std::max(interp, relative_excess(transformed,
                                                    std::pow(norms[k + 1], 1.0 - t) *
                                                        std::pow(norms[k - 1], t) *
                                                        std::pow(norms[1], 2.0 * t - 1.0)));
        }
      }
      out.push_back(check(where + ": ||T^{k+1}|| <= ||T|| ||T^k||", "power-norm-submultiplicative",
                          submult, 1e-10));
      out.push_back(check(where + ": ||(Delta T)^k|| <= ||T^k||", "transform-contracts-powers",
                          contract, 1e-10));
      out.push_back(check(where + ": interpolation bound on ||(Delta T)^k||",
                          "transform-interpolation-bound", interp, 1e-10));

      double increase = 0.0, below = 0.0;
      for (std::size_t n = 0; n < table.cells.size(); ++n) {
        for (int k = 1; k <= columns; ++k) {
          const double cell = table.cells[n][k - 1];
          if (n + 1 < table.cells.size()) {
            increase = std::max(increase, relative_excess(table.cells[n + 1][k - 1], cell));
          }
          below = std::max(below, ctx.radii[i] - std::pow(cell, 1.0 / k));
        }
      }
      out.push_back(check(where + ": ladder columns non-increasing in n", "ladder-monotone",
                          increase, 1e-10));
      out.push_back(check(where + ": every cell^(1/k) >= radius", "ladder-lower-bound",
                          std::max(0.0, below), 1e-8));
      double fit = 0.0;
      const double l1 = table.limits[0];
      for (int k = 2; k <= columns; ++k) {
        const double target = std::pow(l1, k);
        fit = std::max(fit, std::abs(table.limits[k - 1] - target) / target);
      }
      out.push_back(check(where + ": L_k = L_1^k (relative)", "ladder-limit-powers", fit, 1e-3));
    } catch (const Error& err) {
      out.push_back(check(where + ": failed: " + err.what(), "ladder-monotone", kInf, 1e-10));
    }
    return out;
  });
}

Json config_json(const ReproduceConfig& c, std::string_view case_id) {
  Json j = Json::object();
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["max_n"] = c.max_n;
  j["max_d"] = c.max_d;
  j["max_iter"] = c.iterate.max_iter;
  j["stop_tol"] = c.iterate.stop_tol;
  j["rank_tol"] = c.iterate.rank_tol;
  j["k_max"] = c.k_max;
  j["membership_tol"] = c.membership_tol;
  j["off_spectrum_samples"] = c.off_spectrum_samples;
  if (case_id == "ex14") j["size"] = c.ex14_size;
  if (case_id == "ex24") j["size"] = c.ex24_size;
  if (case_id == "ex41") j["k"] = c.ex41_k;
  return j;
}

const std::vector<std::string> kLimitations = {
    "All operators are finite truncations. The right spectrum of the backward-shift pair "
    "(unit circle times zero, plus the origin) is an infinite-dimensional statement; "
    "ex14 checks only the algebraic transform identity.",
    "In finite dimension the essential Taylor spectrum is empty and every Fredholm index "
    "is 0; homology-dimension equality is what is checked in their place.",
    "Truncated tensor shifts obey the closed forms only away from the last basis vector of "
    "the first factor; ex24 compares on that interior mask.",
    "Radius limits are evaluated at finite budgets; no convergence rate is assumed.",
};

}  // namespace

bool ReproduceReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json ReproduceReport::to_json() const {
  Json j = Json::object();
  j["case"] = case_id;
  j["pass"] = pass();
  j["config"] = config;
  int failed = 0;
  Json list = Json::array();
  for (const Check& c : checks) {
    failed += !c.pass;
    Json item = Json::object();
    item["name"] = c.name;
    item["anchor"] = c.anchor;
    item["residual"] = number(c.residual);
    item["tolerance"] = c.tolerance;
    item["pass"] = c.pass;
    list.push_back(std::move(item));
  }
  j["summary"] = {{"checks", checks.size()}, {"failed", failed}};
  j["checks"] = std::move(list);
  j["limitations"] = limitations;
  return j;
}

const std::vector<std::string>& reproduce_cases() {
  static const std::vector<std::string> cases = {
      "ex14", "ex24", "ex41", "thm17", "thm18", "spectral-invariance", "ladder"};
  return cases;
}

ReproduceReport reproduce(std::string_view case_id, const ReproduceConfig& config) {
  const auto& cases = reproduce_cases();
  if (std::find(cases.begin(), cases.end(), case_id) == cases.end()) {
    throw Error(ErrorKind::kInvalidArgument, "unknown reproduce case '" +
                                                 std::string(case_id) + "'");
  }
  if (config.count < 1) throw Error(ErrorKind::kInvalidArgument, "count must be >= 1");
  ReproduceReport report;
  report.case_id = std::string(case_id);
  report.config = config_json(config, case_id);
  report.limitations = kLimitations;

  if (case_id == "ex41") {
    ex41_checks(config, report.checks);
  } else if (case_id == "ex14") {
    ex14_checks(config, report.checks);
  } else if (case_id == "ex24") {
    ex24_checks(config, report.checks);
  } else {
    const CorpusContext ctx = load_corpus(config);
    if (case_id == "thm17") {
      report.checks = limit_checks(config, ctx, false);
    } else if (case_id == "thm18") {
      report.checks = limit_checks(config, ctx, true);
    } else if (case_id == "spectral-invariance") {
      report.checks = invariance_checks(config, ctx);
    } else {
      report.checks = ladder_checks(config, ctx);
    }
  }
  return report;
}

}  // namespace aluthge::cli
