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

#include "aluthge_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "aluthge/models.hpp"
#include "aluthge/polar.hpp"
#include "aluthge/radius.hpp"

namespace aluthge::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}

IterateOptions iterate_options(const RunConfig& c) {
  IterateOptions o;
  o.max_iter = c.max_iter;
  o.stop_tol = c.stop_tol;
  o.rank_tol = c.rank_tol;
  return o;
}

Json base_config(const RunConfig& c) {
  Json j = Json::object();
  j["t"] = c.t;
  j["max_iter"] = c.max_iter;
  j["stop_tol"] = c.stop_tol;
  j["rank_tol"] = c.rank_tol;
  j["k_max"] = c.k_max;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    invalid("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Json report_json(const SpectrumReport& r) {
  Json j = Json::object();
  j["point"] = point_to_json(r.point);
  j["sigma_p"] = r.point_spectrum;
  j["sigma_l"] = r.left;
  j["sigma_r"] = r.right;
  j["sigma_H"] = r.harte;
  j["sigma_T"] = r.taylor;
  j["sigma_Te"] = r.taylor_essential;
  j["fredholm_index"] = r.fredholm_index;
  j["pi"] = r.pi;
  j["delta"] = r.delta;
  j["homology"] = r.homology;
  j["left_margin"] = number(r.left_margin);
  j["right_margin"] = number(r.right_margin);
  return j;
}

CommutingTuple load(const TupleFile& input) { return input.to_tuple(); }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void validate(const RunConfig& c) {
  if (!(c.t >= 0.0 && c.t <= 1.0)) invalid("--t must lie in [0, 1]");
  if (c.max_iter < 1) invalid("--max-iter must be >= 1");
  if (!(c.stop_tol > 0.0)) invalid("--stop-tol must be > 0");
  if (!(c.rank_tol > 0.0)) invalid("--rank-tol must be > 0");
  if (!(c.membership_tol > 0.0)) invalid("--membership-tol must be > 0");
  if (c.k_max < 1) invalid("--k-max must be >= 1");
  if (c.format != "json" && c.format != "csv") invalid("--format must be json or csv");
  if (c.workers < 1) invalid("--workers must be >= 1");
}

PointCd parse_point(std::string_view text, int d) {
  const std::vector<std::string_view> parts = split(text, ',');
  if (static_cast<int>(parts.size()) != d) {
    invalid("point '" + std::string(text) + "' needs " + std::to_string(d) + " coordinates");
  }
  std::vector<Complex> coords;
  for (std::string_view p : parts) {
    const std::vector<std::string_view> ri = split(p, ':');
    if (ri.size() > 2) invalid("coordinate '" + std::string(p) + "' is not re[:im]");
    coords.emplace_back(parse_double(ri[0]), ri.size() == 2 ? parse_double(ri[1]) : 0.0);
  }
  return PointCd(std::move(coords));
}

std::pair<double, double> parse_range(std::string_view text) {
  const std::vector<std::string_view> parts = split(text, ':');
  if (parts.size() != 2) invalid("range '" + std::string(text) + "' is not lo:hi");
  const double lo = parse_double(parts[0]);
  const double hi = parse_double(parts[1]);
  if (lo > hi) invalid("range '" + std::string(text) + "' has lo > hi");
  return {lo, hi};
}

std::string cmd_transform(const TupleFile& input, const RunConfig& config) {
  validate(config);
  if (config.format != "json") invalid("transform writes JSON only");
  const CommutingTuple t = load(input);
  const SphericalPolar polar = spherical_polar(t, config.rank_tol);
  const CommutingTuple transformed = aluthge(t, polar, config.t);
  const PolarResiduals res = polar_residuals(t, polar);

  Json j = Json::object();
  Json cfg = Json::object();
  cfg["t"] = config.t;
  cfg["rank_tol"] = config.rank_tol;
  j["config"] = cfg;
  j["n"] = t.dim();
  j["d"] = t.arity();
  j["rank_p"] = polar.rank_p;
  j["P"] = matrix_to_json(polar.p);
  j["V"] = matrices_to_json(polar.v);
  j["transform"] = matrices_to_json(transformed.matrices());
  j["residuals"] = {{"reconstruction", number(res.reconstruction)},
                    {"projection", number(res.projection)},
                    {"kernel", number(res.kernel)},
                    {"intertwining", number(res.intertwining)},
                    {"transform_commutator", number(transformed.commutator_residual())}};
  return dump(j);
}

std::string cmd_iterate(const TupleFile& input, const RunConfig& config) {
  validate(config);
  const CommutingTuple t = load(input);
  const IterateTrace trace = iterate(t, config.t, iterate_options(config));
  if (config.format == "csv") {
    std::string out = "n,norm2,delta,commutator_residual\n";
    for (const IterateEntry& e : trace.entries) {
      out += std::to_string(e.n) + "," + format_double(e.norm2) + "," +
             format_double(e.delta) + "," + format_double(e.commutator_residual) + "\n";
    }
    return out;
  }
  Json j = Json::object();
  j["config"] = base_config(config);
  j["initial_norm2"] = number(trace.initial_norm2);
  j["converged"] = trace.converged;
  j["period_two"] = trace.period_two;
  j["limit_estimate"] = number(trace.limit_estimate);
  Json rows = Json::array();
  for (const IterateEntry& e : trace.entries) {
    rows.push_back({{"n", e.n},
                    {"norm2", number(e.norm2)},
                    {"delta", number(e.delta)},
                    {"commutator_residual", number(e.commutator_residual)},
                    {"tuple_step", number(e.tuple_step)},
                    {"projected", e.projected}});
  }
  j["entries"] = std::move(rows);
  return dump(j);
}

std::string cmd_radius(const TupleFile& input, const RunConfig& config) {
  validate(config);
  if (config.format != "json") invalid("radius writes JSON only");
  const CommutingTuple t = load(input);
  RadiusConfig rc;
  rc.t = config.t;
  rc.k_max = config.k_max;
  rc.iterate = iterate_options(config);
  const RadiusReport r = radius_report(t, rc);

  Json j = Json::object();
  j["config"] = base_config(config);
  j["estimates"] = {{"joint_eig", number(r.r_joint_eig)},
                    {"power", number(r.r_power)},
                    {"aluthge", number(r.r_aluthge)},
                    {"elementary", r.elementary_skipped ? Json(nullptr) : number(r.r_elementary)}};
  j["two_norm"] = number(r.two_norm);
  j["spread"] = number(r.spread);
  j["budgets"] = {
      {"power", {{"k_max", config.k_max}, {"k_reached", r.power_k_reached}, {"stalled", r.power_stalled}}},
      {"aluthge",
       {{"t", config.t},
        {"max_iter", config.max_iter},
        {"stop_tol", config.stop_tol},
        {"n_reached", r.aluthge_n_reached},
        {"converged", r.aluthge_converged},
        {"period_two", r.aluthge_period_two}}},
      {"elementary", {{"size_guard", kElementaryGuard}, {"skipped", r.elementary_skipped}}}};
  j["warnings"] = r.warnings;
  return dump(j);
}

std::string cmd_spectrum(const TupleFile& input, const SpectrumRequest& request,
                         const RunConfig& config) {
  validate(config);
  const CommutingTuple t = load(input);
  if (request.slice) {
    const std::vector<GridPoint> grid =
        grid_scan(t, *request.slice, config.membership_tol, config.workers);
    if (config.format == "json") {
      Json list = Json::array();
      for (const GridPoint& g : grid) list.push_back(report_json(g.report));
      Json j = Json::object();
      j["config"] = {{"membership_tol", config.membership_tol}};
      j["reports"] = std::move(list);
      return dump(j);
    }
    const int d = t.arity();
    std::string out = "re,im,sigma_p,sigma_l,sigma_r,sigma_H,sigma_T";
    for (int k = 0; k <= d; ++k) out += ",pi_" + std::to_string(k);
    for (int k = 0; k <= d; ++k) out += ",delta_" + std::to_string(k);
    for (int p = 0; p <= d; ++p) out += ",h" + std::to_string(p);
    out += "\n";
    auto flag = [](bool b) { return b ? ",1" : ",0"; };
    for (const GridPoint& g : grid) {
      const SpectrumReport& r = g.report;
      out += format_double(g.value.real()) + "," + format_double(g.value.imag());
      out += flag(r.point_spectrum);
      out += flag(r.left);
      out += flag(r.right);
      out += flag(r.harte);
      out += flag(r.taylor);
      for (bool b : r.pi) out += flag(b);
      for (bool b : r.delta) out += flag(b);
      for (int h : r.homology) out += "," + std::to_string(h);
      out += "\n";
    }
    return out;
  }
  if (request.points.empty()) invalid("spectrum needs --point or a grid slice");
  if (config.format != "json") invalid("point reports are JSON only; use a grid for CSV");
  Json list = Json::array();
  for (const PointCd& p : request.points) {
    list.push_back(report_json(membership_report(t, p, config.membership_tol)));
  }
  Json j = Json::object();
  j["config"] = {{"membership_tol", config.membership_tol}};
  j["reports"] = std::move(list);
  return dump(j);
}

std::string cmd_generate(const GenerateRequest& request) {
  Json meta = Json::object();
  meta["name"] = request.model;
  if (request.model == "ex41") {
    meta["k"] = request.k;
    return serialize(TupleFile::from_tuple(ex41_matrix(request.k).tuple, meta));
  }
  if (request.model == "ex14") {
    meta["size"] = request.n;
    return serialize(TupleFile::from_tuple(ex14_pair(request.n, 1.0).tuple, meta));
  }
  if (request.model == "ex24") {
    meta["size"] = request.n;
    return serialize(TupleFile::from_tuple(ex24_pair(request.n).tuple, meta));
  }
  if (request.model == "corpus") {
    if (request.index < 0) invalid("--index must be >= 0");
    const std::vector<CorpusEntry> entries = corpus(request.seed, request.index + 1);
    const CorpusEntry& e = entries.back();
    meta["seed"] = request.seed;
    meta["index"] = request.index;
    meta["style"] = std::string(to_string(e.style));
    meta["builder"] = "random_commuting";
    meta["radius"] = e.radius;
    Json spectrum = Json::array();
    for (const PointCd& p : e.spectrum) spectrum.push_back(point_to_json(p));
    meta["joint_spectrum"] = std::move(spectrum);
    return serialize(TupleFile::from_tuple(e.tuple, meta));
  }
  if (request.model == "zero") {
    if (request.n < 1 || request.d < 1) invalid("zero tuple needs n, d >= 1");
    meta["size"] = request.n;
    std::vector<ComplexMatrix> zeros(static_cast<std::size_t>(request.d),
                                     ComplexMatrix::Zero(request.n, request.n));
    return serialize(TupleFile::from_tuple(CommutingTuple(std::move(zeros)), meta));
  }
  invalid("unknown model '" + request.model + "' (ex41, ex14, ex24, corpus, zero)");
}

}  // namespace aluthge::cli
