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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include <CLI11.hpp>

#include "aluthge_cli/commands.hpp"
#include "aluthge_cli/reproduce.hpp"

namespace {

using namespace aluthge::cli;

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  return (no_color == nullptr || *no_color == '\0') && isatty(STDERR_FILENO);
}

void diagnose(const std::string& message) {
  if (use_color()) {
    std::cerr << "\033[31merror:\033[0m " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

TupleFile read_input(const std::string& path) {
  if (path == "-") {
    const std::string text((std::istreambuf_iterator<char>(std::cin)),
                           std::istreambuf_iterator<char>());
    return parse_tuple_file(text);
  }
  return read_tuple_file(path);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) {
    throw aluthge::Error(aluthge::ErrorKind::kInvalidArgument, "cannot write " + out);
  }
  file << text;
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void add_run_options(CLI::App* app, RunConfig& c) {
  app->add_option("--t", c.t, "Transform exponent in [0, 1]")->capture_default_str();
  app->add_option("--max-iter", c.max_iter, "Iteration budget")->capture_default_str();
  app->add_option("--stop-tol", c.stop_tol, "Stop when successive norms differ by at most this")
      ->capture_default_str();
  app->add_option("--rank-tol", c.rank_tol, "Relative cutoff for numerical rank")
      ->capture_default_str();
  app->add_option("--k-max", c.k_max, "Largest power for the power formula")->capture_default_str();
  app->add_option("--seed", c.seed, "Seed")->capture_default_str();
  app->add_option("--format", c.format, "json or csv")->capture_default_str();
  app->add_option("--out", c.out, "Output path (default stdout)");
  app->add_option("--workers", c.workers, "Worker threads")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Spherical Aluthge transforms, joint spectra and spectral radii of commuting tuples"};
  app.require_subcommand(1);

  RunConfig config;
  config.workers = default_workers();
  std::string input;

  auto* transform = app.add_subcommand("transform", "Polar factors and the transform of a tuple");
  transform->add_option("tuple", input, "Tuple file ('-' for stdin)")->required();
  add_run_options(transform, config);

  auto* iterate = app.add_subcommand("iterate", "Norm trace of the iterated transform");
  iterate->add_option("tuple", input, "Tuple file ('-' for stdin)")->required();
  add_run_options(iterate, config);

  auto* radius = app.add_subcommand("radius", "All joint spectral radius estimates");
  radius->add_option("tuple", input, "Tuple file ('-' for stdin)")->required();
  add_run_options(radius, config);

  std::vector<std::string> points;
  int varying = -1;
  std::string re_range, im_range, steps = "101:101", fixed;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral membership at points or on a grid");
  spectrum->add_option("tuple", input, "Tuple file ('-' for stdin)")->required();
  add_run_options(spectrum, config);
  spectrum->add_option("--point", points, "Point re[:im],re[:im],... (repeatable)");
  spectrum->add_option("--membership-tol", config.membership_tol, "Relative singular value cutoff")
      ->capture_default_str();
  spectrum->add_option("--varying", varying, "Grid: index of the scanned coordinate");
  spectrum->add_option("--re", re_range, "Grid: real range lo:hi");
  spectrum->add_option("--im", im_range, "Grid: imaginary range lo:hi");
  spectrum->add_option("--steps", steps, "Grid: nodes per axis re:im")->capture_default_str();
  spectrum->add_option("--fixed", fixed, "Grid: the other coordinates, as a full point");

  std::string case_id;
  ReproduceConfig rconfig;
  rconfig.workers = config.workers;
  std::string rout;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a named reproduction case");
  reproduce_cmd->add_option("case", case_id, "ex14 | ex24 | ex41 | thm17 | thm18 | spectral-invariance | ladder")
      ->required();
  reproduce_cmd->add_option("--seed", rconfig.seed, "Corpus seed")->capture_default_str();
  reproduce_cmd->add_option("--count", rconfig.count, "Corpus size")->capture_default_str();
  reproduce_cmd->add_option("--max-iter", rconfig.iterate.max_iter, "Iteration budget")
      ->capture_default_str();
  reproduce_cmd->add_option("--stop-tol", rconfig.iterate.stop_tol, "Norm stall tolerance")
      ->capture_default_str();
  reproduce_cmd->add_option("--rank-tol", rconfig.iterate.rank_tol, "Relative rank cutoff")
      ->capture_default_str();
  reproduce_cmd->add_option("--k-max", rconfig.k_max, "Largest power")->capture_default_str();
  reproduce_cmd->add_option("--membership-tol", rconfig.membership_tol, "Spectral membership cutoff")
      ->capture_default_str();
  reproduce_cmd->add_option("--workers", rconfig.workers, "Worker threads")->capture_default_str();
  reproduce_cmd->add_option("--out", rout, "Output path (default stdout)");

  GenerateRequest gen;
  std::string gout;
  auto* generate = app.add_subcommand("generate", "Write a tuple file for a built-in model");
  generate->add_option("model", gen.model, "ex41 | ex14 | ex24 | corpus | zero")->required();
  generate->add_option("--k", gen.k, "ex41 parameter (> 1)")->capture_default_str();
  generate->add_option("--n", gen.n, "Truncation size")->capture_default_str();
  generate->add_option("--d", gen.d, "Arity (zero tuple)")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Corpus seed")->capture_default_str();
  generate->add_option("--index", gen.index, "Corpus entry")->capture_default_str();
  generate->add_option("--out", gout, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*reproduce_cmd) {
    if (rconfig.workers < 1) {
      throw aluthge::Error(aluthge::ErrorKind::kInvalidArgument, "--workers must be >= 1");
    }
    const ReproduceReport report = reproduce(case_id, rconfig);
    emit(report.to_json().dump(2) + "\n", rout);
    if (!report.pass()) {
      diagnose("reproduce " + case_id + ": some checks failed");
      return kExitReproduceFailed;
    }
    return kExitOk;
  }
  if (*generate) {
    emit(cmd_generate(gen), gout);
    return kExitOk;
  }

  const TupleFile file = read_input(input);
  if (*transform) {
    emit(cmd_transform(file, config), config.out);
  } else if (*iterate) {
    emit(cmd_iterate(file, config), config.out);
  } else if (*radius) {
    emit(cmd_radius(file, config), config.out);
  } else {
    SpectrumRequest request;
    for (const std::string& p : points) request.points.push_back(parse_point(p, file.d));
    if (varying >= 0 || !re_range.empty() || !im_range.empty()) {
      if (varying < 0 || re_range.empty() || im_range.empty()) {
        throw aluthge::Error(aluthge::ErrorKind::kInvalidArgument,
                             "a grid needs --varying, --re and --im");
      }
      aluthge::GridSlice slice;
      slice.fixed = fixed.empty() ? aluthge::PointCd::zero(file.d) : parse_point(fixed, file.d);
      slice.varying = varying;
      std::tie(slice.re_min, slice.re_max) = parse_range(re_range);
      std::tie(slice.im_min, slice.im_max) = parse_range(im_range);
      const auto [re_steps, im_steps] = parse_range(steps);
      slice.re_steps = static_cast<int>(re_steps);
      slice.im_steps = static_cast<int>(im_steps);
      if (slice.re_steps != re_steps || slice.im_steps != im_steps) {
        throw aluthge::Error(aluthge::ErrorKind::kInvalidArgument, "--steps must be integers");
      }
      request.slice = slice;
    }
    emit(cmd_spectrum(file, request, config), config.out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const aluthge::Error& e) {
    diagnose(e.what());
    return e.is_input_error() ? kExitInput : kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    diagnose(e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    diagnose(e.what());
    return kExitNumerical;
  }
}
