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

// Subcommand bodies. Each returns the text to write; errors surface as
// aluthge::Error and are mapped to exit codes by main.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aluthge/koszul.hpp"
#include "aluthge_cli/tuple_file.hpp"

namespace aluthge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitNumerical = 2,
  kExitReproduceFailed = 3,
};

struct RunConfig {
  double t = 0.5;
  int max_iter = 500;
  double stop_tol = 1e-9;
  double rank_tol = kDefaultRankTol;
  int k_max = 40;
  std::uint64_t seed = 7;
  std::string format = "json";  // json | csv
  std::string out;              // empty: stdout
  int workers = 1;
  double membership_tol = kMembershipTol;
};

// Throws Error(kInvalidArgument) on out-of-range settings.
void validate(const RunConfig& config);

std::string cmd_transform(const TupleFile& input, const RunConfig& config);
std::string cmd_iterate(const TupleFile& input, const RunConfig& config);
std::string cmd_radius(const TupleFile& input, const RunConfig& config);

struct SpectrumRequest {
  std::vector<PointCd> points;
  std::optional<GridSlice> slice;
};
std::string cmd_spectrum(const TupleFile& input, const SpectrumRequest& request,
                         const RunConfig& config);

struct GenerateRequest {
  std::string model;  // ex41 | ex14 | ex24 | corpus | zero
  double k = 2.0;
  int n = 8;
  int d = 2;
  std::uint64_t seed = 7;
  int index = 0;
};
std::string cmd_generate(const GenerateRequest& request);

// "re[:im],re[:im],..." with exactly d coordinates.
PointCd parse_point(std::string_view text, int d);
// "lo:hi".
std::pair<double, double> parse_range(std::string_view text);

// Shortest text that reads back to the same double.
std::string format_double(double x);

}  // namespace aluthge::cli
