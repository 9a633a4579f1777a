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

// Named reproduction cases. Each runs a fixed set of checks and reports the
// residual and tolerance of every one; a case passes when all checks do.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aluthge/polar.hpp"
#include "aluthge_cli/tuple_file.hpp"

namespace aluthge::cli {

struct ReproduceConfig {
  std::uint64_t seed = 7;
  int count = 50;  // corpus entries
  int max_n = 8;
  int max_d = 3;
  int workers = 1;
  IterateOptions iterate;
  int k_max = 40;
  double membership_tol = 1e-8;
  int off_spectrum_samples = 20;
  int ex14_size = 8;
  int ex24_size = 16;
  double ex41_k = 2.0;
};

struct Check {
  std::string name;
  std::string anchor;  // short slug naming the statement under test
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproduceReport {
  std::string case_id;
  Json config;
  std::vector<Check> checks;
  std::vector<std::string> limitations;

  bool pass() const;
  Json to_json() const;
};

const std::vector<std::string>& reproduce_cases();

// Throws Error(kInvalidArgument) for an unknown case id.
ReproduceReport reproduce(std::string_view case_id, const ReproduceConfig& config);

}  // namespace aluthge::cli
