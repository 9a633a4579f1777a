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

// JSON tuple files: {"n", "d", "matrices": [[[re, im], ...], ...], "metadata"}.
// Matrices are row-major; doubles are written with round-trip precision, so
// parse(serialize(x)) reproduces every finite entry bit for bit.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aluthge/tuple.hpp"

namespace aluthge::cli {

using Json = nlohmann::ordered_json;

struct TupleFile {
  int n = 0;
  int d = 0;
  std::vector<ComplexMatrix> matrices;
  Json metadata = Json::object();

  static TupleFile from_tuple(const CommutingTuple& t, Json metadata = Json::object());
  CommutingTuple to_tuple(double commute_tol = kCommuteTol) const;
};

// Throws Error(kInvalidArgument | kShapeMismatch | kNonFinite) on bad input.
TupleFile parse_tuple_file(std::string_view text);
TupleFile read_tuple_file(const std::filesystem::path& path);

Json to_json(const TupleFile& file);
std::string serialize(const TupleFile& file);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, int rows, int cols);
Json complex_to_json(Complex z);
Json point_to_json(const PointCd& p);
Json matrices_to_json(const std::vector<ComplexMatrix>& ms);

// Non-finite doubles become null, which JSON can represent.
Json number(double x);

}  // namespace aluthge::cli
