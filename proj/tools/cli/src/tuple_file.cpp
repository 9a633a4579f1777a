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

#include "aluthge_cli/tuple_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace aluthge::cli {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "tuple file: " + what);
}

int read_dim(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    bad(std::string("missing integer field '") + key + "'");
  }
  const auto v = j[key].get<long long>();
  if (v < 1 || v > 4096) bad(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

// null is how non-finite values are written.
double read_real(const Json& j) {
  if (!j.is_number()) {
    throw Error(ErrorKind::kNonFinite, "tuple file: matrix entry is not a finite number");
  }
  return j.get<double>();
}

}  // namespace

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json complex_to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrices_to_json(const std::vector<ComplexMatrix>& ms) {
  Json out = Json::array();
  for (const ComplexMatrix& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

Json point_to_json(const PointCd& p) {
  Json out = Json::array();
  for (const Complex& z : p.coords()) out.push_back(complex_to_json(z));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw Error(ErrorKind::kShapeMismatch, "tuple file: expected " +
                                               std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw Error(ErrorKind::kShapeMismatch, "tuple file: row " + std::to_string(i) +
                                                 " must have " + std::to_string(cols) +
                                                 " entries");
    }
    for (int k = 0; k < cols; ++k) {
      const Json& entry = row[k];
      if (entry.is_number() || entry.is_null()) {
        m(i, k) = Complex(read_real(entry), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(i, k) = Complex(read_real(entry[0]), read_real(entry[1]));
      } else {
        bad("entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

TupleFile TupleFile::from_tuple(const CommutingTuple& t, Json metadata) {
  return TupleFile{t.dim(), t.arity(), t.matrices(), std::move(metadata)};
}

CommutingTuple TupleFile::to_tuple(double commute_tol) const {
  return CommutingTuple(matrices, commute_tol);
}

TupleFile parse_tuple_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  TupleFile file;
  file.n = read_dim(j, "n");
  file.d = read_dim(j, "d");
  if (!j.contains("matrices") || !j["matrices"].is_array()) bad("missing array 'matrices'");
  if (static_cast<int>(j["matrices"].size()) != file.d) {
    throw Error(ErrorKind::kShapeMismatch,
                "tuple file: 'matrices' must hold d = " + std::to_string(file.d) +
                    " matrices");
  }
  for (const Json& m : j["matrices"]) {
    file.matrices.push_back(matrix_from_json(m, file.n, file.n));
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) bad("'metadata' must be an object");
    file.metadata = j["metadata"];
  }
  return file;
}

TupleFile read_tuple_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tuple_file(buffer.str());
}

Json to_json(const TupleFile& file) {
  Json j = Json::object();
  j["n"] = file.n;
  j["d"] = file.d;
  j["matrices"] = matrices_to_json(file.matrices);
  j["metadata"] = file.metadata;
  return j;
}

std::string serialize(const TupleFile& file) { return to_json(file).dump(2) + "\n"; }

}  // namespace aluthge::cli
