// Copyright 2026 The csskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "csskit/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csskit/error.hpp"

namespace csskit {
namespace {

using nlohmann::json;

Error field_error(const std::string& field, const std::string& problem) {
  return Error(ErrorKind::Parse, "field '" + field + "': " + problem);
}

}  // namespace

DensityMatrix parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw field_error("<root>", "expected an object");

  if (!doc.contains("dims")) throw field_error("dims", "missing");
  const auto& jdims = doc["dims"];
  if (!jdims.is_array() || jdims.empty()) throw field_error("dims", "expected a nonempty array");
  Dims dims;
  for (std::size_t k = 0; k < jdims.size(); ++k) {
    if (!jdims[k].is_number_unsigned() || jdims[k].get<std::size_t>() == 0)
      throw field_error("dims[" + std::to_string(k) + "]", "expected a positive integer");
    dims.push_back(jdims[k].get<std::size_t>());
  }

  if (!doc.contains("matrix")) throw field_error("matrix", "missing");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.empty()) throw field_error("matrix", "expected a nonempty array of rows");
  const auto n = rows.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_name = "matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n)
      throw field_error(row_name, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const auto& entry = rows[i][j];
      const auto entry_name = row_name + "[" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
        throw field_error(entry_name, "expected [re, im]");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return validate(std::move(m), std::move(dims));
}

std::string state_to_json(const DensityMatrix& rho, int indent) {
  json doc;
  doc["dims"] = rho.dims();
  json rows = json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(indent);
}

DensityMatrix read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << state_to_json(rho, 1) << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace csskit
