// Copyright 2026 The symext Authors.
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

#include "symext/state_io.hpp"

#include <fstream>
#include <sstream>

#include "symext/error.hpp"

namespace symext::io {

using nlohmann::json;

json matrix_to_json(const CMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row_re = json::array();
    json row_im = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) {
    throw ValidationError("matrix object needs a \"re\" field");
  }
  const json& re = j.at("re");
  if (!re.is_array() || re.empty()) throw ValidationError("\"re\" must be a non-empty array");
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = static_cast<Eigen::Index>(re.at(0).size());
  const bool has_im = j.contains("im");
  if (has_im && (!j.at("im").is_array() || static_cast<Eigen::Index>(j.at("im").size()) != rows)) {
    throw ValidationError("\"im\" must match \"re\" in shape");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = re.at(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ValidationError("ragged \"re\" matrix");
    }
    const json* row_im = has_im ? &j.at("im").at(r) : nullptr;
    if (row_im && (!row_im->is_array() || static_cast<Eigen::Index>(row_im->size()) != cols)) {
      throw ValidationError("ragged \"im\" matrix");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!row.at(c).is_number() || (row_im && !row_im->at(c).is_number())) {
        throw ValidationError("matrix entries must be numbers");
      }
      m(r, c) = cd(row.at(c).get<double>(), row_im ? row_im->at(c).get<double>() : 0.0);
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) {
  json out = matrix_to_json(rho.matrix());
  json party = json::array();
  for (Party p : rho.profile().parties()) party.push_back(p == Party::kA ? "A" : "B");
  out["dims"] = rho.profile().dims();
  out["party"] = std::move(party);
  return out;
}

DensityMatrix state_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("dims") || !j.contains("party")) {
      throw ValidationError("state object needs \"dims\" and \"party\"");
    }
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_integer()) throw ValidationError("\"dims\" must hold integers");
      dims.push_back(d.get<int>());
    }
    std::vector<Party> parties;
    for (const auto& p : j.at("party")) {
      const auto s = p.get<std::string>();
      if (s == "A") {
        parties.push_back(Party::kA);
      } else if (s == "B") {
        parties.push_back(Party::kB);
      } else {
        throw ValidationError("party labels must be \"A\" or \"B\"");
      }
    }
    return DensityMatrix(matrix_from_json(j), DimensionProfile(std::move(dims), std::move(parties)));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed state: ") + e.what());
  }
}

void write_state(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << state_to_json(rho).dump(1) << '\n';
}

DensityMatrix read_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ValidationError("state file " + path + " is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

}  // namespace symext::io
