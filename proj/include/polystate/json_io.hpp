// Copyright 2026 The Polystate Authors.
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

#ifndef POLYSTATE_JSON_IO_HPP
#define POLYSTATE_JSON_IO_HPP

// JSON documents:
//   state     {"n_max": N, "amplitudes": [[re, im], ...]}          N+1 pairs
//   operator  {"n_max": N, "matrix": [[[re, im], ...], ...]}      row-major
//   bipartite {"n": n, "c": [[re, im], ...], "seed_1": state, "seed_2": state}
// Readers throw FormatError on anything malformed.

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polystate/entanglement.hpp"
#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/fock_operator.hpp"

namespace polystate {

using Json = nlohmann::json;

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError(where + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline int n_max_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("n_max") || !j["n_max"].is_number_integer()) {
    throw FormatError(where + ": missing integer field \"n_max\"");
  }
  const auto n = j["n_max"].get<long long>();
  if (n < 0 || n > 100000) {
    throw FormatError(where + ": n_max out of range");
  }
  return static_cast<int>(n);
}

inline Json state_to_json(const FockVector& state) {
  Json amps = Json::array();
  for (std::size_t m = 0; m < state.size(); ++m) {
    amps.push_back(complex_to_json(state[m]));
  }
  return {{"n_max", state.n_max()}, {"amplitudes", std::move(amps)}};
}

inline FockVector state_from_json(const Json& j, const std::string& where = "state") {
  const int n_max = n_max_from_json(j, where);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
    throw FormatError(where + ": missing array field \"amplitudes\"");
  }
  const Json& amps = j["amplitudes"];
  if (amps.size() != static_cast<std::size_t>(n_max) + 1) {
    throw FormatError(where + ": expected " + std::to_string(n_max + 1) +
                      " amplitudes, got " + std::to_string(amps.size()));
  }
  std::vector<Complex> out;
  out.reserve(amps.size());
  for (std::size_t m = 0; m < amps.size(); ++m) {
    out.push_back(complex_from_json(amps[m], where + ".amplitudes[" +
                                                 std::to_string(m) + "]"));
  }
  try {
    return FockVector(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

inline Json operator_to_json(const FockOperator& op) {
  Json rows = Json::array();
  for (Eigen::Index m = 0; m < op.dim(); ++m) {
    Json row = Json::array();
    for (Eigen::Index mp = 0; mp < op.dim(); ++mp) {
      row.push_back(complex_to_json(op(m, mp)));
    }
    rows.push_back(std::move(row));
  }
  return {{"n_max", op.n_max()}, {"matrix", std::move(rows)}};
}

inline FockOperator operator_from_json(const Json& j,
                                       const std::string& where = "operator") {
  const int n_max = n_max_from_json(j, where);
  if (!j.contains("matrix") || !j["matrix"].is_array()) {
    throw FormatError(where + ": missing array field \"matrix\"");
  }
  const Json& rows = j["matrix"];
  const auto dim = static_cast<std::size_t>(n_max) + 1;
  if (rows.size() != dim) {
    throw FormatError(where + ": expected " + std::to_string(dim) + " rows");
  }
  MatrixC mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t m = 0; m < dim; ++m) {
    if (!rows[m].is_array() || rows[m].size() != dim) {
      throw FormatError(where + ": row " + std::to_string(m) + " must have " +
                        std::to_string(dim) + " entries");
    }
    for (std::size_t mp = 0; mp < dim; ++mp) {
      mat(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(mp)) =
          complex_from_json(rows[m][mp], where + ".matrix[" + std::to_string(m) +
                                             "][" + std::to_string(mp) + "]");
    }
  }
  try {
    return FockOperator(std::move(mat));
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

inline bool is_operator_document(const Json& j) {
  return j.is_object() && j.contains("matrix");
}

inline Json bipartite_to_json(const BipartiteSpec& spec) {
  Json c = Json::array();
  for (Complex z : spec.c) c.push_back(complex_to_json(z));
  return {{"n", spec.n},
          {"c", std::move(c)},
          {"seed_1", state_to_json(spec.seed_1)},
          {"seed_2", state_to_json(spec.seed_2)}};
}

inline BipartiteSpec bipartite_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw FormatError("bipartite: missing integer field \"n\"");
  }
  if (!j.contains("c") || !j["c"].is_array()) {
    throw FormatError("bipartite: missing array field \"c\"");
  }
  if (!j.contains("seed_1") || !j.contains("seed_2")) {
    throw FormatError("bipartite: missing \"seed_1\" or \"seed_2\"");
  }
  BipartiteSpec spec;
  spec.n = j["n"].get<int>();
  for (std::size_t r = 0; r < j["c"].size(); ++r) {
    spec.c.push_back(complex_from_json(j["c"][r], "bipartite.c[" + std::to_string(r) + "]"));
  }
  spec.seed_1 = state_from_json(j["seed_1"], "bipartite.seed_1");
  spec.seed_2 = state_from_json(j["seed_2"], "bipartite.seed_2");
  try {
    spec.validate();
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }
  return spec;
}

inline Json entanglement_to_json(const EntanglementResult& res) {
  auto matrix_json = [](const MatrixC& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json d = Json::array();
  for (const MatrixC& slice : res.d_tensor) d.push_back(matrix_json(slice));
  return {{"s_linear", res.s_linear},
          {"f_matrix", matrix_json(res.f_matrix)},
          {"d_tensor", std::move(d)}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace polystate

#endif  // POLYSTATE_JSON_IO_HPP
