// Copyright 2026 The avdist Authors
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

// JSON forms of matrices, quantum objects and ensembles.
//
//   matrix:   {"dim_rows": r, "dim_cols": c, "entries": [[re, im], ...]}  (row-major)
//   state:    {"kind": "state", "mat": matrix}
//   povm:     {"kind": "povm", "effects": [matrix, ...]}
//   channel:  {"kind": "channel", "choi": matrix} | {"kind": "channel", "kraus": [matrix, ...]}
//   ensemble: {"kind": "haar", "dim": d} | {"kind": "brickwork", "qubits": n, "depth": k}
//           | {"kind": "fixed", "unitaries": [matrix, ...], "weights": [...]}

#ifndef AVDIST_IO_HPP
#define AVDIST_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "avdist/ensembles.hpp"
#include "avdist/quantum.hpp"

namespace avdist {

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"dim_rows", m.rows()}, {"dim_cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("dim_rows").get<Eigen::Index>();
    const auto cols = j.at("dim_cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (rows <= 0 || cols <= 0) throw Error(Errc::ParseError, "matrix dimensions must be positive");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols)
      throw Error(Errc::ParseError, "entries length " + std::to_string(entries.size()) + " != " +
                                        std::to_string(rows * cols));
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index c = 0; c < cols; ++c) {
        const auto& e = entries[static_cast<std::size_t>(i * cols + c)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
          throw Error(Errc::ParseError, "entry must be a [re, im] pair");
        m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
      }
    require_finite(m);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

using QuantumObject = std::variant<DensityMatrix, Povm, ChannelChoi>;

inline nlohmann::json to_json(const DensityMatrix& rho) {
  return {{"kind", "state"}, {"mat", matrix_to_json(rho.mat())}};
}

inline nlohmann::json to_json(const Povm& m) {
  nlohmann::json effects = nlohmann::json::array();
  for (const auto& e : m.effects()) effects.push_back(matrix_to_json(e));
  return {{"kind", "povm"}, {"effects", std::move(effects)}};
}

inline nlohmann::json to_json(const ChannelChoi& ch) {
  return {{"kind", "channel"}, {"choi", matrix_to_json(ch.choi())}};
}

inline nlohmann::json to_json(const QuantumObject& obj) {
  return std::visit([](const auto& o) { return to_json(o); }, obj);
}

inline std::vector<ComplexMatrix> matrix_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(Errc::ParseError, std::string("missing array '") + key + "'");
  std::vector<ComplexMatrix> out;
  for (const auto& m : j[key]) out.push_back(matrix_from_json(m));
  return out;
}

inline QuantumObject object_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(Errc::ParseError, "object needs a string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "state") {
    if (!j.contains("mat")) throw Error(Errc::ParseError, "state needs 'mat'");
    return DensityMatrix::from_matrix(matrix_from_json(j["mat"]));
  }
  if (kind == "povm") return Povm::from_effects(matrix_list(j, "effects"));
  if (kind == "channel") {
    if (j.contains("choi")) return ChannelChoi::from_choi(matrix_from_json(j["choi"]));
    return channel_from_kraus(matrix_list(j, "kraus"));
  }
  throw Error(Errc::ParseError, "unknown object kind '" + kind + "'");
}

inline nlohmann::json to_json(const UnitaryEnsemble& ens) {
  switch (ens.kind()) {
    case UnitaryEnsemble::Kind::Haar: return {{"kind", "haar"}, {"dim", ens.dim()}};
    case UnitaryEnsemble::Kind::Brickwork:
      return {{"kind", "brickwork"}, {"qubits", ens.qubits()}, {"depth", ens.depth()}};
    case UnitaryEnsemble::Kind::Fixed: {
      nlohmann::json us = nlohmann::json::array();
      for (const auto& u : ens.unitaries()) us.push_back(matrix_to_json(u));
      return {{"kind", "fixed"}, {"unitaries", std::move(us)}, {"weights", ens.weights()}};
    }
  }
  return {};
}

inline UnitaryEnsemble ensemble_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "haar") return UnitaryEnsemble::haar(j.at("dim").get<Eigen::Index>());
    if (kind == "brickwork")
      return UnitaryEnsemble::brickwork(j.at("qubits").get<int>(), j.value("depth", 0));
    if (kind == "fixed")
      return UnitaryEnsemble::fixed(matrix_list(j, "unitaries"), j.at("weights").get<std::vector<double>>());
    throw Error(Errc::ParseError, "unknown ensemble kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

}  // namespace avdist

#endif  // AVDIST_IO_HPP
