// Copyright 2026 The cp-phase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpphase/model_io.hpp"

#include <fstream>
#include <string>

namespace cpphase {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* field) {
  if (!doc.is_object()) throw ModelFormatError("document must be a JSON object");
  const auto it = doc.find(field);
  if (it == doc.end()) throw ModelFormatError(std::string(field) + ": missing field");
  return *it;
}

Index parse_dim(const json& doc) {
  const json& d = require(doc, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw ModelFormatError("dim: expected a positive integer");
  }
  return static_cast<Index>(d.get<long long>());
}

ComplexMatrix parse_matrix(const json& node, Index dim, const std::string& field) {
  if (!node.is_array()) throw ModelFormatError(field + ": expected a list of [re, im] pairs");
  if (static_cast<Index>(node.size()) != dim * dim) {
    throw ModelFormatError(field + ": expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(node.size()));
  }
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim * dim; ++i) {
    const json& e = node[static_cast<std::size_t>(i)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ModelFormatError(field + "[" + std::to_string(i) + "]: expected [re, im]");
    }
    m(i / dim, i % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!m.allFinite()) throw ModelFormatError(field + ": entries must be finite");
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelFormatError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(path.string() + ": invalid JSON: " + e.what());
  }
}

}  // namespace

LindbladModel parse_model(const json& doc) {
  const Index dim = parse_dim(doc);
  double hbar = 1.0;
  if (doc.contains("hbar")) {
    const json& h = doc["hbar"];
    if (!h.is_number() || !(h.get<double>() > 0.0)) {
      throw ModelFormatError("hbar: expected a positive number");
    }
    hbar = h.get<double>();
  }
  ComplexMatrix hamiltonian = parse_matrix(require(doc, "H"), dim, "H");
  if ((hamiltonian - hamiltonian.adjoint()).norm() > 1e-10 * std::max(1.0, hamiltonian.norm())) {
    throw ModelFormatError("H: matrix is not Hermitian");
  }
  std::vector<ComplexMatrix> jumps;
  if (doc.contains("jump_ops")) {
    const json& list = doc["jump_ops"];
    if (!list.is_array()) throw ModelFormatError("jump_ops: expected a list of matrices");
    for (std::size_t n = 0; n < list.size(); ++n) {
      jumps.push_back(parse_matrix(list[n], dim, "jump_ops[" + std::to_string(n) + "]"));
    }
  }
  return LindbladModel(std::move(hamiltonian), std::move(jumps), hbar);
}

LindbladModel load_model(const std::filesystem::path& path) { return parse_model(read_json(path)); }

json model_to_json(const LindbladModel& model) {
  json doc;
  doc["dim"] = model.dim();
  doc["hbar"] = model.hbar();
  doc["H"] = matrix_to_json(model.hamiltonian());
  doc["jump_ops"] = json::array();
  for (const auto& v : model.jump_ops()) doc["jump_ops"].push_back(matrix_to_json(v));
  return doc;
}

DensityMatrix parse_state(const json& doc) {
  const Index dim = parse_dim(doc);
  ComplexMatrix rho = parse_matrix(require(doc, "rho"), dim, "rho");
  try {
    return DensityMatrix(std::move(rho));
  } catch (const InvalidStateError& e) {
    throw ModelFormatError(std::string("rho: ") + e.what());
  }
}

DensityMatrix load_state(const std::filesystem::path& path) { return parse_state(read_json(path)); }

json state_to_json(const DensityMatrix& rho) {
  json doc;
  doc["dim"] = rho.dim();
  doc["rho"] = matrix_to_json(rho.matrix());
  return doc;
}

}  // namespace cpphase
