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

// JSON model and state files.
//
// Model: {"dim": n, "hbar": x, "H": [[re, im], ...], "jump_ops": [[[re, im], ...], ...]}
// State: {"dim": n, "rho": [[re, im], ...]}
// Matrices are flat row-major lists of n*n [re, im] pairs. "hbar" defaults
// to 1 and "jump_ops" to an empty list.

#pragma once

#include <filesystem>
#include <stdexcept>

#include "cpphase/lindblad.hpp"
#include "json.hpp"

namespace cpphase {

/// A model or state document is malformed; the message names the field.
class ModelFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LindbladModel parse_model(const nlohmann::json& doc);
LindbladModel load_model(const std::filesystem::path& path);
nlohmann::json model_to_json(const LindbladModel& model);

DensityMatrix parse_state(const nlohmann::json& doc);
DensityMatrix load_state(const std::filesystem::path& path);
nlohmann::json state_to_json(const DensityMatrix& rho);

}  // namespace cpphase
