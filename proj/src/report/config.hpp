// Copyright 2026 The twzeta Authors
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


#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exact/rational.hpp"
#include "models/families.hpp"
#include "models/graded.hpp"
#include "json.hpp"

namespace twz {

enum class ModelKind { torus, abelian_product, constant, custom_graded };

const char* kind_name(ModelKind k) noexcept;

struct PieceConfig {
  unsigned degree = 0;
  unsigned weight = 0;
  std::vector<std::vector<Rational>> f_action;
  std::vector<std::vector<Rational>> frob_action;

  friend bool operator==(const PieceConfig&, const PieceConfig&) = default;
};

struct ModelConfig {
  ModelKind kind = ModelKind::constant;
  Integer q = 2;
  std::optional<std::vector<std::vector<Integer>>> matrix;
  std::optional<Integer> frob_trace;
  std::vector<PieceConfig> pieces;  // custom_graded only
  bool proper = false;              // custom_graded only
  unsigned dim = 0;                 // custom_graded only
  unsigned iterate = 1;
  std::optional<std::size_t> terms;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// Throws ConfigError on malformed input, unknown keys or missing fields.
ModelConfig parse_config(const nlohmann::json& j);
ModelConfig parse_config_text(const std::string& text);
nlohmann::json config_to_json(const ModelConfig& c);

// Graded action of f^iterate. Model-level validation failures become ConfigError.
GradedAction build_action(const ModelConfig& c);

std::optional<TorusModel> torus_model(const ModelConfig& c);
std::optional<AbelianProductModel> abelian_model(const ModelConfig& c);

// Integers within 2^53 as JSON numbers, larger ones as decimal strings.
nlohmann::json integer_json(const Integer& z);
// Always a "num/den" string.
nlohmann::json rational_json(const Rational& r);

}  // namespace twz
