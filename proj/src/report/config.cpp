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


#include "report/config.hpp"

#include <set>

#include "exact/errors.hpp"

namespace twz {

using nlohmann::json;

namespace {

const Integer kMaxExactDouble = Integer("9007199254740992");

Integer read_integer(const json& j, const std::string& what) {
  try {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
  } catch (const PreconditionError&) {
  }
  throw ConfigError(what + " must be an integer (number or decimal string)");
}

Rational read_rational(const json& j, const std::string& what) {
  try {
    if (j.is_number_integer()) return Rational(read_integer(j, what));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const PreconditionError&) {
  }
  throw ConfigError(what + " must be an integer or a \"num/den\" string");
}

unsigned read_unsigned(const json& j, const std::string& what) {
  Integer z = read_integer(j, what);
  if (z < 0 || !z.fits_uint_p()) throw ConfigError(what + " must be a nonnegative integer");
  return static_cast<unsigned>(z.get_ui());
}

template <class T, class F>
std::vector<std::vector<T>> read_matrix(const json& j, const std::string& what, F read) {
  if (!j.is_array() || j.empty()) throw ConfigError(what + " must be a nonempty array of rows");
  std::vector<std::vector<T>> m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw ConfigError(what + " must be square");
    std::vector<T> r;
    for (const auto& x : row) r.push_back(read(x, what));
    m.push_back(std::move(r));
  }
  return m;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown key \"" + k + "\" in " + where);
}

const json& require(const json& j, const char* key, ModelKind kind) {
  if (!j.contains(key)) throw ConfigError(std::string("kind ") + kind_name(kind) + " requires \"" + key + "\"");
  return j.at(key);
}

Matrix to_matrix(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = rows[i][k];
  return m;
}

IntMatrix to_int_matrix(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = rows[i][k];
  return m;
}

template <class T, class F>
json matrix_json(const std::vector<std::vector<T>>& m, F f) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(f(x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

const char* kind_name(ModelKind k) noexcept {
  switch (k) {
    case ModelKind::torus:
      return "torus";
    case ModelKind::abelian_product:
      return "abelian_product";
    case ModelKind::constant:
      return "constant";
    case ModelKind::custom_graded:
      return "custom_graded";
  }
  return "constant";
}

json integer_json(const Integer& z) {
  if (abs(z) <= kMaxExactDouble) return json(z.get_si());
  return json(z.get_str());
}

json rational_json(const Rational& r) { return json(to_string(r)); }

ModelConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("model config must be a JSON object");
  check_keys(j, {"kind", "q", "matrix", "frob_trace", "pieces", "proper", "dim", "iterate", "terms"}, "model config");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ConfigError("\"kind\" is required");
  ModelConfig c;
  const std::string kind = j["kind"];
  if (kind == "torus")
    c.kind = ModelKind::torus;
  else if (kind == "abelian_product")
    c.kind = ModelKind::abelian_product;
  else if (kind == "constant")
    c.kind = ModelKind::constant;
  else if (kind == "custom_graded")
    c.kind = ModelKind::custom_graded;
  else
    throw ConfigError("unknown kind \"" + kind + "\"");

  c.q = read_integer(require(j, "q", c.kind), "q");
  if (c.q < 2) throw ConfigError("q must be >= 2");
  if (!is_prime_power(c.q)) throw ConfigError("q = " + c.q.get_str() + " is not a prime power");
  if (j.contains("iterate")) c.iterate = read_unsigned(j["iterate"], "iterate");
  if (c.iterate < 1) throw ConfigError("iterate must be >= 1");
  if (j.contains("terms")) c.terms = read_unsigned(j["terms"], "terms");

  auto forbid = [&](const char* key) {
    if (j.contains(key)) throw ConfigError(std::string("\"") + key + "\" is not used by kind " + kind);
  };
  switch (c.kind) {
    case ModelKind::torus:
      c.matrix = read_matrix<Integer>(require(j, "matrix", c.kind), "matrix", read_integer);
      for (const char* k : {"frob_trace", "pieces", "proper", "dim"}) forbid(k);
      break;
    case ModelKind::abelian_product:
      c.matrix = read_matrix<Integer>(require(j, "matrix", c.kind), "matrix", read_integer);
      c.frob_trace = read_integer(require(j, "frob_trace", c.kind), "frob_trace");
      for (const char* k : {"pieces", "proper", "dim"}) forbid(k);
      break;
    case ModelKind::constant:
      for (const char* k : {"matrix", "frob_trace", "pieces", "proper", "dim"}) forbid(k);
      break;
    case ModelKind::custom_graded: {
      for (const char* k : {"matrix", "frob_trace"}) forbid(k);
      const json& ps = require(j, "pieces", c.kind);
      if (!ps.is_array() || ps.empty()) throw ConfigError("\"pieces\" must be a nonempty array");
      for (const auto& p : ps) {
        if (!p.is_object()) throw ConfigError("each piece must be an object");
        check_keys(p, {"degree", "weight", "f_action", "frob_action"}, "piece");
        for (const char* k : {"degree", "weight", "f_action", "frob_action"})
          if (!p.contains(k)) throw ConfigError(std::string("piece requires \"") + k + "\"");
        PieceConfig pc;
        pc.degree = read_unsigned(p["degree"], "degree");
        pc.weight = read_unsigned(p["weight"], "weight");
        pc.f_action = read_matrix<Rational>(p["f_action"], "f_action", read_rational);
        pc.frob_action = read_matrix<Rational>(p["frob_action"], "frob_action", read_rational);
        c.pieces.push_back(std::move(pc));
      }
      const json& pr = require(j, "proper", c.kind);
      if (!pr.is_boolean()) throw ConfigError("\"proper\" must be a boolean");
      c.proper = pr.get<bool>();
      c.dim = read_unsigned(require(j, "dim", c.kind), "dim");
      break;
    }
  }
  return c;
}

ModelConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const ModelConfig& c) {
  json j;
  j["kind"] = kind_name(c.kind);
  j["q"] = integer_json(c.q);
  j["iterate"] = c.iterate;
  if (c.terms) j["terms"] = *c.terms;
  if (c.matrix) j["matrix"] = matrix_json(*c.matrix, integer_json);
  if (c.frob_trace) j["frob_trace"] = integer_json(*c.frob_trace);
  if (c.kind == ModelKind::custom_graded) {
    json ps = json::array();
    for (const auto& p : c.pieces)
      ps.push_back({{"degree", p.degree},
                    {"weight", p.weight},
                    {"f_action", matrix_json(p.f_action, rational_json)},
                    {"frob_action", matrix_json(p.frob_action, rational_json)}});
    j["pieces"] = ps;
    j["proper"] = c.proper;
    j["dim"] = c.dim;
  }
  return j;
}

std::optional<TorusModel> torus_model(const ModelConfig& c) {
  if (c.kind != ModelKind::torus) return std::nullopt;
  return iterate_model(TorusModel{c.q, to_int_matrix(*c.matrix)}, c.iterate);
}

std::optional<AbelianProductModel> abelian_model(const ModelConfig& c) {
  if (c.kind != ModelKind::abelian_product) return std::nullopt;
  IntMatrix m = to_int_matrix(*c.matrix);
  return iterate_model(AbelianProductModel{c.q, *c.frob_trace, static_cast<unsigned>(m.size()), m}, c.iterate);
}

GradedAction build_action(const ModelConfig& c) {
  try {
    switch (c.kind) {
      case ModelKind::torus:
        return torus_graded_action(*torus_model(c));
      case ModelKind::abelian_product:
        return abelian_graded_action(*abelian_model(c));
      case ModelKind::constant:
        return constant_map_action(c.q);
      case ModelKind::custom_graded: {
        std::vector<GradedPiece> ps;
        for (const auto& p : c.pieces) {
          if (p.f_action.size() != p.frob_action.size())
            throw ConfigError("piece (degree " + std::to_string(p.degree) + ", weight " +
                              std::to_string(p.weight) + "): f_action and frob_action differ in size");
          ps.push_back({p.degree, p.weight, to_matrix(p.f_action), to_matrix(p.frob_action)});
        }
        return iterate_action(make_graded_action(std::move(ps), c.q, c.proper, c.dim), c.iterate);
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == Errc::precondition || e.code() == Errc::unsupported_rank) throw ConfigError(e.what());
    throw;
  }
  throw ConfigError("unknown model kind");
}

}  // namespace twz
