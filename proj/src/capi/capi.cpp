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


#include "twzeta/twzeta.h"

#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "exact/errors.hpp"
#include "report/config.hpp"
#include "report/pipeline.hpp"

struct twz_model {
  twz::ModelConfig config;
  std::string json;
};

struct twz_result {
  std::string json;
  std::optional<std::string> csv;
  bool contradiction = false;
};

namespace {

thread_local std::string t_last_error;

twz_status status_of(twz::Errc c) {
  switch (c) {
    case twz::Errc::precondition:
      return TWZ_ERR_PRECONDITION;
    case twz::Errc::reconstruction_failure:
      return TWZ_ERR_RECONSTRUCTION;
    case twz::Errc::config:
      return TWZ_ERR_CONFIG;
    case twz::Errc::unsupported_rank:
      return TWZ_ERR_UNSUPPORTED_RANK;
    case twz::Errc::insufficient_extension:
      return TWZ_ERR_INSUFFICIENT_EXTENSION;
    case twz::Errc::non_isolated_fixed_points:
      return TWZ_ERR_NON_ISOLATED_FIXED_POINTS;
    case twz::Errc::no_roots:
      return TWZ_ERR_NO_ROOTS;
    case twz::Errc::zero_root:
      return TWZ_ERR_ZERO_ROOT;
    case twz::Errc::precision:
      return TWZ_ERR_PRECISION;
    case twz::Errc::internal:
      return TWZ_ERR_INTERNAL;
  }
  return TWZ_ERR_INTERNAL;
}

twz_status fail(twz_status s, const std::string& msg) {
  t_last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
twz_status guarded(F&& f) {
  try {
    t_last_error.clear();
    return f();
  } catch (const twz::ReconstructionError& e) {
    return fail(TWZ_ERR_RECONSTRUCTION,
                std::string(e.what()) + " (first mismatch at index " + std::to_string(e.mismatch_index()) + ")");
  } catch (const twz::Error& e) {
    return fail(status_of(e.code()), std::string(twz::errc_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(TWZ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TWZ_ERR_INTERNAL, e.what());
  }
}

twz::RunOptions options(const twz_options* o) {
  twz::RunOptions r;
  if (!o) return r;
  if (o->terms) r.terms = o->terms;
  if (o->tol) {
    try {
      r.tol = twz::parse_rational(o->tol);
    } catch (const twz::PreconditionError&) {
      throw twz::ConfigError(std::string("invalid tolerance \"") + o->tol + "\"");
    }
    if (r.tol <= 0) throw twz::ConfigError("tolerance must be positive");
  }
  return r;
}

twz::ModelConfig with_iterate(twz::ModelConfig c, const twz_options* o) {
  if (o && o->iterate) c.iterate = o->iterate;
  return c;
}

}  // namespace

extern "C" {

const char* twz_version(void) { return twz::kToolVersion; }

const char* twz_last_error(void) { return t_last_error.c_str(); }

twz_status twz_model_from_json(const char* json, twz_model** out) {
  if (!json || !out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* m = new twz_model{twz::parse_config_text(json), {}};
    m->json = twz::canonical_dump(twz::config_to_json(m->config));
    *out = m;
    return TWZ_OK;
  });
}

twz_status twz_model_from_file(const char* path, twz_model** out) {
  if (!path || !out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(TWZ_ERR_IO, std::string("cannot open ") + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return twz_model_from_json(ss.str().c_str(), out);
}

const char* twz_model_json(const twz_model* model) { return model ? model->json.c_str() : nullptr; }

void twz_model_free(twz_model* model) { delete model; }

twz_status twz_run(const twz_model* model, const twz_options* opts, twz_result** out) {
  if (!model || !out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    twz::Report rep = twz::run_pipeline(with_iterate(model->config, opts), options(opts));
    *out = new twz_result{rep.canonical(), rep.csv, !rep.contradictions.empty()};
    return TWZ_OK;
  });
}

twz_status twz_scan(const twz_model* model, unsigned r_max, const twz_options* opts, twz_result** out) {
  if (!model || !out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  if (r_max == 0) return fail(TWZ_ERR_INVALID_ARGUMENT, "r_max must be >= 1");
  *out = nullptr;
  return guarded([&] {
    auto reports = twz::scan_iterates(model->config, r_max, options(opts));
    nlohmann::json list = nlohmann::json::array();
    bool contradiction = false;
    for (auto& r : reports) {
      contradiction = contradiction || !r.contradictions.empty();
      list.push_back(std::move(r.body));
    }
    nlohmann::json j = {{"reports", list}, {"r_max", r_max}};
    twz::stamp(j);
    *out = new twz_result{twz::canonical_dump(j), std::nullopt, contradiction};
    return TWZ_OK;
  });
}

twz_status twz_oracle(const twz_model* model, unsigned max_twist, twz_result** out) {
  if (!model || !out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  if (max_twist == 0) return fail(TWZ_ERR_INVALID_ARGUMENT, "max_twist must be >= 1");
  *out = nullptr;
  return guarded([&] {
    *out = new twz_result{twz::canonical_dump(twz::oracle_table(model->config, max_twist)), std::nullopt, false};
    return TWZ_OK;
  });
}

twz_status twz_bell(unsigned n, twz_result** out) {
  if (!out) return fail(TWZ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new twz_result{twz::canonical_dump(twz::bell_table(n)), std::nullopt, false};
    return TWZ_OK;
  });
}

const char* twz_result_json(const twz_result* result) { return result ? result->json.c_str() : nullptr; }

const char* twz_result_csv(const twz_result* result) {
  return result && result->csv ? result->csv->c_str() : nullptr;
}

int twz_result_contradiction(const twz_result* result) { return result && result->contradiction ? 1 : 0; }

void twz_result_free(twz_result* result) { delete result; }

}  // extern "C"
