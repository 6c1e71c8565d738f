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
#include "json.hpp"
#include "report/config.hpp"

namespace twz {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  std::optional<std::size_t> terms;  // overrides the config
  Rational tol = make_rational(1, 1000000000);
  unsigned n0_max = 8;
};

struct Report {
  nlohmann::json body;  // canonical, includes tool_version and run_hash
  std::vector<std::string> contradictions;
  std::string csv;  // n,trace,abs_zeta_coeff

  std::string canonical() const;
};

// Model construction, traces, zeta, positivity of log-zeta, spectral report,
// disc lemma, weight bounds and n0. Verdicts of "fails" are results, not errors.
Report run_pipeline(const ModelConfig& cfg, const RunOptions& opts = {});

// run_pipeline for iterate = 1..r_max, evaluated concurrently, ordered by r.
std::vector<Report> scan_iterates(const ModelConfig& cfg, unsigned r_max, const RunOptions& opts = {});

// Per twist n = 1..max_twist: Tr(f F^n), the fixed-point formula and, where
// feasible, the brute-force count.
nlohmann::json oracle_table(const ModelConfig& cfg, unsigned max_twist);

nlohmann::json bell_table(unsigned n);

// Sorted keys, no whitespace.
std::string canonical_dump(const nlohmann::json& j);

// Adds tool_version and run_hash (FNV-1a 64 of the canonical dump without run_hash).
void stamp(nlohmann::json& j);

}  // namespace twz
