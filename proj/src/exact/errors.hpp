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
#include <stdexcept>
#include <string>

namespace twz {

enum class Errc {
  precondition,
  reconstruction_failure,
  config,
  unsupported_rank,
  insufficient_extension,
  non_isolated_fixed_points,
  no_roots,
  zero_root,
  precision,
  internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(Errc::precondition, what) {}
};

// Raised by reconstruct_rational when no rational function within the degree
// bounds matches the supplied coefficients; mismatch_index() is the first
// coefficient index that could not be matched.
class ReconstructionError : public Error {
 public:
  ReconstructionError(std::size_t index, const std::string& what)
      : Error(Errc::reconstruction_failure, what), index_(index) {}
  std::size_t mismatch_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(Errc::config, what) {}
};

}  // namespace twz
