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


// twzeta command-line front end. Links only the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "twzeta/twzeta.h"

namespace {

enum Exit { kOk = 0, kOther = 1, kConfig = 2, kContradiction = 3 };

struct ModelDeleter {
  void operator()(twz_model* m) const { twz_model_free(m); }
};
struct ResultDeleter {
  void operator()(twz_result* r) const { twz_result_free(r); }
};
using ModelPtr = std::unique_ptr<twz_model, ModelDeleter>;
using ResultPtr = std::unique_ptr<twz_result, ResultDeleter>;

int exit_for(twz_status s) {
  std::cerr << "twzeta: " << twz_last_error() << "\n";
  return s == TWZ_ERR_CONFIG || s == TWZ_ERR_IO ? kConfig : kOther;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const ResultPtr& r, const std::string& out_path) {
  std::string json = std::string(twz_result_json(r.get())) + "\n";
  if (out_path.empty()) {
    std::cout << json;
  } else if (!write_file(out_path, json)) {
    std::cerr << "twzeta: cannot write " << out_path << "\n";
    return kOther;
  }
  if (twz_result_contradiction(r.get())) {
    std::cerr << "twzeta: internal contradiction recorded in report\n";
    return kContradiction;
  }
  return kOk;
}

int load(const std::string& path, ModelPtr& model) {
  twz_model* m = nullptr;
  twz_status s = twz_model_from_file(path.c_str(), &m);
  if (s != TWZ_OK) return exit_for(s);
  model.reset(m);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted dynamical zeta functions of model self-maps over finite fields"};
  app.set_version_flag("--version", std::string(twz_version()));
  app.require_subcommand(1);

  std::string model_path, out_path, csv_path, tol;
  std::size_t terms = 0;
  unsigned iterate = 1, max_twist = 1, bell_n = 1;

  auto* zeta = app.add_subcommand("zeta", "Run the full pipeline and print the report");
  zeta->add_option("--model", model_path, "Model config file")->required();
  zeta->add_option("--terms", terms, "Series truncation order")->check(CLI::PositiveNumber);
  zeta->add_option("--out", out_path, "Write the report here instead of stdout");
  zeta->add_option("--csv", csv_path, "Write n,trace,|coeff| rows here");

  auto* verify = app.add_subcommand("verify", "Run the pipeline for iterates r = 1..R");
  verify->add_option("--model", model_path, "Model config file")->required();
  verify->add_option("--iterate", iterate, "Largest iterate R")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "Enclosure tolerance, e.g. 1e-9 or 1/1000");

  auto* oracle = app.add_subcommand("oracle", "Compare traces with fixed-point counts");
  oracle->add_option("--model", model_path, "Model config file")->required();
  oracle->add_option("--max-twist", max_twist, "Largest twist n")->required()->check(CLI::PositiveNumber);

  auto* bell = app.add_subcommand("bell", "Print Bell polynomials P_1..P_K");
  bell->add_option("--n", bell_n, "K")->required()->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  twz_result* raw = nullptr;
  ModelPtr model;
  if (!bell->parsed()) {
    if (int rc = load(model_path, model)) return rc;
  }

  if (zeta->parsed()) {
    twz_options opts{terms, 0, nullptr};
    if (twz_status s = twz_run(model.get(), &opts, &raw); s != TWZ_OK) return exit_for(s);
    ResultPtr r(raw);
    if (!csv_path.empty() && !write_file(csv_path, twz_result_csv(r.get()))) {
      std::cerr << "twzeta: cannot write " << csv_path << "\n";
      return kOther;
    }
    return emit(r, out_path);
  }
  if (verify->parsed()) {
    twz_options opts{0, 0, tol.empty() ? nullptr : tol.c_str()};
    if (twz_status s = twz_scan(model.get(), iterate, &opts, &raw); s != TWZ_OK) return exit_for(s);
    return emit(ResultPtr(raw), "");
  }
  if (oracle->parsed()) {
    if (twz_status s = twz_oracle(model.get(), max_twist, &raw); s != TWZ_OK) return exit_for(s);
    return emit(ResultPtr(raw), "");
  }
  if (twz_status s = twz_bell(bell_n, &raw); s != TWZ_OK) return exit_for(s);
  return emit(ResultPtr(raw), "");
}
