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


#ifndef TWZETA_TWZETA_H_
#define TWZETA_TWZETA_H_

#include <stddef.h>

#if defined(_WIN32)
#define TWZ_API __declspec(dllexport)
#else
#define TWZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twz_status {
  TWZ_OK = 0,
  TWZ_ERR_INVALID_ARGUMENT = 1,
  TWZ_ERR_CONFIG = 2,
  TWZ_ERR_IO = 3,
  TWZ_ERR_PRECONDITION = 4,
  TWZ_ERR_RECONSTRUCTION = 5,
  TWZ_ERR_UNSUPPORTED_RANK = 6,
  TWZ_ERR_INSUFFICIENT_EXTENSION = 7,
  TWZ_ERR_NON_ISOLATED_FIXED_POINTS = 8,
  TWZ_ERR_NO_ROOTS = 9,
  TWZ_ERR_ZERO_ROOT = 10,
  TWZ_ERR_PRECISION = 11,
  TWZ_ERR_INTERNAL = 12
} twz_status;

typedef struct twz_model twz_model;
typedef struct twz_result twz_result;

/* Zero fields select defaults: terms from the config or 2 * Betti + 4,
   iterate from the config, tol = "1/1000000000". */
typedef struct twz_options {
  size_t terms;
  unsigned iterate;
  const char* tol; /* exact text: "1e-9", "1/1000", "0.001" */
} twz_options;

TWZ_API const char* twz_version(void);

/* Message for the last failed call on this thread; never NULL. */
TWZ_API const char* twz_last_error(void);

TWZ_API twz_status twz_model_from_json(const char* json, twz_model** out);
TWZ_API twz_status twz_model_from_file(const char* path, twz_model** out);
/* Canonical JSON of the parsed config; owned by the model. */
TWZ_API const char* twz_model_json(const twz_model* model);
TWZ_API void twz_model_free(twz_model* model);

/* Full pipeline: zeta, positivity, spectral verdicts, lemma checks, n0. */
TWZ_API twz_status twz_run(const twz_model* model, const twz_options* opts, twz_result** out);
/* Pipeline for iterates r = 1..r_max; JSON is {"reports": [...]}. */
TWZ_API twz_status twz_scan(const twz_model* model, unsigned r_max, const twz_options* opts, twz_result** out);
/* Traces against fixed-point oracles for twists 1..max_twist. */
TWZ_API twz_status twz_oracle(const twz_model* model, unsigned max_twist, twz_result** out);
TWZ_API twz_status twz_bell(unsigned n, twz_result** out);

/* Strings are owned by the result and live until twz_result_free. */
TWZ_API const char* twz_result_json(const twz_result* result);
/* NULL unless the result comes from twz_run. */
TWZ_API const char* twz_result_csv(const twz_result* result);
/* Nonzero when a report records an internal contradiction. */
TWZ_API int twz_result_contradiction(const twz_result* result);
TWZ_API void twz_result_free(twz_result* result);

#ifdef __cplusplus
}
#endif

#endif  // TWZETA_TWZETA_H_
