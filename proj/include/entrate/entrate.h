// Copyright 2026 The entrate Authors.
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

/* C interface to entrate. All objects are opaque handles owned by the
 * caller and released with the matching _free function. Functions return
 * ER_OK or an error status; the message of the last error on the calling
 * thread is available from er_last_error(). Strings returned through char**
 * are released with er_string_free(). */

#ifndef ENTRATE_H
#define ENTRATE_H

#include <stdint.h>

#if defined(ENTRATE_BUILDING_LIBRARY)
#define ER_API __attribute__((visibility("default")))
#else
#define ER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum er_status {
  ER_OK = 0,
  ER_INVALID_ARGUMENT = 1,
  ER_DIMENSION_MISMATCH = 2,
  ER_NOT_HERMITIAN = 3,
  ER_NOT_PSD = 4,
  ER_DOMAIN = 5,
  ER_NUMERICAL = 6,
  ER_NOT_GAPPED = 7,
  ER_RESOURCE = 8,
  ER_ADMISSIBILITY = 9,
  ER_INTERNAL = 10,
  ER_IO = 11,
  ER_PROVED_BOUND_VIOLATION = 12,
  ER_CONJECTURE_VIOLATION = 13,
  ER_UNKNOWN = 99
} er_status;

typedef struct er_operator er_operator;
typedef struct er_pair er_pair;
typedef struct er_state er_state;
typedef struct er_result er_result;

ER_API const char* er_version(void);
ER_API const char* er_last_error(void);
ER_API const char* er_status_name(er_status status);
ER_API void er_string_free(char* s);

/* Row-major real and imaginary parts; im may be NULL. */
ER_API er_status er_operator_create(int dim, const double* re, const double* im, er_operator** out);
ER_API er_status er_operator_from_json(const char* json, er_operator** out);
ER_API er_status er_operator_to_json(const er_operator* op, char** out);
ER_API int er_operator_dim(const er_operator* op);
ER_API void er_operator_free(er_operator* op);

ER_API er_status er_pair_from_json(const char* json, er_pair** out);
ER_API er_status er_pair_sample(int dim, double p, uint64_t seed, er_pair** out);
ER_API er_status er_pair_to_json(const er_pair* pair, char** out);
ER_API void er_pair_free(er_pair* pair);

ER_API er_status er_state_from_json(const char* json, er_state** out);
ER_API void er_state_free(er_state* state);

ER_API er_status er_entanglement_rate(const er_state* state, const er_operator* h, double* out);
ER_API er_status er_lambda(const er_operator* h, const er_pair* pair, double* out);
/* h_opt may be NULL. */
ER_API er_status er_max_lambda(const er_pair* pair, double* value, er_operator** h_opt);
ER_API er_status er_proof_audit(const er_pair* pair, char** report_json, int* bounds_hold);

ER_API er_status er_sie_lambda_bound(double p, double* out);
ER_API er_status er_sie_rate_bound(int d, double h_norm, double* out);
ER_API er_status er_sim_bound(double p, double* out);

/* Runs a subcommand (rate, lambda-max, proof-audit, sim-scan, beta-search,
 * adiabatic, locality, bounds) on a JSON config. */
ER_API er_status er_run(const char* command, const char* config_json, int workers, er_result** out);
ER_API int er_result_exit_code(const er_result* r);
ER_API int er_result_is_csv(const er_result* r);
ER_API const char* er_result_text(const er_result* r);
ER_API const char* er_result_meta(const er_result* r);
ER_API const char* er_result_bundle(const er_result* r);
ER_API const char* er_result_message(const er_result* r);
ER_API void er_result_free(er_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ENTRATE_H */
