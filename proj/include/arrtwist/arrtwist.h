// Copyright 2026 The arrtwist Authors
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


#ifndef ARRTWIST_ARRTWIST_H_
#define ARRTWIST_ARRTWIST_H_

#include <stddef.h>

#if defined(_WIN32)
#define AT_API __declspec(dllexport)
#else
#define AT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes match the CLI exit codes. */
typedef enum {
    AT_OK = 0,
    AT_ERR_INPUT = 1,
    AT_ERR_REFUSAL = 2,
    AT_ERR_DISAGREEMENT = 3,
    AT_ERR_INTERNAL = 4
} at_status;

typedef struct at_arrangement at_arrangement;
typedef struct at_presentation at_presentation;
typedef struct at_complex at_complex;

/* Library and file-format versions. Static storage. */
AT_API const char* at_version(void);
/* Message of the last failure on this thread, "" if none. */
AT_API const char* at_last_error(void);
/* Frees strings returned through char** out parameters. */
AT_API void at_string_free(char* s);

/* Runs a JSON job {"command": ...}. The report is always written (an error
   report on failure) and must be released with at_string_free. */
AT_API at_status at_run_job(const char* job_json, char** report_json);

AT_API at_status at_arrangement_from_json(const char* json, at_arrangement** out);
AT_API void at_arrangement_free(at_arrangement* a);
AT_API size_t at_arrangement_size(const at_arrangement* a);
/* -1 for infinite girth. */
AT_API at_status at_arrangement_girth(const at_arrangement* a, int* girth);
/* Writes b_0..b_{r-1} into betti (up to capacity entries); count receives r. */
AT_API at_status at_arrangement_betti(const at_arrangement* a, long* betti, size_t capacity, size_t* count,
                                      long* euler_characteristic);

AT_API at_status at_presentation_from_json(const char* json, at_presentation** out);
AT_API void at_presentation_free(at_presentation* p);
/* b_1^t for t = 0..n into values (capacity at least n + 1); count receives n + 1. */
AT_API at_status at_presentation_milnor_spectrum(const at_presentation* p, long* values, size_t capacity,
                                                 size_t* count);

/* Spectrum b_1^0..b_1^n; obstructed is 1 or 0. */
AT_API at_status at_milnor_obstruct(size_t n, const long* values, size_t count, int* obstructed, long* b1_total);

AT_API at_status at_complex_from_json(const char* json, at_complex** out);
AT_API void at_complex_free(at_complex* c);
/* JSON list of per-degree homology groups. */
AT_API at_status at_complex_homology(const at_complex* c, char** groups_json);
AT_API at_status at_complex_isomorphic(const at_complex* a, const at_complex* b, int* isomorphic);

#ifdef __cplusplus
}
#endif

#endif
