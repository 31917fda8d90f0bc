/* Copyright 2026 The qdistill Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libqdistill.
 *
 * Every fallible call returns a qd_status; on failure a description is
 * available from qd_last_error() on the same thread until the next call.
 * Objects are opaque handles released with their *_free function. Strings
 * returned through char** outputs are owned by the caller and released with
 * qd_string_free.
 */

#ifndef QDISTILL_QDISTILL_H
#define QDISTILL_QDISTILL_H

#include <stddef.h>
#include <stdint.h>

#if defined(QDISTILL_BUILDING_LIBRARY)
#define QD_API __attribute__((visibility("default")))
#else
#define QD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
    QD_OK = 0,
    QD_ERR_INVALID_ARGUMENT = 1,
    QD_ERR_DIMENSION = 2,
    QD_ERR_RANK = 3,
    QD_ERR_ORTHOGONALITY = 4,
    QD_ERR_UNSUPPORTED = 5,
    QD_ERR_UNKNOWN_NAME = 6,
    QD_ERR_NO_BRACKET = 7,
    QD_ERR_IO = 8,
    QD_ERR_INTERNAL = 9
} qd_status;

typedef enum qd_target { QD_TARGET_ZERO = 0, QD_TARGET_PLUS = 1 } qd_target;

typedef enum qd_crossover_status {
    QD_CROSSOVER_FOUND = 0,
    QD_CROSSOVER_NO_GAIN = 1,
    QD_CROSSOVER_IDENTICAL = 2
} qd_crossover_status;

typedef struct qd_catalog qd_catalog;
typedef struct qd_css_code qd_css_code;
typedef struct qd_classical_code qd_classical_code;
typedef struct qd_sweep qd_sweep;

typedef struct qd_run_options {
    uint64_t trials;
    uint64_t seed;
    unsigned threads; /* 0: QDISTILL_THREADS, else all cores */
} qd_run_options;

typedef struct qd_point {
    double p;
    uint64_t trials;
    uint64_t failures;
    uint64_t denominator;
    double rate;
    double ci_low;
    double ci_high;
} qd_point;

typedef struct qd_threshold_result {
    double p_th;
    int has_low;
    double p_th_low;
    int has_high;
    double p_th_high;
} qd_threshold_result;

typedef struct qd_crossover_result {
    qd_crossover_status status;
    double p_star;
    size_t evaluations;
} qd_crossover_result;

QD_API const char* qd_version(void);
QD_API const char* qd_last_error(void);
QD_API const char* qd_status_name(qd_status status);
QD_API void qd_string_free(char* s);

/* Catalog of named codes; starts with the built-ins. */
QD_API qd_status qd_catalog_new(qd_catalog** out);
QD_API qd_status qd_catalog_load_file(qd_catalog* catalog, const char* path);
QD_API qd_status qd_catalog_load_json(qd_catalog* catalog, const char* json);
QD_API qd_status qd_catalog_describe(const qd_catalog* catalog, char** json_out);
QD_API void qd_catalog_free(qd_catalog* catalog);

/* Handles returned here stay valid after the catalog is freed. */
QD_API qd_status qd_catalog_css(const qd_catalog* catalog, const char* name, qd_css_code** out);
QD_API qd_status qd_catalog_classical(const qd_catalog* catalog, const char* name, qd_classical_code** out);

QD_API qd_status qd_css_num_qubits(const qd_css_code* code, size_t* out);
/* Encoder alone, or preparations followed by the encoder, in circuit text. */
QD_API qd_status qd_css_encoder_text(const qd_css_code* code, char** out);
QD_API qd_status qd_css_preparation_text(const qd_css_code* code, qd_target target, char** out);
QD_API void qd_css_free(qd_css_code* code);

QD_API qd_status qd_classical_params(const qd_classical_code* code, size_t* m, size_t* k, size_t* d);
QD_API void qd_classical_free(qd_classical_code* code);

/* Sweeps over the probabilities in p[0..count). */
QD_API qd_status qd_distill_sweep(const qd_css_code* css, const qd_classical_code* round1,
                                  const qd_classical_code* round2, qd_target target, const double* p, size_t count,
                                  const qd_run_options* opts, qd_sweep** out);
QD_API qd_status qd_reference_sweep(const qd_css_code* css, qd_target target, const double* p, size_t count,
                                    const qd_run_options* opts, qd_sweep** out);
/* save may be NULL (no ancilla saving). With effective != 0 each point is
 * evaluated at r p / m but reported at p. */
QD_API qd_status qd_fidelity_sweep(const qd_css_code* css, const qd_classical_code* save, int effective,
                                   const double* p, size_t count, const qd_run_options* opts, qd_sweep** out);
QD_API qd_status qd_exact_fidelity_sweep(const qd_css_code* css, const double* p, size_t count, qd_sweep** out);

QD_API qd_status qd_sweep_size(const qd_sweep* sweep, size_t* out);
QD_API qd_status qd_sweep_point(const qd_sweep* sweep, size_t index, qd_point* out);
QD_API qd_status qd_sweep_csv(const qd_sweep* sweep, char** out);
QD_API qd_status qd_sweep_metadata_json(const qd_sweep* sweep, char** out);
QD_API void qd_sweep_free(qd_sweep* sweep);

QD_API qd_status qd_threshold(const qd_sweep* distilled, const qd_sweep* reference, qd_threshold_result* out);
QD_API qd_status qd_slope(const qd_sweep* sweep, double p_lo, double p_hi, double* out);
QD_API qd_status qd_crossover(const qd_css_code* css, const qd_classical_code* code, double p_lo, double p_hi,
                              size_t points, double rel_tol, const qd_run_options* opts, qd_crossover_result* out);

QD_API qd_status qd_trace_example1(char** out);

#ifdef __cplusplus
}
#endif

#endif
