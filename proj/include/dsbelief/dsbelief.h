/******************************************************************************
 * Copyright 2026 The dsbelief Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/
/*
 * C interface to the dsbelief library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a dsb_status; on
 * failure the output handles are left untouched and dsb_last_error()
 * describes the problem for the calling thread. Strings returned through
 * char** outputs are allocated by the library and released with
 * dsb_string_free().
 */
#ifndef DSBELIEF_DSBELIEF_H_
#define DSBELIEF_DSBELIEF_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DSBELIEF_BUILDING)
#    define DSB_API __declspec(dllexport)
#  else
#    define DSB_API __declspec(dllimport)
#  endif
#else
#  define DSB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsb_status {
  DSB_OK = 0,
  DSB_E_INVALID_ARGUMENT = 1,
  DSB_E_PARSE = 2,
  DSB_E_UNKNOWN_ATOM = 3,
  DSB_E_FRAME_MISMATCH = 4,
  DSB_E_SIZE_OVERFLOW = 5,
  DSB_E_TOTAL_CONFLICT = 6,
  DSB_E_INVALID_LABELING = 7,
  DSB_E_ALL_DISCARDED = 8,
  DSB_E_NOT_BELIEF = 9,
  DSB_E_UNKNOWN_CASE = 10,
  DSB_E_IO = 11,
  DSB_E_INTERNAL = 12
} dsb_status;

typedef struct dsb_frame dsb_frame;
typedef struct dsb_mass dsb_mass;
typedef struct dsb_population dsb_population;

/* Library */
DSB_API const char* dsb_version(void);
DSB_API const char* dsb_last_error(void);
DSB_API const char* dsb_status_name(dsb_status status);
/* Nonzero for conflicts, invalid labelings and fully discarded simulations. */
DSB_API int dsb_status_is_domain_error(dsb_status status);
DSB_API void dsb_string_free(char* s);
DSB_API dsb_status dsb_set_max_frame_size(size_t n);
DSB_API size_t dsb_max_frame_size(void);

/* Frames */
DSB_API dsb_status dsb_frame_create(const char* const* names, size_t count,
                                    dsb_frame** out);
DSB_API dsb_status dsb_frame_product(const dsb_frame* a, const dsb_frame* b,
                                     dsb_frame** out);
DSB_API size_t dsb_frame_size(const dsb_frame* frame);
/* Borrowed pointer, valid while the frame lives. NULL when out of range. */
DSB_API const char* dsb_frame_atom(const dsb_frame* frame, size_t index);
DSB_API void dsb_frame_free(dsb_frame* frame);

/* Populations. `frame_decl` is "name=a,b;name2=c,d" or the JSON form. */
DSB_API dsb_status dsb_population_from_csv(const char* csv_text,
                                           const char* frame_decl,
                                           dsb_population** out);
DSB_API uint64_t dsb_population_total_weight(const dsb_population* p);
DSB_API dsb_status dsb_population_frame(const dsb_population* p,
                                        dsb_frame** out);
DSB_API dsb_status dsb_population_freq_mass(const dsb_population* p,
                                            dsb_mass** out);
DSB_API void dsb_population_free(dsb_population* p);

/* Masses */
DSB_API dsb_status dsb_mass_from_json(const char* json_text, dsb_mass** out);
DSB_API dsb_status dsb_mass_to_json(const dsb_mass* m, char** out);
/* Fixed-width m / Bel / Pl table; `as_json` selects the JSON rendering. */
DSB_API dsb_status dsb_mass_render_table(const dsb_mass* m, int rational,
                                         int as_json, char** out);
DSB_API int dsb_mass_is_exact(const dsb_mass* m);
DSB_API size_t dsb_mass_focal_count(const dsb_mass* m);
/* Bel / Pl of the subset named by `atoms`. `exact_out` (optional) receives
 * the value as text ("p/q" in exact mode). */
DSB_API dsb_status dsb_mass_bel(const dsb_mass* m, const char* const* atoms,
                                size_t count, double* value, char** exact_out);
DSB_API dsb_status dsb_mass_pl(const dsb_mass* m, const char* const* atoms,
                               size_t count, double* value, char** exact_out);
/* *equal = 1 when both masses have the same frame, focal sets and values. */
DSB_API dsb_status dsb_mass_equal(const dsb_mass* a, const dsb_mass* b,
                                  int* equal);
DSB_API void dsb_mass_free(dsb_mass* m);

/* Dempster's rule. `conflict_text` (optional) receives the conflict mass as
 * text. */
DSB_API dsb_status dsb_combine(const dsb_mass* a, const dsb_mass* b,
                               dsb_mass** out, double* conflict,
                               char** conflict_text);

/* Relabeling */
DSB_API dsb_status dsb_relabel_exact(const dsb_mass* population_mass,
                                     const dsb_mass* labels, dsb_mass** out);
/* `report_json` (optional) receives the simulation report. */
DSB_API dsb_status dsb_relabel_simulate(const dsb_population* p,
                                        const dsb_mass* labels,
                                        uint64_t n_draws, uint64_t seed,
                                        uint32_t chunks, dsb_mass** out,
                                        char** report_json);

/* Estimation: lower Wilson bounds at one-sided significance `alpha`. */
DSB_API dsb_status dsb_estimate(const dsb_population* p, double alpha,
                                int bonferroni, dsb_mass** out);

/* Casebook. `dir` may be NULL for the default directory. */
DSB_API dsb_status dsb_casebook_list(const char* dir, char** names_out);
DSB_API dsb_status dsb_casebook_run(const char* dir, const char* name,
                                    char** report_out, size_t* failures);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* DSBELIEF_DSBELIEF_H_ */
