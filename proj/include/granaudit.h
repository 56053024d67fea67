/* granaudit - C API for the granular subgroup disparity audit toolkit.
 *
 * All functions return ga_status; GA_OK is 0 and error codes double as
 * recommended process exit codes. On failure, ga_last_error() returns a
 * thread-local description of what went wrong. Objects are exposed as opaque
 * handles that must be released with their matching _free function.
 */
#ifndef GRANAUDIT_H
#define GRANAUDIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ga_status {
    GA_OK = 0,
    GA_ERR_UNKNOWN = 1,
    GA_ERR_CONFIG = 2, /* malformed or inconsistent configuration */
    GA_ERR_DATA = 3,   /* bad input data or I/O failure */
    GA_ERR_NUMERIC = 4 /* numerical failure (non-convergence, domain error) */
} ga_status;

typedef struct ga_schema ga_schema;
typedef struct ga_taxonomy ga_taxonomy;
typedef struct ga_cohort ga_cohort;

const char* ga_version(void);

/* Message describing the most recent failure on this thread; never NULL. */
const char* ga_last_error(void);

/* --- data handles --------------------------------------------------------- */

ga_status ga_schema_load(const char* path, ga_schema** out);
void ga_schema_free(ga_schema* schema);
size_t ga_schema_feature_count(const ga_schema* schema);

ga_status ga_taxonomy_load(const char* path, ga_taxonomy** out);
void ga_taxonomy_free(ga_taxonomy* taxonomy);
size_t ga_taxonomy_coarse_count(const ga_taxonomy* taxonomy);
size_t ga_taxonomy_granular_count(const ga_taxonomy* taxonomy);

/* Loads a cohort file and applies the standard row filter (age >= 18, triage
 * severity recorded) when filter != 0. */
ga_status ga_cohort_load(const char* path, const ga_schema* schema, const ga_taxonomy* taxonomy,
                         int filter, ga_cohort** out);
void ga_cohort_free(ga_cohort* cohort);
size_t ga_cohort_rows(const ga_cohort* cohort);
size_t ga_cohort_patients(const ga_cohort* cohort);

/* --- pipeline entry points ------------------------------------------------ */

typedef struct ga_run_options {
    uint64_t seed; /* honored when has_seed != 0, else the config seed is used */
    int has_seed;
    int jobs;  /* worker threads; 0 = config value (0 there = all cores) */
    int force; /* nonzero: recompute every stage, ignoring the cache */
} ga_run_options;

/* Generates a synthetic cohort (cohort.csv + ground_truth.json) into out_dir. */
ga_status ga_synth(const char* scenario_path, const char* out_dir, const ga_run_options* options);

/* Runs the full staged audit described by the config file. */
ga_status ga_audit(const char* config_path, const ga_run_options* options);

/* Writes plot-ready data for figure_id ("performance", "outcome_freqs",
 * "variation") from a completed audit run. A NULL out_path defaults to
 * <output_dir>/figures/<figure_id>.csv. */
ga_status ga_figure(const char* config_path, const char* figure_id, const char* out_path);

/* Lints a config: checks referenced files load and invariants hold. Findings
 * (one per line) are written to `notes` (truncated to notes_len, always
 * NUL-terminated) when notes != NULL. */
ga_status ga_validate(const char* config_path, char* notes, size_t notes_len);

#ifdef __cplusplus
}
#endif

#endif /* GRANAUDIT_H */
