/*
 * C interface to the intervallabel library.
 *
 * Objects are opaque handles created by il_*_parse / il_*_generate / il_label
 * and released with the matching il_*_free. Every fallible call returns an
 * il_status; on failure il_last_error() describes the problem for the calling
 * thread. Strings returned through char** out-parameters are heap allocated
 * and must be released with il_string_free.
 *
 * All functions are safe to call concurrently on distinct handles. Handles
 * are immutable after creation, so concurrent read-only use is also safe.
 */
#ifndef INTERVALLABEL_H
#define INTERVALLABEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IL_API __declspec(dllexport)
#else
#define IL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum il_status {
  IL_OK = 0,
  IL_ERR_INVALID_ARGUMENT = 1,
  IL_ERR_PARSE = 2,
  IL_ERR_TOO_LARGE = 3,
  IL_ERR_NOT_APPLICABLE = 4,
  IL_ERR_IO = 5,
  IL_ERR_NULL_POINTER = 6,
  IL_ERR_INTERNAL = 7
} il_status;

typedef struct il_instance il_instance;
typedef struct il_labeling il_labeling;

typedef struct il_gen_params {
  /* Endpoint range; range_hi < range_lo selects [0, 4n]. */
  int64_t range_lo;
  int64_t range_hi;
  /* Class count for interval_k. */
  int k;
  /* Circle length for circular_arc; 0 selects 4n. */
  int64_t circumference;
  /* Upper bound on interval/arc length; 0 draws both endpoints uniformly. */
  int64_t max_length;
} il_gen_params;

IL_API const char* il_version(void);
IL_API const char* il_status_name(il_status status);
/* Message for the most recent failure on this thread ("" if none). */
IL_API const char* il_last_error(void);
IL_API void il_string_free(char* s);

IL_API void il_gen_params_default(il_gen_params* params);

/* Instances (interval-type representations). */
IL_API il_status il_instance_parse(const char* json, il_instance** out);
IL_API il_status il_instance_generate(const char* class_name, int n, uint64_t seed,
                                      const il_gen_params* params, il_instance** out);
IL_API il_status il_instance_serialize(const il_instance* inst, char** out_json);
/* Returns a static string such as "interval" or "circular_arc". */
IL_API il_status il_instance_class(const il_instance* inst, const char** out_name);
IL_API il_status il_instance_vertex_count(const il_instance* inst, int* out);
/* Graph statistics as JSON; omega is computed when n <= omega_cap. */
IL_API il_status il_instance_stats(const il_instance* inst, int omega_cap, char** out_json);
IL_API void il_instance_free(il_instance* inst);

/* Runs the class-appropriate labeler. */
IL_API il_status il_label(const il_instance* inst, int p, int q, il_labeling** out);
IL_API il_status il_labeling_parse(const char* json, il_labeling** out);
IL_API il_status il_labeling_serialize(const il_labeling* lab, char** out_json);
IL_API il_status il_labeling_span(const il_labeling* lab, int64_t* out);
IL_API void il_labeling_free(il_labeling* lab);

/* variant is "L1", "L2" or "L3". out_json (nullable) receives the violation
 * list. The (p, q) recorded in the labeling are used. */
IL_API il_status il_validate(const il_instance* inst, const il_labeling* lab, const char* variant,
                             size_t* out_count, char** out_json);

/* Bound report as JSON. out_hard_failure (nullable) is set to 1 when the
 * report is a violation that is not report-only. */
IL_API il_status il_bound_report(const il_instance* inst, const il_labeling* lab, int omega_cap,
                                 char** out_json, int* out_hard_failure);

/* Exact oracles. IL_ERR_TOO_LARGE when n exceeds n_cap. */
IL_API il_status il_exact_lambda(const il_instance* inst, int p, int q, int n_cap, int64_t* out);
IL_API il_status il_chi_square_exact(const il_instance* inst, int n_cap, int64_t* out);

/* Structural claim check for one instance. claim is one of
 * "interval-lemma", "perm-nesting", "cointerval-min", "cointerval-equiv".
 * IL_ERR_NOT_APPLICABLE when the claim does not fit the instance class. */
IL_API il_status il_check_claim(const il_instance* inst, const char* claim, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* INTERVALLABEL_H */
