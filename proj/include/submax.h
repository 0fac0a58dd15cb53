/* C interface to the submax solver library.
 *
 * All functions returning submax_status set the thread-local error message
 * readable through submax_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * submax_string_free().
 */
#ifndef SUBMAX_H
#define SUBMAX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SUBMAX_OK = 0,
  SUBMAX_ERR_PARSE = 1,           /* malformed JSON or instance shape */
  SUBMAX_ERR_INVALID_ARGUMENT = 2,
  SUBMAX_ERR_RESOURCE_LIMIT = 3,  /* n too large for an exhaustive step */
  SUBMAX_ERR_MISMATCH = 4,        /* algorithm incompatible with constraint */
  SUBMAX_ERR_INTERNAL = 5         /* broken invariant inside the library */
} submax_status;

/* Opaque parsed instance. */
typedef struct submax_instance submax_instance;

const char* submax_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* submax_last_error(void);

/* Parse the instance JSON format:
 *   {"n": int, "function": {"kind": "cut"|"table"|"tight", ...},
 *    "constraint": {"kind": "uniform"|"partition"|"knapsack"|"packing", ...}}
 */
submax_status submax_instance_from_json(const char* json, submax_instance** out);
void submax_instance_free(submax_instance* instance);

/* Build an instance from generator parameters, e.g.
 *   {"kind":"cut","n":10,"seed":7,"edge_prob":0.5,
 *    "weight_min":0,"weight_max":1,"constraint":{"kind":"uniform","k":3}}
 * Kinds: "cut", "table", "tight". Output is instance JSON.
 */
submax_status submax_generate(const char* params_json, char** out_json);

/* Run one algorithm. Options JSON:
 *   {"algo": "random-greedy"|"derand-greedy"|"twin"|"threshold-twin"|
 *            "enum-twin"|"enum-threshold-twin"|
 *            "multiplicative-updates"|"packing-main",
 *    "epsilon": real, "tie_break": "lowest-id"|"alternate-solutions"|
 *    "highest-id", "seed": int, "usm": "double-greedy"|"exhaustive",
 *    "timing": bool, "instance": "label echoed into the record"}
 * Output is a run record: value, solution, queries, feasible, parameters.
 */
submax_status submax_solve(const submax_instance* instance,
                           const char* options_json, char** out_json);

/* Exhaustive constrained optimum (n <= 20):
 * {"opt_value": real, "opt_set": [ids], "enumerated": count}
 */
submax_status submax_exact(const submax_instance* instance, char** out_json);

/* Run an algorithm and compare against the exact optimum under the
 * guarantee appropriate to the algorithm. Output adds
 * {"verdict":"pass"|"fail"|"precondition-unmet", "bound": real, ...}.
 */
submax_status submax_verify(const submax_instance* instance,
                            const char* options_json, char** out_json);

void submax_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SUBMAX_H */
