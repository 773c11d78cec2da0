/* ehscn — energy-harvesting small-cell network simulator, C API.
 *
 * Opaque handles plus error codes; every entry point is safe to call from
 * plain C. Functions that can fail take an optional error buffer which
 * receives a human-readable message on failure. Handles are not shared
 * between threads without external synchronization, but independent
 * handles may be used concurrently.
 */
#ifndef EHSCN_H
#define EHSCN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define EHSCN_API __attribute__((visibility("default")))

typedef enum ehscn_status {
    EHSCN_OK = 0,
    EHSCN_ERR_CONFIG = 1,  /* bad config file, key, value, or grid */
    EHSCN_ERR_RUNTIME = 2, /* failure while running the simulation */
    EHSCN_ERR_ARG = 3      /* null handle / output pointer, bad enum */
} ehscn_status;

/* Opaque simulation-parameter set. */
typedef struct ehscn_params ehscn_params;
/* Opaque sweep result. */
typedef struct ehscn_sweep ehscn_sweep;

/* Outage probability and mean energy efficiency at one parameter point,
 * each with a 95% confidence interval. n_trials counts the valid trials
 * behind the estimates; n_failed the trials dropped on singular
 * distances. */
typedef struct ehscn_point_result {
    double outage_mean;
    double outage_ci_lo;
    double outage_ci_hi;
    double ee_mean;
    double ee_ci_lo;
    double ee_ci_hi;
    uint64_t n_trials;
    uint64_t n_failed;
} ehscn_point_result;

EHSCN_API const char* ehscn_version(void);

/* ---- parameter handles ---------------------------------------------- */

/* Fresh handle holding the built-in defaults. Free with
 * ehscn_params_free. Returns NULL only on allocation failure. */
EHSCN_API ehscn_params* ehscn_params_create(void);

/* Parses a key=value config file into a fresh handle. On failure returns
 * NULL and writes a message (with line number) into errbuf. */
EHSCN_API ehscn_params* ehscn_params_load(const char* path, char* errbuf,
                                          size_t errbuf_len);

EHSCN_API ehscn_params* ehscn_params_clone(const ehscn_params* params);

EHSCN_API void ehscn_params_free(ehscn_params* params);

/* Sets one config key ("beta", "n_trials", ...) from its string form. */
EHSCN_API ehscn_status ehscn_params_set(ehscn_params* params, const char* key,
                                        const char* value, char* errbuf,
                                        size_t errbuf_len);

/* Reads one key back in the exact format the config parser accepts. */
EHSCN_API ehscn_status ehscn_params_get(const ehscn_params* params,
                                        const char* key, char* buf,
                                        size_t buf_len);

/* Cross-field validation (ranges, single-slope exponent equality...). */
EHSCN_API ehscn_status ehscn_params_validate(const ehscn_params* params,
                                             char* errbuf, size_t errbuf_len);

/* Canonical key list, for iterating a full parameter dump. */
EHSCN_API int ehscn_params_key_count(void);
EHSCN_API const char* ehscn_params_key_name(int index);

/* ---- running --------------------------------------------------------- */

/* Monte Carlo estimate at one parameter point. n_threads >= 1; the
 * results are identical for every thread count. */
EHSCN_API ehscn_status ehscn_estimate(const ehscn_params* params,
                                      int n_threads, ehscn_point_result* out,
                                      char* errbuf, size_t errbuf_len);

typedef enum ehscn_sweep_param {
    EHSCN_SWEEP_LAMBDA_S = 0,
    EHSCN_SWEEP_BETA = 1
} ehscn_sweep_param;

/* Runs a sweep over `grid` (strictly increasing, n >= 1). For lambda
 * sweeps, couple_lambda_m != 0 keeps lambda_m = lambda_s / lambda_ratio
 * at every point; beta sweeps ignore both coupling arguments. The result
 * handle must be freed with ehscn_sweep_free. */
EHSCN_API ehscn_status ehscn_sweep_run(const ehscn_params* params,
                                       ehscn_sweep_param param,
                                       const double* grid, size_t n,
                                       int couple_lambda_m,
                                       double lambda_ratio, int n_threads,
                                       ehscn_sweep** out, char* errbuf,
                                       size_t errbuf_len);

EHSCN_API size_t ehscn_sweep_size(const ehscn_sweep* sweep);

EHSCN_API ehscn_status ehscn_sweep_point(const ehscn_sweep* sweep,
                                         size_t index, double* param_value,
                                         ehscn_point_result* out);

EHSCN_API void ehscn_sweep_free(ehscn_sweep* sweep);

typedef enum ehscn_objective {
    EHSCN_OBJ_MIN_OUTAGE = 0,
    EHSCN_OBJ_MAX_EE = 1
} ehscn_objective;

typedef struct ehscn_optimum {
    size_t index;
    double param_value;
    ehscn_point_result point;
    int ci_separated; /* winner's CI disjoint from the runner-up's */
    double runner_up_value;
} ehscn_optimum;

/* Argmin/argmax over the sweep's point estimates; ties break toward the
 * smaller parameter value. */
EHSCN_API ehscn_status ehscn_sweep_optimal(const ehscn_sweep* sweep,
                                           ehscn_objective objective,
                                           ehscn_optimum* out);

/* ---- presets --------------------------------------------------------- */

/* Copies the named grid ("lambda-dense", "beta-coarse", "beta-assoc")
 * into `out` (up to `cap` values) and returns its full length, or 0 if
 * the name is unknown. Call with out=NULL, cap=0 to query the length. */
EHSCN_API size_t ehscn_preset_grid(const char* name, double* out, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EHSCN_H */
