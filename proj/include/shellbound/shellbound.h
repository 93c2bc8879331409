#ifndef SHELLBOUND_H
#define SHELLBOUND_H

#include <stdint.h>

#if defined(_WIN32)
#define SB_API __declspec(dllexport)
#else
#define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns sb_status; outputs are written only on SB_OK.
 * sb_last_error() returns a thread-local message for the most recent failure. */
typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_INVALID_ARGUMENT = 1,
  SB_ERR_DIVISION_BY_SINGULAR_SERIES = 2,
  SB_ERR_INNER_NOT_VANISHING = 3,
  SB_ERR_NOT_NORMALIZED = 4,
  SB_ERR_OVERFLOW_GUARD = 5,
  SB_ERR_POLE_PROXIMITY = 6,
  SB_ERR_NOT_SCHWARZ = 7,
  SB_ERR_DEGENERATE_DENOMINATOR = 8,
  SB_ERR_BRANCH_UNDEFINED = 9,
  SB_ERR_INVARIANT_VIOLATION = 10,
  SB_ERR_NULL_POINTER = 11,
  SB_ERR_UNKNOWN = 12
} sb_status;

SB_API const char* sb_status_name(sb_status status);
SB_API const char* sb_last_error(void);
SB_API const char* sb_version(void);

typedef struct sb_complex {
  double re;
  double im;
} sb_complex;

/* -------- truncated power series -------- */

typedef struct sb_series sb_series;

SB_API sb_status sb_series_create(int order, sb_series** out);
SB_API void sb_series_destroy(sb_series* s);
SB_API int sb_series_order(const sb_series* s); /* -1 on null */
SB_API sb_status sb_series_set(sb_series* s, int k, sb_complex value);
SB_API sb_status sb_series_get(const sb_series* s, int k, sb_complex* out);

SB_API sb_status sb_series_add(const sb_series* a, const sb_series* b, sb_series** out);
SB_API sb_status sb_series_sub(const sb_series* a, const sb_series* b, sb_series** out);
SB_API sb_status sb_series_mul(const sb_series* a, const sb_series* b, sb_series** out);
SB_API sb_status sb_series_div(const sb_series* a, const sb_series* b, sb_series** out);
SB_API sb_status sb_series_compose(const sb_series* outer, const sb_series* inner,
                                   sb_series** out);
SB_API sb_status sb_series_revert(const sb_series* s, sb_series** out);
SB_API sb_status sb_series_differentiate(const sb_series* s, sb_series** out);
SB_API sb_status sb_series_pow(const sb_series* s, double exponent, sb_series** out);
SB_API sb_status sb_series_evaluate(const sb_series* s, sb_complex z, sb_complex* out);

/* -------- generator and its curve -------- */

SB_API double sb_tau(void);
SB_API double sb_beta(void);        /* vertical asymptote abscissa sqrt(5)/10 */
SB_API double sb_loop_radius(void); /* (3 - sqrt(5))/2, onset of the image loop */

SB_API sb_status sb_fibonacci(int n, uint64_t* out);
SB_API sb_status sb_tau_power_decompose(int n, uint64_t* u_n, uint64_t* u_n_minus_1);

SB_API sb_status sb_ptilde_series(int order, sb_series** out);
SB_API sb_status sb_ptilde_eval(sb_complex z, sb_complex* out);

typedef struct sb_curve_point {
  double t;
  double r;
  double re;
  double im;
  double residual;  /* trisectrix residual; meaningful only when has_residual */
  int has_residual; /* nonzero on the boundary circle r = 1 */
} sb_curve_point;

SB_API sb_status sb_curve_point_at(double r, double t, sb_curve_point* out);

/* Samples the image of |z| = r. buffer must hold `count` entries; on the
 * boundary circle fewer points are written because the arc at the pole is
 * excluded. */
SB_API sb_status sb_curve_sample(double r, int count, sb_curve_point* buffer,
                                 int* n_written);

SB_API sb_status sb_curve_has_loop(double r, int segments, int* out);
SB_API sb_status sb_min_real_part(double r, int grid, double* out);

/* -------- Caratheodory pairs -------- */

typedef enum sb_family {
  SB_FAMILY_ROTATION = 0,
  SB_FAMILY_QUADRATIC_BLASCHKE = 1,
  SB_FAMILY_BODY_DIRECT = 2
} sb_family;

typedef struct sb_pair sb_pair;

SB_API sb_status sb_pair_sample(uint64_t seed, int order, sb_family family, sb_pair** out);
SB_API sb_status sb_pair_rotation(sb_complex eta, int order, sb_pair** out);
SB_API sb_status sb_pair_blaschke(sb_complex a, int order, sb_pair** out);
SB_API sb_status sb_pair_body(double c1, sb_complex c2, sb_complex d2, int order,
                              sb_pair** out);
SB_API void sb_pair_destroy(sb_pair* p);
SB_API int sb_pair_order(const sb_pair* p); /* -1 on null */
SB_API sb_status sb_pair_c(const sb_pair* p, int k, sb_complex* out); /* 1-based */
SB_API sb_status sb_pair_d(const sb_pair* p, int k, sb_complex* out);
SB_API int sb_pair_realizable(const sb_pair* p);

SB_API sb_status sb_schwarz_to_caratheodory(const sb_series* w, sb_series** out);
SB_API int sb_body_check(sb_complex c1, sb_complex c2);

/* -------- function classes -------- */

typedef enum sb_class_tag {
  SB_CLASS_WSL = 0,
  SB_CLASS_RSL = 1,
  SB_CLASS_SLB = 2,
  SB_CLASS_PSL = 3
} sb_class_tag;

typedef struct sb_class_spec {
  sb_class_tag tag;
  double gamma;
  double lambda;
  double alpha;
  double mu;
} sb_class_spec;

SB_API sb_status sb_class_spec_validate(const sb_class_spec* spec);
SB_API sb_status sb_class_operator(const sb_class_spec* spec, const sb_series* f,
                                   sb_series** out);

typedef struct sb_synthesis {
  sb_complex a2sq;
  sb_complex a2;
  sb_complex a3;
  sb_complex fs; /* a3 - mu a2^2 */
} sb_synthesis;

SB_API sb_status sb_synthesize(const sb_class_spec* spec, const sb_pair* pair,
                               sb_synthesis* out);
SB_API double sb_fs_functional(sb_complex a2, sb_complex a3, double mu);

/* -------- coefficient bounds -------- */

typedef enum sb_fs_branch { SB_FS_INNER = 0, SB_FS_OUTER = 1 } sb_fs_branch;

typedef struct sb_bound_report {
  double a2_bound;
  double a3_bound;
  double fs_bound;
  double h_mu;
  double threshold;
  sb_fs_branch branch;
  double denominator;
  double M;
} sb_bound_report;

SB_API sb_status sb_bounds(const sb_class_spec* spec, sb_bound_report* out);

typedef enum sb_special_case {
  SB_SPECIAL_FSL = 0,
  SB_SPECIAL_BSL = 1,
  SB_SPECIAL_HSL = 2,
  SB_SPECIAL_SL = 3,
  SB_SPECIAL_KSL = 4
} sb_special_case;

SB_API sb_status sb_special_case_bounds(sb_special_case sc, double gamma, double lambda,
                                        double alpha, double mu, sb_bound_report* out);
SB_API sb_status sb_reduction_check(const sb_class_spec* a, const sb_class_spec* b,
                                    double* out);

/* -------- samplers and oracles -------- */

typedef struct sb_probe_report {
  uint64_t samples;
  double max_a2;
  double max_a3;
  double max_fs;
  double ratio_a2;
  double ratio_a3;
  double ratio_fs;
  sb_complex argmax_c1;
  sb_complex argmax_c2;
  sb_complex argmax_d2;
} sb_probe_report;

typedef void (*sb_sample_visitor)(void* ctx, uint64_t index, double a2_abs, double a3_abs,
                                  double fs_abs);

SB_API sb_status sb_probe(const sb_class_spec* spec, uint64_t samples, uint64_t seed,
                          sb_family family, sb_sample_visitor visitor, void* ctx,
                          sb_probe_report* out);
SB_API sb_status sb_grid_oracle(const sb_class_spec* spec, int steps, sb_probe_report* out);

typedef struct sb_fekete_row {
  double mu;
  double h_mu;
  sb_fs_branch branch;
  double fs_bound;
  double achieved;
} sb_fekete_row;

typedef void (*sb_fekete_visitor)(void* ctx, const sb_fekete_row* row);

SB_API sb_status sb_fekete_sweep(const sb_class_spec* spec, double mu_min, double mu_max,
                                 double mu_step, uint64_t samples, uint64_t seed,
                                 sb_fekete_visitor visitor, void* ctx);

/* -------- self-verification -------- */

typedef void (*sb_check_visitor)(void* ctx, const char* name, int passed,
                                 const char* detail);

SB_API sb_status sb_verify(uint64_t seed, int deep, sb_check_visitor visitor, void* ctx,
                           int* n_failed);

#ifdef __cplusplus
}
#endif

#endif /* SHELLBOUND_H */
