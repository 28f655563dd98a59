/* C interface to the extended Whittaker function library. */
#ifndef WEXT_WEXT_H
#define WEXT_WEXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(WEXT_BUILDING_LIBRARY)
#define WEXT_API __attribute__((visibility("default")))
#else
#define WEXT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wext_status {
  WEXT_OK = 0,
  WEXT_DOMAIN = 1,            /* argument outside the function's domain */
  WEXT_POLE = 2,
  WEXT_PARAMETER = 3,         /* excluded parameter value */
  WEXT_OVERFLOW = 4,
  WEXT_NONFINITE = 5,
  WEXT_UNKNOWN_FUNCTION = 6,
  WEXT_UNKNOWN_SUITE = 7,
  WEXT_SAMPLER_STARVATION = 8,
  WEXT_INVALID_ARGUMENT = 9,  /* null pointer, missing or unexpected parameter */
  WEXT_INTERNAL = 10
} wext_status;

typedef struct wext_result {
  double value;
  double abs_error_estimate;
  int64_t work;
  int converged;
  unsigned flags; /* bit 0: cancellation in the series */
} wext_result;

typedef struct wext_context wext_context;
typedef struct wext_report wext_report;

WEXT_API const char* wext_version(void);
WEXT_API const char* wext_status_string(wext_status status);

WEXT_API wext_context* wext_context_create(void);
WEXT_API void wext_context_destroy(wext_context* ctx);
/* rel_tol > 0, max_level >= 3. */
WEXT_API wext_status wext_context_set_quadrature(wext_context* ctx, double rel_tol, int max_level);
/* Message for the last failed call on ctx; empty after a success. */
WEXT_API const char* wext_context_last_error(const wext_context* ctx);

/*
 * Evaluates a function by id with named parameters:
 *   beta a b          beta_p a b p        beta_pq a b p q    beta_v a b p v
 *   phi b c z         2f1 a b c z         phi_p b c p z      phi_pq b c p q z
 *   phi_pv b c p v z [path]               f_p a b c p z      f_pq a b c p q z
 *   f_pv a b c p v z [path]               m lambda rho z     m_p p lambda rho z
 *   m_pq p q lambda rho z                 m_pv p v lambda rho z [rep ua ub]
 *   bessel_k v z      (order v, argument z)
 * path: 0 series (default), 1 integral. rep: 0 series (default) or 1..5;
 * ua, ub give the interval for rep 3 (default 0, 1).
 */
WEXT_API wext_status wext_eval(wext_context* ctx, const char* function_id, const char* const* names,
                               const double* values, size_t count, wext_result* out);

/* Convenience form of wext_eval("m_pv", ...) on the series path. */
WEXT_API wext_status wext_m_pv(wext_context* ctx, double p, double v, double lambda, double rho,
                               double z, wext_result* out);

typedef struct wext_mellin_result {
  wext_result numeric;
  wext_result corrected;
  wext_result literal;
  wext_result v0;  /* the v = 0 closed form; valid when has_v0 */
  int has_v0;
} wext_mellin_result;

/* Mellin transform in p of M_{p,v,lambda,rho}(z). */
WEXT_API wext_status wext_mellin(wext_context* ctx, double v, double lambda, double rho, double r,
                                 double z, wext_mellin_result* out);

typedef struct wext_laplace_result {
  wext_result numeric;
  wext_result closed_form;
  wext_result closed_form_2f1; /* valid when has_2f1 (p = v = 0) */
  int has_2f1;
} wext_laplace_result;

WEXT_API wext_status wext_laplace(wext_context* ctx, double p, double v, double lambda, double rho,
                                  double delta, double alpha, double mu, wext_laplace_result* out);

WEXT_API size_t wext_suite_count(void);
WEXT_API const char* wext_suite_name(size_t index);

/* Runs one suite, or the whole catalogue for "all". n_samples <= 0 uses the
 * suite defaults. On success *out owns the report; free it with
 * wext_report_destroy. */
WEXT_API wext_status wext_verify(wext_context* ctx, const char* suite, int n_samples, uint64_t seed,
                                 int paper_literal, int timing, wext_report** out);
WEXT_API const char* wext_report_json(const wext_report* report);
WEXT_API const char* wext_report_csv(const wext_report* report);
WEXT_API int wext_report_passed(const wext_report* report);
WEXT_API size_t wext_report_suite_count(const wext_report* report);
WEXT_API void wext_report_destroy(wext_report* report);

#ifdef __cplusplus
}
#endif

#endif
