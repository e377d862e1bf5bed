#ifndef ABCALC_ABCALC_H
#define ABCALC_ABCALC_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ABCALC_BUILDING)
#define ABC_API __declspec(dllexport)
#else
#define ABC_API __declspec(dllimport)
#endif
#else
#define ABC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. ABC_OK is 0; every failing call also sets the thread-local
   message returned by abc_last_error(). */
typedef enum abc_status {
    ABC_OK = 0,
    ABC_ERR_POLE_AT_NON_POSITIVE_INTEGER = 1,
    ABC_ERR_NOT_CONVERGED = 2,
    ABC_ERR_DOMAIN_NOT_SUPPORTED = 3,
    ABC_ERR_DOMAIN = 4,
    ABC_ERR_PARSE = 5,
    ABC_ERR_EVAL_DOMAIN = 6,
    ABC_ERR_TOLERANCE_NOT_REACHED = 7,
    ABC_ERR_EPSILON_UNSTABLE = 8,
    ABC_ERR_ORDER_IS_NEGATIVE_INTEGER = 9,
    ABC_ERR_ORDER_IS_NATURAL_NUMBER = 10,
    ABC_ERR_MULTIPLIER_ZERO = 11,
    ABC_ERR_ZERO_RATE = 12,
    ABC_ERR_INVALID_ARGUMENT = 13,
    ABC_ERR_INTERNAL = 14
} abc_status;

typedef struct abc_complex {
    double re;
    double im;
} abc_complex;

typedef enum abc_operator {
    ABC_OP_RL_INTEGRAL = 0,
    ABC_OP_RL_DERIVATIVE = 1,
    ABC_OP_AB_INTEGRAL = 2,
    ABC_OP_ABR = 3,
    ABC_OP_ABC = 4,
    ABC_OP_IAB = 5
} abc_operator;

/* KERNEL is the real-kernel form (for the RL derivative: the boundary
   expansion). INTEGRAL applies to the iterated operator only. */
typedef enum abc_formulation {
    ABC_FORM_AUTO = 0,
    ABC_FORM_KERNEL = 1,
    ABC_FORM_SERIES = 2,
    ABC_FORM_HANKEL = 3,
    ABC_FORM_INTEGRAL = 4
} abc_formulation;

typedef enum abc_multiplier {
    ABC_B_ONE = 0,    /* B(nu) = 1 */
    ABC_B_ABNORM = 1  /* B(nu) = 1 - nu + nu / Gamma(nu) */
} abc_multiplier;

typedef enum abc_report_format { ABC_REPORT_JSON = 0, ABC_REPORT_TABLE = 1 } abc_report_format;

/* Opaque immutable analytic function of z. */
typedef struct abc_function abc_function;

typedef struct abc_request {
    abc_operator op;
    abc_formulation formulation;
    abc_multiplier multiplier;
    abc_complex c;
    abc_complex z;
    abc_complex nu;
    abc_complex mu;         /* iterated operator only */
    int c_at_minus_infinity; /* nonzero: basepoint -inf, f must be k*exp(a*z) with Re a > 0 */
    double tol;
    double epsilon;
    int max_terms; /* 0 keeps the library default */
} abc_request;

typedef struct abc_result {
    abc_complex value;
    double abs_err_estimate;
    int terms_used;
    long nodes_used;
    double eps_sensitivity;
    char formulation[16];
} abc_result;

ABC_API const char* abc_version(void);
ABC_API const char* abc_status_name(abc_status status);
/* Message of the last failure on this thread; never NULL. */
ABC_API const char* abc_last_error(void);
ABC_API void abc_string_free(char* s);

/* On ABC_ERR_PARSE, *error_position (if non-NULL) receives the 1-based column. */
ABC_API abc_status abc_function_parse(const char* text, abc_function** out, size_t* error_position);
ABC_API void abc_function_free(abc_function* f);
ABC_API abc_status abc_function_eval(const abc_function* f, abc_complex z, abc_complex* out);
ABC_API abc_status abc_function_derivative(const abc_function* f, abc_function** out);
/* Canonical text, re-parseable. Free with abc_string_free. */
ABC_API abc_status abc_function_to_string(const abc_function* f, char** out);

/* Defaults: ABR, AUTO, B = 1, c = 0, z = 1, nu = 0.5, mu = 0, tol 1e-8, epsilon 0.1. */
ABC_API void abc_request_init(abc_request* req);
ABC_API abc_status abc_evaluate(const abc_function* f, const abc_request* req, abc_result* out);

/* suite: golden, identity, continuation or all. tol > 0 overrides the nominal
   tolerances. *report is freed with abc_string_free. */
ABC_API abc_status abc_verify_run(const char* suite, double tol, abc_report_format format, char** report,
                                  int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
