/* sklift C interface. Every call returns a status; results come back as
 * records (the JSON interchange text) owned by the caller. On failure the
 * output record, when requested, holds an error record. */
#ifndef SKLIFT_H
#define SKLIFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SKLIFT_BUILDING_LIBRARY)
#define SKLIFT_API __attribute__((visibility("default")))
#else
#define SKLIFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum sklift_status {
  SKLIFT_OK = 0,
  SKLIFT_CHECK_FAILED = 1,
  SKLIFT_DOMAIN_ERROR = 2, /* also bad arguments */
  SKLIFT_PRECISION_ERROR = 3,
  SKLIFT_INTERNAL_ERROR = 4
} sklift_status;

typedef struct sklift_context sklift_context;
typedef struct sklift_record sklift_record;

SKLIFT_API const char* sklift_version(void);

/* cache_dir NULL: $SKLIFT_CACHE_DIR, else ./.sklift-cache */
SKLIFT_API sklift_context* sklift_context_new(const char* cache_dir);
SKLIFT_API void sklift_context_free(sklift_context* ctx);
/* Message of the last failed call on ctx; "" if none. Valid until the next call. */
SKLIFT_API const char* sklift_context_last_error(const sklift_context* ctx);

/* Records */
SKLIFT_API const char* sklift_record_text(const sklift_record* rec);
SKLIFT_API const char* sklift_record_kind(const sklift_record* rec);
/* 1/0 for reports and checks, -1 when the record carries no verdict. */
SKLIFT_API int sklift_record_passed(const sklift_record* rec);
SKLIFT_API sklift_status sklift_record_parse(sklift_context* ctx, const char* text, sklift_record** out);
SKLIFT_API void sklift_record_free(sklift_record* rec);

/* Level 1. prec 0 picks a sufficient default. */
SKLIFT_API sklift_status sklift_basis(sklift_context* ctx, int weight, size_t prec, sklift_record** out);
/* Matrix of T(ell) in the Miller basis plus its charpoly; cached on disk. */
SKLIFT_API sklift_status sklift_hecke(sklift_context* ctx, int weight, unsigned long ell, size_t prec,
                                      sklift_record** out);
SKLIFT_API sklift_status sklift_newform(sklift_context* ctx, int weight, sklift_record** out);

/* Index-1 Jacobi cusp forms of weight k and their plus-space images. */
SKLIFT_API sklift_status sklift_jacobi(sklift_context* ctx, int k, size_t dmax, sklift_record** out);
SKLIFT_API sklift_status sklift_kohnen(sklift_context* ctx, int k, size_t prec, sklift_record** out);

/* Lifts of Jacobi basis element `index` (0-based). */
SKLIFT_API sklift_status sklift_shimura(sklift_context* ctx, int k, long disc, size_t prec, size_t index,
                                        sklift_record** out);
SKLIFT_API sklift_status sklift_sk_lift(sklift_context* ctx, int k, size_t bound, size_t index,
                                        sklift_record** out);
/* Eigenvalue of T(ell) on the lift of the Jacobi basis element. */
SKLIFT_API sklift_status sklift_siegel_hecke(sklift_context* ctx, int k, unsigned long ell, size_t bound,
                                             size_t index, sklift_record** out);

/* B_n mod p, or with scan != 0 the irregular indices of p (n ignored). */
SKLIFT_API sklift_status sklift_bernoulli(sklift_context* ctx, uint64_t p, uint64_t n, int scan,
                                          sklift_record** out);
/* L_alg(j, f_w, chi_D); twist 1 is the trivial character. p 0 skips valuations. */
SKLIFT_API sklift_status sklift_l_alg(sklift_context* ctx, int weight, int j, long twist, uint64_t p,
                                      sklift_record** out);

SKLIFT_API sklift_status sklift_check_hypotheses(sklift_context* ctx, int weight, uint64_t p, long chi_disc,
                                                 long disc, sklift_record** out);
/* The p = 516223, weight 54 reproduction. SKLIFT_CHECK_FAILED if any check fails. */
SKLIFT_API sklift_status sklift_verify_paper_example(sklift_context* ctx, sklift_record** out);

#ifdef __cplusplus
}
#endif

#endif
