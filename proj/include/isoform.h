/* C API for the isoform library: isotropy-formality classification of
 * circle subgroups of compact connected Lie groups.
 *
 * All functions return an isoform_status; on failure a human-readable
 * message is available from isoform_last_error(ctx) until the next call on
 * the same context. Strings returned through out-parameters are owned by the
 * caller and must be released with isoform_string_free.
 */
#ifndef ISOFORM_H
#define ISOFORM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct isoform_ctx isoform_ctx;

typedef enum isoform_status {
    ISOFORM_OK = 0,
    ISOFORM_ERR_PARSE = 2,
    ISOFORM_ERR_INVARIANT = 3,
    ISOFORM_ERR_CAPACITY = 4,
    ISOFORM_ERR_INTERNAL = 5
} isoform_status;

/* Output/behavior flags. */
#define ISOFORM_FLAG_JSON 0x1u   /* machine-readable output */
#define ISOFORM_FLAG_VERIFY 0x2u /* enable brute-force oracle cross-checks */

isoform_ctx* isoform_ctx_new(void);
void isoform_ctx_free(isoform_ctx* ctx);

/* Configuration. Worker count must be >= 1; a budget of 0 restores the
 * default enumeration budget (everything through E7, not E8). */
isoform_status isoform_set_cache_dir(isoform_ctx* ctx, const char* path);
isoform_status isoform_set_workers(isoform_ctx* ctx, int workers);
isoform_status isoform_set_budget(isoform_ctx* ctx, uint64_t max_weyl_order);

/* Classifies the (group, circle) pair described by the input document and
 * writes the report. */
isoform_status isoform_classify(isoform_ctx* ctx, const char* input_json,
                                unsigned flags, char** out_report);

/* Poincare polynomials and Betti numbers for the pair. */
isoform_status isoform_poincare(isoform_ctx* ctx, const char* input_json,
                                unsigned flags, char** out_report);

/* Weyl group order and conjugacy-class census for one simple type. */
isoform_status isoform_weyl_info(isoform_ctx* ctx, const char* family, int rank,
                                 unsigned flags, char** out_report);

/* Full E6 structural verification. Returns ISOFORM_OK only if every
 * expected count and containment holds; ISOFORM_ERR_INTERNAL otherwise
 * (the report is still written). */
isoform_status isoform_e6_verify(isoform_ctx* ctx, unsigned flags, char** out_report);

const char* isoform_last_error(const isoform_ctx* ctx);
void isoform_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ISOFORM_H */
