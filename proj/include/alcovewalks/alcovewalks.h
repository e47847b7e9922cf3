#ifndef ALCOVEWALKS_H
#define ALCOVEWALKS_H

/*
 * C interface to the alcove-walk multiplicity library.
 *
 * All functions return aw_status; AW_OK is 0. On failure, aw_last_error()
 * returns a thread-local message describing what went wrong. Root data are
 * held behind the opaque aw_datum handle; every vector argument is an array
 * of `rank` long longs. Strings returned through char** are heap-allocated
 * and must be released with aw_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aw_datum aw_datum;

typedef enum aw_status {
  AW_OK = 0,
  AW_ERR_INVALID = 1,  /* bad arguments, parse errors, violated preconditions */
  AW_ERR_INTERNAL = 2, /* a library invariant failed; report as a bug */
  AW_ERR_RANGE = 3     /* a documented desk-scale cap was exceeded */
} aw_status;

const char* aw_last_error(void);
void aw_string_free(char* s);

/* -- root data ----------------------------------------------------------- */

/* name: one of A1, A2, A3, B2, B2sc, C2, G2, GL2, GL3, GL4 */
aw_status aw_datum_new_preset(const char* name, aw_datum** out);

/* config: flat key/value text, either `name = <preset>` or rank/simple_roots/
 * simple_coroots with `;`-separated comma vectors */
aw_status aw_datum_new_config(const char* config_text, aw_datum** out);

/* roots/coroots: num_simple * rank entries, row by row */
aw_status aw_datum_new(int rank, int num_simple, const long long* simple_roots,
                       const long long* simple_coroots, aw_datum** out);

void aw_datum_free(aw_datum* d);

int aw_datum_rank(const aw_datum* d);
int aw_datum_num_simple(const aw_datum* d);
long long aw_datum_num_positive_roots(const aw_datum* d);
long long aw_datum_weyl_order(const aw_datum* d);

/* -- multiplicities (statements about the Langlands dual group) ---------- */

aw_status aw_weight_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                 long long* out);

/* levi: 1-based simple root indices, levi_len of them (0 for the torus) */
aw_status aw_branching_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                    const int* levi, int levi_len, long long* out);

aw_status aw_tensor_multiplicity(const aw_datum* d, const long long* mu, const long long* lambda,
                                 const long long* nu, long long* out);

/* -- JSON reports --------------------------------------------------------- */

aw_status aw_report_weight(const aw_datum* d, const long long* mu, const long long* lambda,
                           char** json_out);
aw_status aw_report_branch(const aw_datum* d, const long long* mu, const long long* lambda,
                           const int* levi, int levi_len, char** json_out);
aw_status aw_report_tensor(const aw_datum* d, const long long* mu, const long long* lambda,
                           const long long* nu, char** json_out);

/* Unfiltered family with cell shapes; nu may be NULL (branching paving)
 * or non-NULL (convolution paving; levi is ignored then). */
aw_status aw_report_paving(const aw_datum* d, const long long* mu, const long long* lambda,
                           const long long* nu, const int* levi, int levi_len, char** json_out);

/* Enumerate positively folded walks of one type.
 *   type_of:    walks take the type of the right-minimal element of t_{-v} W0
 *   word:       optional explicit reduced word like "s1,s0,s2" (NULL: derived)
 *   levi:       orientation (NULL/0: torus orientation, all sides positive)
 *   end_vertex: optional endpoint vertex constraint
 *   max_dim_only: keep only walks of maximal dimension among those found
 */
aw_status aw_walks_enumerate(const aw_datum* d, const long long* type_of, const char* word,
                             const int* levi, int levi_len, const long long* end_vertex,
                             int max_dim_only, char** json_out);

/* Rank-2 picture of the maximal weight walks; lambda may be NULL. */
aw_status aw_render_walks_svg(const aw_datum* d, const long long* mu, const long long* lambda,
                              char** svg_out);

/* Run the internal invariant suites up to the given length. *ok_out is 1 if
 * every check passed. A failed check returns AW_OK with *ok_out = 0; the
 * report always describes each check. */
aw_status aw_verify(const aw_datum* d, int max_len, char** report_out, int* ok_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ALCOVEWALKS_H */
