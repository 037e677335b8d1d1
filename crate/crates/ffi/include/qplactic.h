#ifndef QPLACTIC_H
#define QPLACTIC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QpStatus {
  QP_STATUS_OK = 0,
  QP_STATUS_NULL_POINTER = 1,
  QP_STATUS_INVALID_UTF8 = 2,
  QP_STATUS_PARSE = 3,
  QP_STATUS_INVALID_INPUT = 4,
  QP_STATUS_RESOURCE_LIMIT = 5,
  QP_STATUS_ARITHMETIC = 6,
  QP_STATUS_THEOREM_VIOLATION = 7,
  QP_STATUS_PANIC = 8,
} QpStatus;

/**
 * An expansion in bitableaux or in quantum tableaux.
 */
typedef struct QpExpansion QpExpansion;

/**
 * An element of the quantum matrix algebra in normal form.
 */
typedef struct QpPoly QpPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *qp_last_error(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qp_string_free(char *s);

/**
 * Insertion and recording tableaux of a word, as compact labels.
 *
 * # Safety
 * `word` must be a nul-terminated string; `p_out` and `q_out` must be valid
 * for writes.
 */
enum QpStatus qp_rs(const char *word, char **p_out, char **q_out);

/**
 * The quantum determinant of size `n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum QpStatus qp_qdet(uint8_t n, struct QpPoly **out);

/**
 * The quantum minor on the given row and column words, such as "12" and "23".
 *
 * # Safety
 * Both strings must be nul-terminated; `out` must be valid for writes.
 */
enum QpStatus qp_qminor(const char *rows, const char *cols, struct QpPoly **out);

/**
 * The monomial `t[w1,u1]*...*t[wk,uk]`, brought to normal form.
 *
 * # Safety
 * Both strings must be nul-terminated; `out` must be valid for writes.
 */
enum QpStatus qp_monomial(const char *rows, const char *cols, struct QpPoly **out);

/**
 * Parse a product such as "t[2,3]*t[1,1]" and bring it to normal form.
 *
 * # Safety
 * `s` must be nul-terminated; `out` must be valid for writes.
 */
enum QpStatus qp_poly_parse(const char *s, struct QpPoly **out);

/**
 * Product `a * b` in normal form.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be valid for writes.
 */
enum QpStatus qp_poly_mul(const struct QpPoly *a, const struct QpPoly *b, struct QpPoly **out);

/**
 * Number of monomials, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t qp_poly_len(const struct QpPoly *p);

/**
 * Text form, e.g. "t[1,1]*t[2,2] + (-q^-1)*t[1,2]*t[2,1]".
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QpStatus qp_poly_to_string(const struct QpPoly *p, char **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void qp_poly_free(struct QpPoly *p);

/**
 * Expand an element of degree at most `n` in the bitableau basis.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum QpStatus qp_expand_bitableaux(const struct QpPoly *p, uint8_t n, struct QpExpansion **out);

/**
 * Straighten a tabloid such as "15|236" into quantum tableaux.
 *
 * # Safety
 * `tabloid` must be nul-terminated; `out` must be valid for writes.
 */
enum QpStatus qp_straighten_flag(const char *tabloid, uint8_t n, struct QpExpansion **out);

/**
 * Number of terms, or 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t qp_expansion_len(const struct QpExpansion *e);

/**
 * The terms as a JSON array.
 *
 * # Safety
 * `e` must be a live handle; `out` must be valid for writes.
 */
enum QpStatus qp_expansion_to_json(const struct QpExpansion *e, char **out);

/**
 * Label of the unique term surviving at `q = 0`. Writes null when every
 * coefficient vanishes there.
 *
 * # Safety
 * `e` must be a live handle; `out` must be valid for writes.
 */
enum QpStatus qp_expansion_q0_class(const struct QpExpansion *e, char **out);

/**
 * # Safety
 * `e` must be null or a handle from this library that has not been freed.
 */
void qp_expansion_free(struct QpExpansion *e);

/**
 * Graphviz text for the crystal component of highest weight `shape`
 * (comma separated parts, e.g. "2,1").
 *
 * # Safety
 * `shape` must be nul-terminated; `out` must be valid for writes.
 */
enum QpStatus qp_crystal_dot(const char *shape, uint8_t n, char **out);

/**
 * Run a verification suite by name. `n` and `k` of 0 select the suite
 * defaults. `passed` receives 1 when every case passed, 0 otherwise; the
 * report text goes to `report` when it is not null.
 *
 * # Safety
 * `suite` must be nul-terminated; `passed` must be valid for writes and
 * `report` null or valid for writes.
 */
enum QpStatus qp_verify(const char *suite,
                        uint8_t n,
                        size_t k,
                        uint64_t seed,
                        size_t samples,
                        int32_t *passed,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPLACTIC_H */
