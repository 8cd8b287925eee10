#ifndef TAXICAB5_H
#define TAXICAB5_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum T5Status {
  T5_STATUS_OK = 0,
  T5_STATUS_NULL_POINTER = 1,
  T5_STATUS_INVALID_UTF8 = 2,
  T5_STATUS_PARSE_ERROR = 3,
  T5_STATUS_INVALID_ARGUMENT = 4,
  T5_STATUS_NOT_A_SOLUTION = 5,
  T5_STATUS_PANIC = 6,
} T5Status;

/*
 Opaque Gaussian integer.
 */
typedef struct T5GaussInt T5GaussInt;

/*
 Opaque solution candidate `(w, x, y, z)` with its exponent.
 */
typedef struct T5Quadruple T5Quadruple;

/*
 Opaque list of search result classes.
 */
typedef struct T5SearchResult T5SearchResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or NULL. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *t5_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string obtained from this library, not yet freed.
 */
void t5_string_free(char *s);

/*
 Parses `text` (`3`, `-5`, `2+3i`, `-597i`, ...).

 # Safety
 `text` must be NULL or a NUL-terminated string.
 */
enum T5Status t5_gaussint_parse(const char *text, struct T5GaussInt **out);

/*
 `re + im·i` from machine integers.

 # Safety
 `out` must be NULL or writable.
 */
enum T5Status t5_gaussint_new(int64_t re, int64_t im, struct T5GaussInt **out);

/*
 # Safety
 `z` must be NULL or a handle from this library, not yet freed.
 */
void t5_gaussint_free(struct T5GaussInt *z);

/*
 Renders `z` in the same grammar `t5_gaussint_parse` accepts.

 # Safety
 `z` must be a live handle; `out` must be writable.
 */
enum T5Status t5_gaussint_to_string(const struct T5GaussInt *z, char **out);

/*
 Real and imaginary parts as decimal strings.

 # Safety
 `z` must be a live handle; `re` and `im` must be writable.
 */
enum T5Status t5_gaussint_parts(const struct T5GaussInt *z, char **re, char **im);

/*
 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
enum T5Status t5_gaussint_add(const struct T5GaussInt *a,
                              const struct T5GaussInt *b,
                              struct T5GaussInt **out);

/*
 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
enum T5Status t5_gaussint_mul(const struct T5GaussInt *a,
                              const struct T5GaussInt *b,
                              struct T5GaussInt **out);

/*
 # Safety
 `z` must be a live handle; `out` must be writable.
 */
enum T5Status t5_gaussint_pow(const struct T5GaussInt *z,
                              uint32_t exponent,
                              struct T5GaussInt **out);

/*
 # Safety
 `z` must be a live handle; `out` must be writable.
 */
enum T5Status t5_gaussint_conj(const struct T5GaussInt *z, struct T5GaussInt **out);

/*
 `re² + im²` as a decimal string.

 # Safety
 `z` must be a live handle; `out` must be writable.
 */
enum T5Status t5_gaussint_norm(const struct T5GaussInt *z, char **out);

/*
 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
enum T5Status t5_gaussint_equal(const struct T5GaussInt *a, const struct T5GaussInt *b, bool *out);

/*
 Builds a candidate; the entries are copied, not consumed.

 # Safety
 `w`, `x`, `y`, `z` must be live handles; `out` must be writable.
 */
enum T5Status t5_quadruple_new(const struct T5GaussInt *w,
                               const struct T5GaussInt *x,
                               const struct T5GaussInt *y,
                               const struct T5GaussInt *z,
                               uint32_t exponent,
                               struct T5Quadruple **out);

/*
 # Safety
 `q` must be NULL or a handle from this library, not yet freed.
 */
void t5_quadruple_free(struct T5Quadruple *q);

/*
 Copy of entry `index` (0 = w, 1 = x, 2 = y, 3 = z).

 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_quadruple_entry(const struct T5Quadruple *q,
                                 size_t index,
                                 struct T5GaussInt **out);

/*
 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_quadruple_exponent(const struct T5Quadruple *q, uint32_t *out);

/*
 Exact check of `w^e + x^e = y^e + z^e`.

 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_quadruple_verify(const struct T5Quadruple *q, bool *out);

/*
 `w^e + x^e` as a new handle.

 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_quadruple_left_sum(const struct T5Quadruple *q, struct T5GaussInt **out);

/*
 JSON object `{"w":{"re":..,"im":..},...,"exponent":e}`.

 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_quadruple_to_json(const struct T5Quadruple *q, char **out);

/*
 Minimal orbit element of a verified solution; `T5_STATUS_NOT_A_SOLUTION`
 otherwise.

 # Safety
 `q` must be a live handle; `out` must be writable.
 */
enum T5Status t5_canonicalize_solution(const struct T5Quadruple *q, struct T5Quadruple **out);

/*
 The `n`-th Pell number as a decimal string.

 # Safety
 `out` must be writable.
 */
enum T5Status t5_pell(uint64_t n, char **out);

/*
 `P_{2k} + P_{2k-1}` for `k >= 1`.

 # Safety
 `out` must be writable.
 */
enum T5Status t5_half_companion(uint64_t k, char **out);

/*
 Member `k >= 1` of the Pell solution family.

 # Safety
 `out` must be writable.
 */
enum T5Status t5_pell_family(uint64_t k, struct T5Quadruple **out);

/*
 Solution built from the Pythagorean triple `(a, b, c)`.

 # Safety
 `out` must be writable.
 */
enum T5Status t5_triple_solution(uint64_t a, uint64_t b, uint64_t c, struct T5Quadruple **out);

/*
 Both sides of the quadruple identity at `(a, b, c)`.

 # Safety
 `lhs` and `rhs` must be writable.
 */
enum T5Status t5_lemma(int64_t a,
                       int64_t b,
                       int64_t c,
                       struct T5GaussInt **lhs,
                       struct T5GaussInt **rhs);

/*
 Exhaustive box search. The result is identical for every `shards` value.

 # Safety
 `out` must be writable.
 */
enum T5Status t5_search_run(uint64_t bound,
                            uint32_t exponent,
                            uint32_t shards,
                            bool include_zero,
                            struct T5SearchResult **out);

/*
 # Safety
 `r` must be NULL or a handle from this library, not yet freed.
 */
void t5_search_result_free(struct T5SearchResult *r);

/*
 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum T5Status t5_search_result_len(const struct T5SearchResult *r, size_t *out);

/*
 Class `index`: its representative, common sum and orbit size.

 # Safety
 `r` must be a live handle; all out-parameters must be writable.
 */
enum T5Status t5_search_result_class(const struct T5SearchResult *r,
                                     size_t index,
                                     struct T5Quadruple **representative,
                                     struct T5GaussInt **sum,
                                     size_t *orbit_size);

/*
 The result as JSON lines, one class per line.

 # Safety
 `r` must be a live handle; `out` must be writable.
 */
enum T5Status t5_search_result_to_jsonl(const struct T5SearchResult *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TAXICAB5_H */
