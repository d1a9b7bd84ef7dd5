#ifndef RAMANUJAN_H
#define RAMANUJAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RamStatus {
  RAM_STATUS_OK = 0,
  RAM_STATUS_NULL_POINTER = 1,
  RAM_STATUS_INVALID_ARGUMENT = 2,
  RAM_STATUS_PARSE = 3,
  RAM_STATUS_NOT_REAL_ROOTED = 4,
  RAM_STATUS_BUDGET_EXCEEDED = 5,
  RAM_STATUS_UNSUPPORTED = 6,
  RAM_STATUS_CERTIFICATION_FAILED = 7,
  RAM_STATUS_IO = 8,
  RAM_STATUS_OVERFLOW = 9,
  RAM_STATUS_PANIC = 10,
} RamStatus;

typedef enum RamVerdict {
  RAM_VERDICT_ALL_BELOW = 0,
  RAM_VERDICT_TOUCHES = 1,
  RAM_VERDICT_EXCEEDS = 2,
} RamVerdict;

// Graph handle.
typedef struct RamGraph RamGraph;

// Integer polynomial handle.
typedef struct RamPoly RamPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// success. Valid until the next call on the same thread.
const char *ram_last_error(void);

// # Safety
// `s` must come from this library and not have been freed.
void ram_string_free(char *s);

// Graph on `n` vertices with `m` edges, `edges` holding `2m` endpoints.
//
// # Safety
// `edges` must point to `2 * m` readable values (or be NULL when `m = 0`);
// `out` must be writable.
enum RamStatus ram_graph_new(size_t n, const size_t *edges, size_t m, struct RamGraph **out);

// Parses edge-list text (`n m` then one `u v` line per edge).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum RamStatus ram_graph_parse(const char *text, struct RamGraph **out);

// # Safety
// `g` must come from this library and not have been freed.
void ram_graph_free(struct RamGraph *g);

// # Safety
// `g` must be a live graph handle or NULL (which gives 0).
size_t ram_graph_vertex_count(const struct RamGraph *g);

// # Safety
// `g` must be a live graph handle or NULL (which gives 0).
size_t ram_graph_edge_count(const struct RamGraph *g);

// Edge-list text, freed with [`ram_string_free`].
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum RamStatus ram_graph_to_edge_list(const struct RamGraph *g, char **out);

// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum RamStatus ram_matching_polynomial(const struct RamGraph *g, struct RamPoly **out);

// Characteristic polynomial of the adjacency matrix.
//
// # Safety
// `g` must be a live graph handle; `out` must be writable.
enum RamStatus ram_char_poly(const struct RamGraph *g, struct RamPoly **out);

// # Safety
// `p` must come from this library and not have been freed.
void ram_poly_free(struct RamPoly *p);

// Degree, or -1 for the zero polynomial or a NULL handle.
//
// # Safety
// `p` must be a live polynomial handle or NULL.
ptrdiff_t ram_poly_degree(const struct RamPoly *p);

// Coefficient of `x^i`; zero past the degree.
//
// # Safety
// `p` must be a live polynomial handle; `out` must be writable.
enum RamStatus ram_poly_coeff_i64(const struct RamPoly *p, size_t i, int64_t *out);

// Ascending coefficients separated by spaces, freed with
// [`ram_string_free`].
//
// # Safety
// `p` must be a live polynomial handle; `out` must be writable.
enum RamStatus ram_poly_to_text(const struct RamPoly *p, char **out);

// Greedy signing whose new eigenvalues stay below the largest matching
// root. Writes one sign per edge into `signs` (capacity `len`, at least the
// edge count) and, when `certificate` is non-NULL, the JSON certificate.
//
// # Safety
// `g` must be a live graph handle; `signs` must have `len` writable
// entries; `certificate` must be NULL or writable.
enum RamStatus ram_find_good_signing(const struct RamGraph *g,
                                     int8_t *signs,
                                     size_t len,
                                     char **certificate);

// 2-lift of `g` by the signing `signs` (one ±1 per edge).
//
// # Safety
// `g` must be a live graph handle; `signs` must have `len` readable
// entries; `out` must be writable.
enum RamStatus ram_two_lift(const struct RamGraph *g,
                            const int8_t *signs,
                            size_t len,
                            struct RamGraph **out);

// Certifies a regular or biregular graph against its Ramanujan bound.
// `json` receives the certificate and `verdict` its outcome; either may be
// NULL.
//
// # Safety
// `g` must be a live graph handle; the outputs must be NULL or writable.
enum RamStatus ram_certify(const struct RamGraph *g, char **json, enum RamVerdict *verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RAMANUJAN_H */
