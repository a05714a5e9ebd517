/*
 * splitg2 C interface.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an sg2_status; on
 * failure sg2_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** out
 * parameters are heap-allocated and must be released with sg2_string_free.
 */
#ifndef SPLITG2_SPLITG2_H
#define SPLITG2_SPLITG2_H

#include <stddef.h>

#if defined(_WIN32)
#define SG2_API __declspec(dllexport)
#else
#define SG2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg2_status {
  SG2_OK = 0,
  SG2_ERR_FIELD_MISMATCH = 1,
  SG2_ERR_DIVISION_BY_ZERO = 2,
  SG2_ERR_INVALID_MODULUS = 3,
  SG2_ERR_SHAPE_MISMATCH = 4,
  SG2_ERR_NOT_INTEGER = 5,
  SG2_ERR_NOT_IN_SPAN = 6,
  SG2_ERR_NOT_CLOSED = 7,
  SG2_ERR_PARAMETERIZATION = 8,
  SG2_ERR_PARSE = 9,
  SG2_ERR_INVALID_ARGUMENT = 10,
  SG2_ERR_INTERNAL = 99
} sg2_status;

typedef enum sg2_format {
  SG2_FORMAT_TEXT = 0,
  SG2_FORMAT_JSON = 1,
  SG2_FORMAT_LATEX = 2
} sg2_format;

typedef struct sg2_field sg2_field;
typedef struct sg2_octonion sg2_octonion;
typedef struct sg2_matrix sg2_matrix;
typedef struct sg2_space sg2_space;
typedef struct sg2_table sg2_table;
typedef struct sg2_report sg2_report;

SG2_API const char* sg2_last_error(void);
SG2_API const char* sg2_status_name(sg2_status status);
SG2_API void sg2_string_free(char* s);

/* Field: "q" for the rationals, "fp:<p>" for GF(p). */
SG2_API sg2_status sg2_field_parse(const char* spec, sg2_field** out);
SG2_API sg2_status sg2_field_describe(const sg2_field* field, char** out);
SG2_API void sg2_field_free(sg2_field* field);

/* Octonion: a basis name (A, B, C1..C3, D1..D3, Y, ZERO) or a Zorn JSON object. */
SG2_API sg2_status sg2_octonion_parse(const sg2_field* field, const char* text,
                                      sg2_octonion** out);
SG2_API sg2_status sg2_octonion_mul(const sg2_octonion* lhs, const sg2_octonion* rhs,
                                    sg2_octonion** out);
SG2_API sg2_status sg2_octonion_render(const sg2_octonion* z, sg2_format format, char** out);
SG2_API void sg2_octonion_free(sg2_octonion* z);

/* Matrix JSON: {"rows": r, "cols": c, "entries": [[...], ...]}. */
SG2_API sg2_status sg2_matrix_parse_json(const sg2_field* field, const char* json,
                                         sg2_matrix** out);
SG2_API sg2_status sg2_matrix_render(const sg2_matrix* m, sg2_format format, char** out);
SG2_API void sg2_matrix_free(sg2_matrix* m);

/* Derivation algebra of the split octonions over the field. */
SG2_API sg2_status sg2_space_solve(const sg2_field* field, sg2_space** out);
SG2_API sg2_status sg2_space_dim(const sg2_space* space, size_t* dim);
/* 1 when the basis is the pinned x1..x14, 0 for a raw nullspace basis. */
SG2_API int sg2_space_is_pinned(const sg2_space* space);
SG2_API sg2_status sg2_space_basis_element(const sg2_space* space, size_t index,
                                           sg2_matrix** out);
SG2_API sg2_status sg2_space_render(const sg2_space* space, sg2_format format, char** out);
SG2_API void sg2_space_free(sg2_space* space);

/* Coordinates of a derivation in x1..x14; SG2_ERR_NOT_IN_SPAN when it is not one. */
SG2_API sg2_status sg2_recon(const sg2_matrix* m, sg2_format format, char** out);
SG2_API sg2_status sg2_bracket(const sg2_matrix* a, const sg2_matrix* b, sg2_matrix** out);

/* Structure constants of the pinned basis. */
SG2_API sg2_status sg2_table_compute(const sg2_space* space, sg2_table** out);
SG2_API sg2_status sg2_table_parse_json(const sg2_field* field, const char* json,
                                        sg2_table** out);
SG2_API sg2_status sg2_table_render(const sg2_table* table, sg2_format format, char** out);
SG2_API int sg2_table_equal(const sg2_table* a, const sg2_table* b);
SG2_API void sg2_table_free(sg2_table* table);

/* Built-in golden table in "i j k c" line format. */
SG2_API const char* sg2_golden_builtin(void);

/* Verification suite; golden == NULL selects the built-in table. */
SG2_API sg2_status sg2_verify(const sg2_field* field, const char* golden, sg2_report** out);
SG2_API int sg2_report_ok(const sg2_report* report);
SG2_API sg2_status sg2_report_counts(const sg2_report* report, size_t* passed, size_t* total);
SG2_API sg2_status sg2_report_render(const sg2_report* report, sg2_format format, char** out);
SG2_API void sg2_report_free(sg2_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SPLITG2_SPLITG2_H */
