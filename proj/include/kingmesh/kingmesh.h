#ifndef KINGMESH_KINGMESH_H
#define KINGMESH_KINGMESH_H

/*
 * C interface to the kingmesh engine: king permutation counting and
 * enumeration, mesh pattern distributions, truncated series, verification.
 *
 * Every fallible call returns a km_status. On failure a message is kept per
 * thread and can be read with km_last_error() until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * km_string_free(). Handles are released with their matching *_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define KM_API __declspec(dllexport)
#else
#define KM_API __attribute__((visibility("default")))
#endif

typedef enum km_status {
  KM_OK = 0,
  KM_ERR_INVALID_ARGUMENT = 1,
  KM_ERR_PARSE = 2,           /* km_last_error_offset() has the position */
  KM_ERR_UNKNOWN_PATTERN = 3,
  KM_ERR_SERIES = 4,          /* e.g. division by a series without unit constant term */
  KM_ERR_TOO_LARGE = 5,       /* n_max above 10 without allow_large */
  KM_ERR_INTERNAL = 6
} km_status;

typedef enum km_class { KM_CLASS_ALL = 0, KM_CLASS_S, KM_CLASS_L, KM_CLASS_SL, KM_CLASS_LS } km_class;

typedef enum km_method { KM_METHOD_REC = 0, KM_METHOD_EXPLICIT, KM_METHOD_GF, KM_METHOD_ENUM } km_method;

typedef enum km_format { KM_FORMAT_TABLE = 0, KM_FORMAT_JSON = 1 } km_format;

typedef struct km_pattern km_pattern;
typedef struct km_table km_table;
typedef struct km_series km_series;
typedef struct km_reports km_reports;

/* Returning nonzero stops the enumeration early. */
typedef int (*km_perm_visitor)(void* ctx, const int* values, int n);

KM_API const char* km_version(void);
KM_API const char* km_status_name(km_status status);
KM_API const char* km_last_error(void);
KM_API long km_last_error_offset(void); /* -1 unless the last error was KM_ERR_PARSE */
KM_API void km_string_free(char* s);

KM_API km_status km_parse_class(const char* text, km_class* out);
KM_API km_status km_parse_method(const char* text, km_method* out);
KM_API int km_default_jobs(void); /* KINGMESH_JOBS, else the hardware thread count */
KM_API int km_large_threshold(void);

/* Counting and enumeration. */
KM_API km_status km_count(int n, km_class cls, km_method method, int jobs, char** out_decimal);
KM_API km_status km_enumerate(int n, km_class cls, km_perm_visitor visit, void* ctx);

/* Patterns: "mesh(2;12;{(0,1),(1,0)})" or "nr:16". */
KM_API km_status km_pattern_parse(const char* text, km_pattern** out);
KM_API void km_pattern_free(km_pattern* p);
KM_API km_status km_pattern_render(const km_pattern* p, char** out);
KM_API km_status km_pattern_occurrences(const km_pattern* p, const int* values, int n, char** out_decimal);
KM_API size_t km_catalog_size(void);
KM_API const char* km_catalog_id(size_t index); /* NULL past the end */
KM_API int km_catalog_is_solved(size_t index);

/* Oracle tables. */
KM_API km_status km_table_compute(const km_pattern* p, int n_max, km_class cls, int jobs, int allow_large,
                                  km_table** out);
KM_API void km_table_free(km_table* t);
KM_API int km_table_n_max(const km_table* t);
KM_API km_status km_table_row(const km_table* t, int n, char** out_poly);
KM_API km_status km_table_render(const km_table* t, km_format format, char** out);

/* Series: A, B, C, Atu, Btu, Ctu, P:<nr>, E:<nr>. */
KM_API km_status km_series_build(const char* name, int order, km_series** out);
KM_API void km_series_free(km_series* s);
KM_API int km_series_order(const km_series* s);
KM_API km_status km_series_coefficient(const km_series* s, int n, char** out_poly);
KM_API km_status km_series_render(const km_series* s, km_format format, char** out);

/* Verification. */
KM_API km_status km_verify_theorem(const char* nr, int order, int n_max, int jobs, int allow_large,
                                   km_reports** out);
KM_API km_status km_verify_equation(const char* id, int order, km_reports** out);
KM_API km_status km_verify_all(int order, int n_max, int jobs, int allow_large, km_reports** out);
KM_API size_t km_equation_count(void);
KM_API const char* km_equation_id(size_t index); /* NULL past the end */
KM_API void km_reports_free(km_reports* r);
KM_API size_t km_reports_size(const km_reports* r);
KM_API size_t km_reports_failures(const km_reports* r);
KM_API const char* km_reports_id(const km_reports* r, size_t index);
KM_API const char* km_reports_status(const km_reports* r, size_t index);
KM_API km_status km_reports_render(const km_reports* r, km_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KINGMESH_KINGMESH_H */
