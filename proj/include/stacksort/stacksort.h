#ifndef STACKSORT_STACKSORT_H
#define STACKSORT_STACKSORT_H

/*
 * C interface to the stacksort library: pattern-avoiding stack machines,
 * West's bijection, the Rotem map, exact sequences and verification suites.
 *
 * Conventions
 *   - Every fallible call returns ss_status; SS_OK is zero.
 *   - On failure, ss_last_error_message() describes the error for the
 *     calling thread until its next failing call.
 *   - Output handles are written only on success and must be released with
 *     the matching *_free function. Passing NULL to a *_free function is a
 *     no-op.
 *   - Permutations are 1-based in one-line notation. Pattern lists are
 *     comma-separated digit strings, plus the keywords "123-star" and
 *     "132-star".
 */

#include <stddef.h>
#include <stdint.h>

#if defined(STACKSORT_BUILDING_LIBRARY)
#define SS_API __attribute__((visibility("default")))
#else
#define SS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_INVALID_ARGUMENT = 1,
  SS_ERR_MALFORMED_TOKEN = 2,
  SS_ERR_NOT_A_BIJECTION = 3,
  SS_ERR_VALUE_OUT_OF_RANGE = 4,
  SS_ERR_K_OUT_OF_RANGE = 5,
  SS_ERR_SITE_OUT_OF_RANGE = 6,
  SS_ERR_TOO_SHORT = 7,
  SS_ERR_LENGTH_TOO_LARGE = 8,
  SS_ERR_EMPTY_PATTERN_SET = 9,
  SS_ERR_DEGENERATE_PAIR = 10,
  SS_ERR_SOURCE_NOT_AVOIDER = 11,
  SS_ERR_NO_MATCH = 12,
  SS_ERR_NOT_123_AVOIDER = 13,
  SS_ERR_INVALID_B_SEQUENCE = 14,
  SS_ERR_SEMILENGTH_TOO_LARGE = 15,
  SS_ERR_OVERFLOW = 16,
  SS_ERR_NON_INTEGER_COEFFICIENT = 17,
  SS_ERR_CORRUPT_CACHE_ENTRY = 18,
  SS_ERR_IO = 19,
  SS_ERR_INTERNAL = 20
} ss_status;

typedef enum ss_format { SS_FORMAT_TEXT = 0, SS_FORMAT_JSON = 1, SS_FORMAT_CSV = 2 } ss_format;

typedef enum ss_west_direction { SS_WEST_132_TO_123 = 0, SS_WEST_123_TO_132 = 1 } ss_west_direction;

typedef struct ss_context ss_context;
typedef struct ss_perm ss_perm;
typedef struct ss_text ss_text;

/* Errors */
SS_API const char* ss_status_name(ss_status status);
SS_API const char* ss_last_error_message(void);

/* Library version, "major.minor.patch". */
SS_API const char* ss_version(void);

/* Context: worker count, generation length cap and optional result cache. */
SS_API ss_status ss_context_new(ss_context** out);
SS_API void ss_context_free(ss_context* ctx);
SS_API ss_status ss_context_set_workers(ss_context* ctx, int workers);
SS_API ss_status ss_context_set_length_cap(ss_context* ctx, int cap);
/* NULL or "" disables caching. */
SS_API ss_status ss_context_set_cache_dir(ss_context* ctx, const char* dir);
/* Accumulated cache warnings, "" when there are none. */
SS_API const char* ss_context_warnings(const ss_context* ctx);

/* Text buffers returned by the rendering and string-valued calls. */
SS_API const char* ss_text_data(const ss_text* text);
SS_API size_t ss_text_size(const ss_text* text);
SS_API void ss_text_free(ss_text* text);

/* Permutations */
SS_API ss_status ss_perm_parse(const char* text, ss_perm** out);
SS_API ss_status ss_perm_from_values(const int* values, size_t length, ss_perm** out);
SS_API size_t ss_perm_size(const ss_perm* perm);
/* Copies min(capacity, size) entries; *length receives the full size. */
SS_API ss_status ss_perm_values(const ss_perm* perm, int* values, size_t capacity, size_t* length);
SS_API ss_status ss_perm_to_text(const ss_perm* perm, ss_text** out);
SS_API void ss_perm_free(ss_perm* perm);

/* Machines. tau may be NULL or "" for the single-stack sigma-machine. */
SS_API ss_status ss_pattern_stack_pass(const ss_perm* x, const char* patterns, ss_perm** out);
SS_API ss_status ss_west_pass(const ss_perm* x, ss_perm** out);
SS_API ss_status ss_machine_run(const ss_perm* x, const char* sigma, const char* tau, ss_perm** out);
SS_API ss_status ss_is_sortable(const ss_perm* x, const char* sigma, const char* tau, int* sortable);

/* *contains is 1 when x contains at least one pattern of the list. */
SS_API ss_status ss_contains(const ss_perm* x, const char* patterns, int* contains);

/* Bijections */
SS_API ss_status ss_signature(const ss_perm* x, const char* pattern, ss_text** out);
SS_API ss_status ss_west_map(const ss_perm* x, ss_west_direction direction, ss_perm** out);
SS_API ss_status ss_rotem_map(const ss_perm* x, ss_text** dyck_word);

/* Enumeration, cached through ctx when a cache directory is set. */
SS_API ss_status ss_count_sortable(ss_context* ctx, const char* sigma, const char* tau, int n, uint64_t* count);

/* Renderings. witnesses: -1 default (kept for n <= 8), 0 off, 1 on. */
SS_API ss_status ss_render_trace(const ss_perm* x, const char* sigma, const char* tau, ss_format format,
                                 ss_text** out);
SS_API ss_status ss_render_enumeration(ss_context* ctx, const char* sigma, const char* tau, int n, int witnesses,
                                       ss_format format, ss_text** out);
/* suite: characterization, west, dyck, section4, tables, conjecture or all. */
SS_API ss_status ss_render_verify(ss_context* ctx, const char* suite, int n_max, ss_format format, int* all_pass,
                                  ss_text** out);
SS_API ss_status ss_render_signature(const ss_perm* x, const char* pattern, ss_format format, ss_text** out);
SS_API ss_status ss_render_west_map(const ss_perm* x, ss_west_direction direction, ss_format format,
                                    ss_text** out);
SS_API ss_status ss_render_dyck(const ss_perm* x, ss_format format, ss_text** out);
/* name: g, f, gf, catalan, schroder, binomial-catalan, powers-of-two, sort-123-321 or all. */
SS_API ss_status ss_render_sequences(const char* name, int n_max, ss_format format, ss_text** out);
SS_API ss_status ss_render_conjecture(ss_context* ctx, int n, ss_format format, int* agree, ss_text** out);

#ifdef __cplusplus
}
#endif

#endif
