/* C interface to the weylnichols library.
 *
 * Every computation entry point fills *out_json with a NUL-terminated JSON
 * document (schemas in docs/schemas.md) that the caller releases with
 * wn_free(). On failure the return code is nonzero, *out_json is left
 * untouched, and wn_last_error() returns a message owned by the context.
 *
 * Contexts are not thread-safe; create one per thread.
 */
#ifndef WEYLNICHOLS_H
#define WEYLNICHOLS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WN_API __declspec(dllexport)
#else
#define WN_API __attribute__((visibility("default")))
#endif

typedef struct wn_context wn_context;

typedef enum wn_status {
    WN_OK = 0,
    WN_ERR_DOMAIN = 1,        /* bad input: unknown family, malformed element, ... */
    WN_ERR_VERIFY_FAILED = 2, /* a verification suite reported a mismatch */
    WN_ERR_CUTOFF = 3,        /* enumeration would exceed the configured cutoff */
    WN_ERR_INTERNAL = 4
} wn_status;

WN_API wn_context* wn_context_new(void);
WN_API void wn_context_free(wn_context* ctx);

WN_API void wn_context_set_cutoff(wn_context* ctx, uint64_t max_group_order);
WN_API void wn_context_set_workers(wn_context* ctx, int workers);
WN_API void wn_context_set_seed(wn_context* ctx, uint64_t seed);
WN_API void wn_context_set_property_cases(wn_context* ctx, int cases);

/* Message for the most recent failing call on this context. */
WN_API const char* wn_last_error(const wn_context* ctx);

/* Release a string returned through an out_json parameter. */
WN_API void wn_free(char* p);

/* Conjugacy classes of the family ('A'|'B'|'D') at the given rank. */
WN_API wn_status wn_classes_json(wn_context* ctx, char family, int rank, char** out_json);

/* Centralizer of the element given by cycle notation and an optional
 * 0/1 sign string (NULL or "" means all-positive). */
WN_API wn_status wn_centralizer_json(wn_context* ctx, char family, int rank,
                                     const char* perm, const char* sign,
                                     int include_elements, char** out_json);

/* Per-block image of tau in the product of wreath factors attached to
 * sigma (tau == NULL evaluates sigma itself). */
WN_API wn_status wn_phi_json(wn_context* ctx, int rank, const char* sigma,
                             const char* tau, char** out_json);

/* Distinguished element of a cycle type ("1^2 2^3") with exponent
 * assignments ("2:[1,1,1]", ';'-separated) and optional stabilizer labels
 * ("2:sgn", ';'-separated). */
WN_API wn_status wn_xi_json(wn_context* ctx, const char* cycle_type,
                            const char* exponents, const char* labels, char** out_json);

/* Square-commutativity verdicts for every unordered pair of conjugacy
 * classes (the identity class only when include_trivial is set). */
WN_API wn_status wn_squarecomm_json(wn_context* ctx, char family, int rank,
                                    int include_trivial, char** out_json);

/* Classification verdict for a module or ramification description. */
WN_API wn_status wn_classify_json(wn_context* ctx, const char* spec_json, char** out_json);

/* Run a named verification suite ("all", "2.1", "2.4", "2.8", "1.9",
 * "3.9", "3.10", "3.11", "classifier", "properties"); n restricts suites
 * with a size parameter (0 = default range). Returns WN_ERR_VERIFY_FAILED
 * when a check fails; *out_json is filled either way. */
WN_API wn_status wn_verify_json(wn_context* ctx, const char* suite, int n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* WEYLNICHOLS_H */
