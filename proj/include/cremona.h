/* C interface to the del Pezzo lattice toolkit.
 *
 * All functions return a crm_status. Output strings are heap-allocated
 * JSON (or DOT/TSV where noted) and must be released with
 * crm_string_free; on error *out is set to NULL or, where documented, to
 * a diagnostic message that must still be freed.
 */
#ifndef CREMONA_H
#define CREMONA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crm_status {
    CRM_OK = 0,        /* success; for verification calls: all checks passed */
    CRM_FAIL = 1,      /* verification ran to completion but some check failed */
    CRM_EINVAL = 2,    /* malformed input or out-of-range argument */
    CRM_ERESOURCE = 3, /* refused or aborted for size reasons */
    CRM_EINTERNAL = 4  /* unexpected internal failure */
} crm_status;

void crm_string_free(char* s);

/* ---- enumeration (degree = surface degree, 1..8) ---- */

crm_status crm_lines_count(int degree, int* count);
crm_status crm_roots_count(int degree, int* count);

/* JSON list of the classes, each {"r": int, "coords": [...]}. */
crm_status crm_lines_json(int degree, char** out);
crm_status crm_roots_json(int degree, char** out);

/* incidence graph of the (-1)-classes */
crm_status crm_graph_json(int degree, char** out);
crm_status crm_graph_dot(int degree, char** out);

/* ---- classification ---- */

/* Input: {"r": int, "matrix": [[int,...],...]}. Output: order, factored
 * char poly, trace, minimality, Lefschetz number, class-label candidates. */
crm_status crm_classify(const char* isometry_json, char** out);

/* Input: {"r": int, "generators": [matrix,...], "sigma": matrix|null}.
 * Output: group order, invariant Picard rank (formula and oracle),
 * invariant exceptional configurations, orbit structure. */
crm_status crm_action_analyze(const char* action_json, char** out);

/* ---- Weyl groups ---- */

typedef struct crm_group crm_group;

/* rank in 3..7; rank 7 requires allow_large != 0 */
crm_status crm_group_build(int rank, int allow_large, crm_group** out);
crm_status crm_group_order(const crm_group* g, long long* order);
void crm_group_free(crm_group* g);

/* ---- verification suites ---- */

/* suite: tables, appendix, dp6, dp5, dp4, dp3, dp2, dp1, surfaces, all.
 * Returns CRM_OK/CRM_FAIL with a JSON verdict list in *report. */
crm_status crm_verify(const char* suite, int allow_large, unsigned long long seed,
                      char** report);

/* example: tau0, g0, s_alpha, quadric, forms. */
crm_status crm_surfaces_verify(const char* example, char** report);

/* every encoded reference table as TSV */
crm_status crm_emit_tables(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CREMONA_H */
