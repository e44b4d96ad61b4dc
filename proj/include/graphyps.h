/* C interface to the graphyps library: opaque handles, status codes, and
 * JSON-string results. All returned strings are heap-allocated and must be
 * released with gy_string_free; graphs with gy_graph_free. */

#ifndef GRAPHYPS_H
#define GRAPHYPS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gy_graph gy_graph;

typedef enum {
    GY_OK = 0,
    GY_ERR_DOMAIN = 1,   /* valid request, mathematically refused */
    GY_ERR_USAGE = 2,    /* bad parameters */
    GY_ERR_PARSE = 3,    /* malformed input document */
    GY_ERR_BOUND = 4,    /* size or budget limit exceeded */
    GY_ERR_OVERFLOW = 5, /* exact integer arithmetic overflow */
    GY_ERR_NOMEM = 6,
    GY_ERR_INTERNAL = 7
} gy_status;

/* Message describing the most recent failure on this thread. */
const char* gy_last_error(void);

void gy_string_free(char* s);
void gy_graph_free(gy_graph* g);

/* Graph documents: {"edges": [[tail,head],...], "vertices": m}. */
gy_status gy_graph_from_json(const char* json, gy_graph** out);
gy_status gy_graph_to_json(const gy_graph* g, char** out_json);

/* Families: "ws"/"wheel" n; "zz"/"zigzag" n; "gzz" l1..lt; "xx5"; "st5". */
gy_status gy_graph_family(const char* name, const int* params, size_t nparams, gy_graph** out);

int gy_graph_vertices(const gy_graph* g);
int gy_graph_edges(const gy_graph* g);
gy_status gy_betti(const gy_graph* g, int* out);

/* Graph polynomial as a polynomial document; use_tree_sum selects the
 * spanning-tree route instead of the determinant route (identical output).
 * paper_coords != 0 reports the renamed A/B coordinates instead. */
gy_status gy_psi_json(const gy_graph* g, int use_tree_sum, int paper_coords, char** out_json);

/* {"pld": bool, "witness": graph|null} */
gy_status gy_pld_json(const gy_graph* g, char** out_json);

/* Array of {"canonical_key", "family", "graph"} for every primitive log
 * divergent class with 2*loops edges. */
gy_status gy_classify_json(int loops, int experimental, int threads, char** out_json);

gy_status gy_glue(const gy_graph* a, int edge_a, const gy_graph* b, int edge_b, int cross,
                  gy_graph** out, int* out_simple);

/* {"records": [...], "fit": {...}} (fit only when requested; holdout 0 means
 * no holdout check). force != 0 lifts the step budget. */
gy_status gy_count_json(const gy_graph* g, const uint32_t* primes, size_t nprimes, int fit,
                        uint32_t holdout, int threads, int force, int with_timing,
                        char** out_json);

/* Period estimate document; on a refused (divergent) graph returns
 * GY_ERR_DOMAIN and still fills out_json with
 * {"error": {"kind": "ConvergenceRefused", "witness": graph|null}}. */
gy_status gy_period_json(const gy_graph* g, unsigned long long samples, uint64_t seed,
                         int chart, int threads, char** out_json);

/* {"checks": [{"cases", "name", "pass"}...], "pass": bool} */
gy_status gy_identities_selftest_json(int min_size, int max_size, int trials, uint64_t seed,
                                      char** out_json);

#ifdef __cplusplus
}
#endif

#endif
