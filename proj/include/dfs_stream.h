/* C interface for the streaming DFS-tree library.
 *
 * All functions returning a pointer yield NULL on failure; all functions
 * returning int yield 0 on success and a negative DFSS_ERR_* code otherwise.
 * dfss_last_error() describes the most recent failure on the calling thread.
 */
#ifndef DFS_STREAM_H_
#define DFS_STREAM_H_

#include <stdint.h>
#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DFSS_OK 0
#define DFSS_ERR_ARGUMENT -1   /* bad parameter or unknown algorithm name */
#define DFSS_ERR_PARSE -2      /* malformed edge-list input */
#define DFSS_ERR_IO -3         /* file not readable */
#define DFSS_ERR_BUDGET -4     /* edge-storage budget exceeded during a run */
#define DFSS_ERR_INTERNAL -5   /* invariant violation; indicates a bug */

typedef struct dfss_graph dfss_graph;
typedef struct dfss_result dfss_result;

/* Thread-local message for the last error raised on this thread.
 * Never NULL; empty string when no error has occurred. */
const char* dfss_last_error(void);

/* ---- graphs ----------------------------------------------------------- */

/* Parse an undirected edge list ("u v" per line, 1-based ids, '%' or '#'
 * comments, self-loops ignored). The name is used in diagnostics and CSV
 * output; may be NULL. */
dfss_graph* dfss_graph_from_text(const char* text, const char* name);

dfss_graph* dfss_graph_from_file(const char* path);

/* Erdos-Renyi style G(n, m): m distinct edges drawn uniformly from all
 * unordered pairs over n vertices. Deterministic in (n, m, seed). */
dfss_graph* dfss_graph_random(uint32_t n, uint64_t m, uint64_t seed);

void dfss_graph_free(dfss_graph* g);

uint32_t dfss_graph_vertices(const dfss_graph* g); /* excludes the root */
uint64_t dfss_graph_edges(const dfss_graph* g);
const char* dfss_graph_name(const dfss_graph* g);

/* ---- runs ------------------------------------------------------------- */

typedef struct {
  const char* algo;    /* "simpo", "simp", "imprv", "kpath", "klevo", "klev" */
  uint32_t k;          /* trade-off parameter; ignored by simpo/simp/imprv */
  double space_mult;   /* scales the default edge budget (default 1.0) */
  int enforce_budget;  /* nonzero: exceeding the budget aborts the run */
} dfss_config;

void dfss_config_init(dfss_config* cfg);

/* Default edge-storage budget for an algorithm on a graph with n vertices
 * (excluding the root). Returns 0 for an unknown algorithm name. */
uint64_t dfss_default_budget(const char* algo, uint32_t n, uint32_t k);

/* Run one algorithm over the graph's edge stream. */
dfss_result* dfss_run(const dfss_graph* g, const dfss_config* cfg);

void dfss_result_free(dfss_result* r);

uint64_t dfss_result_passes(const dfss_result* r);
uint64_t dfss_result_edges_scanned(const dfss_result* r);
uint64_t dfss_result_peak_edges(const dfss_result* r);
uint32_t dfss_result_height(const dfss_result* r);
double dfss_result_wall_seconds(const dfss_result* r);

/* Serialize the DFS tree as one "vertex parent level" line per vertex
 * (root line has parent -1), ascending by vertex id. Caller frees the
 * returned buffer with dfss_string_free. */
char* dfss_result_tree(const dfss_result* r);

void dfss_string_free(char* s);

/* ---- validation ------------------------------------------------------- */

/* Check that the result's tree is a DFS tree of the graph: spanning, rooted
 * at 0, and every graph edge connects an ancestor-descendant pair.
 * Returns 1 when valid, 0 when not, negative on error. When invalid and
 * viol_u/viol_v are non-NULL they receive the first violating edge. */
int dfss_result_validate(const dfss_result* r, const dfss_graph* g,
                         uint32_t* viol_u, uint32_t* viol_v);

/* Same check for a tree in the textual format of dfss_result_tree. */
int dfss_validate_tree(const dfss_graph* g, const char* tree_text,
                       uint32_t* viol_u, uint32_t* viol_v);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DFS_STREAM_H_ */
