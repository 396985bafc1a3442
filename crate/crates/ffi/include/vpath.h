#ifndef VPATH_H
#define VPATH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum VpClass {
  VP_CLASS_PATH = 0,
  VP_CLASS_CYCLE = 1,
  VP_CLASS_STAR = 2,
  VP_CLASS_RANDOM_TREE = 3,
  VP_CLASS_WHEEL = 4,
  VP_CLASS_COMPLETE = 5,
  VP_CLASS_COMPLETE_BIPARTITE = 6,
  VP_CLASS_GRID = 7,
  VP_CLASS_APOLLONIAN_SPINE = 8,
  VP_CLASS_APOLLONIAN_RANDOM = 9,
  VP_CLASS_NAMED = 10,
} VpClass;

typedef enum VpDecision {
  VP_DECISION_NO = 0,
  VP_DECISION_YES = 1,
  VP_DECISION_UNKNOWN = 2,
} VpDecision;

typedef enum VpDirection {
  VP_DIRECTION_AT_MOST = 0,
  VP_DIRECTION_AT_LEAST = 1,
} VpDirection;

typedef enum VpFormulaKind {
  VP_FORMULA_KIND_EXACT = 0,
  VP_FORMULA_KIND_UPPER_BOUND = 1,
  /**
   * `value` is the stated formula; `alt_low..=alt_high` the conflicting one.
   */
  VP_FORMULA_KIND_DISPUTED = 2,
} VpFormulaKind;

typedef enum VpMethod {
  VP_METHOD_BRUTE = 0,
  VP_METHOD_BNB = 1,
  VP_METHOD_LOCAL = 2,
} VpMethod;

typedef enum VpNamedGraph {
  VP_NAMED_GRAPH_OCTAHEDRAL = 0,
  VP_NAMED_GRAPH_JOHNSON12 = 1,
  VP_NAMED_GRAPH_JOHNSON13 = 2,
  VP_NAMED_GRAPH_HEXAHEDRAL5 = 3,
  VP_NAMED_GRAPH_HEPTAHEDRAL15 = 4,
  VP_NAMED_GRAPH_HEPTAHEDRAL29 = 5,
  VP_NAMED_GRAPH_HEPTAHEDRAL34 = 6,
  VP_NAMED_GRAPH_TWO_APOLLONIAN = 7,
} VpNamedGraph;

typedef enum VpObjective {
  VP_OBJECTIVE_MIN = 0,
  VP_OBJECTIVE_MAX = 1,
} VpObjective;

/**
 * Result code of every fallible call.
 */
typedef enum VpStatus {
  VP_STATUS_OK = 0,
  VP_STATUS_NULL_POINTER = 1,
  VP_STATUS_INVALID_ARGUMENT = 2,
  VP_STATUS_INVALID_NUMBERING = 3,
  VP_STATUS_PARSE_ERROR = 4,
  VP_STATUS_LIMIT_EXCEEDED = 5,
  VP_STATUS_UNSUPPORTED = 6,
  VP_STATUS_BUFFER_TOO_SMALL = 7,
  VP_STATUS_PANIC = 8,
} VpStatus;

/**
 * Opaque graph handle.
 */
typedef struct VpGraph VpGraph;

/**
 * Opaque solver result handle.
 */
typedef struct VpSolveResult VpSolveResult;

typedef struct VpSolveOptions {
  /**
   * Branch-and-bound node budget; 0 means unlimited.
   */
  uint64_t node_limit;
  /**
   * Wall-clock limit in seconds; 0 or negative means none.
   */
  double time_limit_secs;
  /**
   * Worker threads for branch-and-bound.
   */
  size_t threads;
  /**
   * Fix vertex 1 first. Only sound for vertex-transitive graphs.
   */
  bool symmetric_first;
  /**
   * Largest order accepted by the brute-force method.
   */
  size_t brute_cap;
  /**
   * Local search scan-order seed.
   */
  uint64_t seed;
  /**
   * Local search swap cap.
   */
  uint64_t max_iters;
} VpSolveOptions;

/**
 * Class and parameters. Only the fields used by `family` are read:
 * `n` for most classes, `p`/`q` for complete bipartite graphs, `rows`/`cols`
 * for grids, `seed` for random classes and `named` for fixed graphs.
 */
typedef struct VpClassSpec {
  enum VpClass family;
  size_t n;
  size_t p;
  size_t q;
  size_t rows;
  size_t cols;
  uint64_t seed;
  enum VpNamedGraph named;
} VpClassSpec;

typedef struct VpFormula {
  enum VpFormulaKind kind;
  uint64_t value;
  uint64_t alt_low;
  uint64_t alt_high;
} VpFormula;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next `vp_` call on the same thread.
 */
const char *vp_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *vp_version(void);

/**
 * Defaults: 10^8 nodes, no time limit, one thread, brute-force cap 10.
 */
struct VpSolveOptions vp_solve_options_default(void);

/**
 * Builds a graph on vertices `1..=n` from `m` pairs stored flat in `edges`
 * (`edges[2i]`, `edges[2i + 1]`).
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or may be null when
 * `m == 0`), and `out_graph` must be writable.
 */
enum VpStatus vp_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t m,
                                  struct VpGraph **out_graph);

/**
 * Parses the `n m` / `u v` edge-list text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out_graph` writable.
 */
enum VpStatus vp_graph_parse(const char *text, struct VpGraph **out_graph);

/**
 * Generates the canonical instance of a class.
 *
 * # Safety
 * `spec` must be readable and `out_graph` writable.
 */
enum VpStatus vp_graph_generate(const struct VpClassSpec *spec, struct VpGraph **out_graph);

/**
 * Serialises a graph to the edge-list format. Free with [`vp_string_free`].
 *
 * # Safety
 * `graph` must be a live handle and `out_text` writable.
 */
enum VpStatus vp_graph_to_text(const struct VpGraph *graph, char **out_text);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void vp_graph_free(struct VpGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t vp_graph_order(const struct VpGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t vp_graph_size(const struct VpGraph *graph);

/**
 * Number of valid 2-paths under `numbering`.
 *
 * # Safety
 * `graph` must be live, `numbering` must hold `len` values and `out_count`
 * must be writable.
 */
enum VpStatus vp_count_validity(const struct VpGraph *graph,
                                const size_t *numbering_values,
                                size_t len,
                                uint64_t *out_count);

/**
 * Total number of 2-paths, the upper limit of any count.
 *
 * # Safety
 * `graph` must be live and `out_count` writable.
 */
enum VpStatus vp_count_two_paths(const struct VpGraph *graph, uint64_t *out_count);

/**
 * # Safety
 * `graph` must be live and `out_count` writable.
 */
enum VpStatus vp_triangle_count(const struct VpGraph *graph, uint64_t *out_count);

/**
 * Triangles whose removal disconnects the graph. Needs a connected graph
 * on at least four vertices.
 *
 * # Safety
 * `graph` must be live and `out_count` writable.
 */
enum VpStatus vp_separating_triangle_count(const struct VpGraph *graph, uint64_t *out_count);

/**
 * Optimises the count. `options` may be null for defaults. The local method
 * starts from the greedy numbering and never reports optimality.
 *
 * # Safety
 * `graph` must be live, `options` null or readable, `out_result` writable.
 */
enum VpStatus vp_solve(const struct VpGraph *graph,
                       enum VpObjective goal,
                       enum VpMethod method,
                       const struct VpSolveOptions *options_ptr,
                       struct VpSolveResult **out_result);

/**
 * # Safety
 * `result` must be a live handle.
 */
uint64_t vp_result_value(const struct VpSolveResult *result);

/**
 * Whether the value is a proven optimum.
 *
 * # Safety
 * `result` must be a live handle.
 */
bool vp_result_proven(const struct VpSolveResult *result);

/**
 * # Safety
 * `result` must be a live handle.
 */
uint64_t vp_result_nodes(const struct VpSolveResult *result);

/**
 * Copies the witness numbering. `out_len` (if not null) receives the vertex
 * count even when the buffer is too small.
 *
 * # Safety
 * `result` must be live, `buf` must hold `cap` values, `out_len` null or writable.
 */
enum VpStatus vp_result_witness(const struct VpSolveResult *result,
                                size_t *buf,
                                size_t cap,
                                size_t *out_len);

/**
 * # Safety
 * `result` must be null or a handle not yet freed.
 */
void vp_result_free(struct VpSolveResult *result);

/**
 * Is there a numbering with at most (or at least) `k` valid paths?
 * On YES the witness is copied to `witness` when it is not null.
 *
 * # Safety
 * `graph` must be live, `options` null or readable, `out_decision` writable,
 * and `witness` null or able to hold `cap` values.
 */
enum VpStatus vp_decide(const struct VpGraph *graph,
                        uint64_t k,
                        enum VpDirection direction,
                        const struct VpSolveOptions *options_ptr,
                        enum VpDecision *out_decision,
                        size_t *witness,
                        size_t cap);

/**
 * Writes the constructed numbering for a class instance and its count.
 *
 * # Safety
 * `spec` must be readable, `buf` must hold `cap` values, `out_len` and
 * `out_value` null or writable.
 */
enum VpStatus vp_construct(const struct VpClassSpec *spec,
                           enum VpObjective goal,
                           size_t *buf,
                           size_t cap,
                           size_t *out_len,
                           uint64_t *out_value);

/**
 * Closed-form optimum for a class instance; `UNSUPPORTED` when none exists.
 *
 * # Safety
 * `spec` must be readable and `out_formula` writable.
 */
enum VpStatus vp_formula_value(const struct VpClassSpec *spec,
                               enum VpObjective goal,
                               struct VpFormula *out_formula);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void vp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VPATH_H */
