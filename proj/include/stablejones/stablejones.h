/* C interface to the stablejones library. Every call returns an sj_status;
 * on failure sj_last_error() describes the problem (per thread). Strings
 * handed out through char** parameters are owned by the caller and released
 * with sj_string_free. JSON outputs use numbers for integers that fit in 64
 * bits and decimal strings otherwise. */
#ifndef STABLEJONES_H
#define STABLEJONES_H

#include <stdint.h>

#if defined(STABLEJONES_BUILDING_LIBRARY)
#define SJ_API __attribute__((visibility("default")))
#else
#define SJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SJ_OK = 0,
  SJ_ERR_INPUT = 1,      /* malformed input or arguments */
  SJ_ERR_NOT_PLANAR = 2,
  SJ_ERR_BUDGET = 3,     /* search budget exceeded */
  SJ_ERR_THEORY = 4,     /* odd A + B, non-integer coefficient */
  SJ_ERR_ATLAS = 5,      /* pattern atlas unresolved or ambiguous */
  SJ_ERR_FIXTURE = 6,    /* fixture file missing */
  SJ_ERR_IO = 7,
  SJ_ERR_INTERNAL = 8
} sj_status;

typedef struct sj_graph sj_graph;
typedef struct sj_series sj_series;

typedef struct {
  uint64_t node_budget;  /* state-search nodes per state sum */
  int threads;
  int use_cache;         /* nonzero: read and write the result cache */
  const char* cache_dir; /* NULL: $STABLE_JONES_CACHE or ".sjcache" */
  const char* data_dir;  /* NULL: built-in fixture directory */
} sj_options;

SJ_API void sj_options_default(sj_options* opts);
/* Applies a JSON config file (NULL: none) and then the environment
 * (STABLE_JONES_CACHE, STABLE_JONES_THREADS) on top of built-in defaults.
 * *cache_dir_out is allocated; free it with sj_string_free. */
SJ_API sj_status sj_config_load(const char* path, uint64_t* node_budget, int* threads, int* max_order,
                                char** cache_dir_out);
SJ_API const char* sj_version(void);
SJ_API const char* sj_last_error(void);
/* 1 if the last cached call on this thread was served from the cache, 0 if
 * it was computed, -1 if the cache was not consulted. */
SJ_API int sj_last_cache_hit(void);
SJ_API void sj_string_free(char* s);

/* Edge list ("n <count>" header), graph6, or rotation-system JSON. */
SJ_API sj_status sj_graph_parse(const char* text, sj_graph** out);
/* A file path, or a built-in name such as "triangle", "k4", "k5-e". */
SJ_API sj_status sj_graph_load(const char* path_or_name, sj_graph** out);
SJ_API void sj_graph_free(sj_graph* g);
SJ_API int sj_graph_vertex_count(const sj_graph* g);
SJ_API int sj_graph_edge_count(const sj_graph* g);
SJ_API sj_status sj_graph_canonical_code(const sj_graph* g, char** hex_out);

SJ_API sj_status sj_phi(const sj_graph* g, int order, const sj_options* opts, sj_series** out);
SJ_API int sj_series_order(const sj_series* s);
SJ_API sj_status sj_series_coeff(const sj_series* s, int k, char** decimal_out);
SJ_API sj_status sj_series_to_json(const sj_series* s, char** json_out);
SJ_API void sj_series_free(sj_series* s);

/* One entry point per command-line subcommand, each producing JSON. */
SJ_API sj_status sj_phi_json(const sj_graph* g, int order, const sj_options* opts, char** json_out);
SJ_API sj_status sj_counts_json(const sj_graph* g, const sj_options* opts, char** json_out);
SJ_API sj_status sj_cvec_json(const sj_graph* g, int K, const sj_options* opts, char** json_out);
SJ_API sj_status sj_states_json(const sj_graph* g, int order, int trace, const sj_options* opts, char** json_out);
SJ_API sj_status sj_patterns_json(int n, const sj_options* opts, char** json_out);
SJ_API sj_status sj_enumerate_json(int edges, int irreducible, char** json_out);
SJ_API sj_status sj_dtcode_json(const sj_graph* g, char** json_out);
SJ_API sj_status sj_dtcode_plain(const sj_graph* g, char** text_out);
/* what: "theorem1", "tables", "conjecture45", "question1". order is the
 * truncation order for question1 (<= 0 picks 15) and ignored otherwise.
 * *mismatches receives the number of failed checks. */
SJ_API sj_status sj_verify_json(const char* what, int order, const sj_options* opts, char** json_out,
                                int* mismatches);
/* patterns_json: {"patterns": ["c3", "c41", ...]} with names of pattern
 * counts, or objects {"name": ..., "graph": <graph text or built-in name>}.
 * data_json: {"data": [{"graph": ..., "target": <integer or "C<k>">}, ...]}. */
SJ_API sj_status sj_fit_json(const char* patterns_json, const char* data_json, const sj_options* opts,
                             char** json_out);

#ifdef __cplusplus
}
#endif

#endif
