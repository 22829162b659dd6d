#ifndef TREEFREE_TREEFREE_H
#define TREEFREE_TREEFREE_H

#include <stddef.h>

#if defined(TREEFREE_BUILDING_LIBRARY)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tf_graph tf_graph;
typedef struct tf_tree tf_tree;

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_NULL = 1,           /* a required pointer argument was NULL */
    TF_ERR_INPUT = 2,          /* malformed graph, pattern, config or JSON */
    TF_ERR_CONTRACT = 3,       /* precondition of the operation broken */
    TF_ERR_HYPOTHESIS = 4,     /* clique bound failed where it was assumed */
    TF_ERR_ORACLE_REFUSAL = 5, /* instance above an oracle size limit */
    TF_ERR_PARAMETER = 6,      /* parameters refused by the engine */
    TF_ERR_INVARIANT = 7,      /* internal check failed; a bug */
    TF_ERR_INTERNAL = 8
} tf_status;

/* Message for the last failing call on this thread; never NULL. */
TF_API const char* tf_last_error(void);
TF_API const char* tf_version(void);

/* Every char* returned through an out parameter is owned by the caller. */
TF_API void tf_string_free(char* s);

/* edges holds edge_count pairs (u, v). */
TF_API tf_status tf_graph_create(int n, const int* edges, size_t edge_count, tf_graph** out);
/* Generator text such as "cycle:7", "kneser:5,2" or "random_gnp:40,1,10@17". */
TF_API tf_status tf_graph_generate(const char* spec, tf_graph** out);
/* format is "dimacs" or "json". */
TF_API tf_status tf_graph_read(const char* text, const char* format, tf_graph** out);
TF_API tf_status tf_graph_write(const tf_graph* g, const char* format, char** out);
TF_API void tf_graph_free(tf_graph* g);
TF_API int tf_graph_order(const tf_graph* g);
TF_API size_t tf_graph_edge_count(const tf_graph* g);

/* "broom:L,M", "multibroom:(L1,M1),...", "path:N", "star:N". */
TF_API tf_status tf_tree_parse(const char* text, tf_tree** out);
TF_API void tf_tree_free(tf_tree* t);
TF_API int tf_tree_order(const tf_tree* t);
TF_API int tf_tree_radius(const tf_tree* t);

/* *found is 1 with {"embedding": [...]} in *json, or 0 with "null". */
TF_API tf_status tf_find_induced_tree(const tf_graph* g, const tf_tree* t, int* found, char** json);
/* {"alpha", "set", "omega", "clique"} */
TF_API tf_status tf_oracle_alpha_omega(const tf_graph* g, char** json);
/* {"value", "dual_value"} as exact rationals. */
TF_API tf_status tf_oracle_frac_chromatic(const tf_graph* g, char** json);

/* Validated run report. force selects the forced-parameter iteration. */
TF_API tf_status tf_stable_sparse(const tf_graph* g, const tf_tree* t, int k, int force, char** report);
/* weights is "uniform" or "random@<seed>". */
TF_API tf_status tf_stable_multibroom(const tf_graph* g, const tf_tree* t, int k, const char* weights,
                                      char** report);
/* {"a", "b", "sets", "ratio", "frac_chromatic", "constant", "valid"} or a witness. */
TF_API tf_status tf_frac_colouring(const tf_graph* g, const tf_tree* t, int k, int rounds, char** json);
/* {"c", "b", "exponent", "fraction", "bound", "q", "r"} */
TF_API tf_status tf_sparse_guarantee(long n, long max_degree, const tf_tree* t, int k, char** json);

/* JSON lines, one report per run, then a summary line. */
TF_API tf_status tf_run_batch(const char* config_json, int timing, char** jsonl, int* all_valid);

#ifdef __cplusplus
}
#endif

#endif
