#ifndef TIGHTPATH_TIGHTPATH_H
#define TIGHTPATH_TIGHTPATH_H

/* C interface to the tightpath library. Every call returns a tp_status;
 * on failure tp_last_error() describes it (thread-local, valid until the next
 * call on the same thread). Strings returned through char** are owned by the
 * caller and released with tp_string_free. JSON is used for structured input
 * and output. */

#include <stddef.h>
#include <stdint.h>

#if defined(TP_BUILDING_LIBRARY)
#define TP_API __attribute__((visibility("default")))
#else
#define TP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
    TP_OK = 0,
    TP_INVALID_ARGUMENT = 1,
    TP_HYPOTHESIS = 2, /* a desk-scale hypothesis failed; the report says which */
    TP_HARD_FAULT = 3, /* an outcome the construction rules out: a library bug */
    TP_IO = 4,
    TP_PARSE = 5,
    TP_INTERNAL = 6
} tp_status;

typedef struct tp_graph tp_graph;
typedef struct tp_hypergraph tp_hypergraph;
typedef struct tp_colouring tp_colouring;
typedef struct tp_instance tp_instance;

TP_API const char* tp_last_error(void);
TP_API const char* tp_status_name(tp_status status);
TP_API const char* tp_version(void);
TP_API void tp_string_free(char* text);

/* Graphs */
TP_API tp_status tp_graph_sample_expander(uint64_t n, uint64_t a, uint64_t b, uint64_t seed, tp_graph** out);
TP_API tp_status tp_graph_cycle_power(uint64_t n, uint64_t r, tp_graph** out);
TP_API tp_status tp_graph_load(const char* path, tp_graph** out);
TP_API tp_status tp_graph_save(const tp_graph* g, const char* path);
TP_API tp_status tp_graph_info(const tp_graph* g, uint64_t* vertices, uint64_t* edges, uint64_t* max_degree);
TP_API tp_status tp_graph_power(const tp_graph* g, uint64_t k, tp_graph** out);
TP_API tp_status tp_graph_blow_up(const tp_graph* g, uint64_t t, tp_graph** out);
TP_API void tp_graph_free(tp_graph* g);

/* Expansion certificate. eps is a rational such as "1/5"; mode is
 * "spectral" or "sampled". *passed is set either way. */
TP_API tp_status tp_certify_p1(const tp_graph* g, const char* eps, uint64_t n, const char* mode, uint64_t trials,
                               uint64_t seed, int* passed, char** report_json);

/* Host instance: G with its parameters, the k-th power, blow-up and the
 * triangle hypergraph H. params_json uses the keys of the params block of an
 * experiment config; NULL keeps every default. */
TP_API tp_status tp_instance_create(const tp_graph* g, const char* params_json, tp_instance** out);
/* Borrowed; lives as long as the instance. */
TP_API const tp_hypergraph* tp_instance_hypergraph(const tp_instance* inst);
TP_API void tp_instance_free(tp_instance* inst);

/* Hypergraphs */
TP_API tp_status tp_hypergraph_load(const char* path, tp_hypergraph** out);
TP_API tp_status tp_hypergraph_save(const tp_hypergraph* h, const char* path);
TP_API tp_status tp_hypergraph_info(const tp_hypergraph* h, uint64_t* vertices, uint64_t* triples);
TP_API void tp_hypergraph_free(tp_hypergraph* h);

/* Colourings. colourer_json: {"kind": "uniform_random" | "all_blue" |
 * "all_red" | "connector_killer" | "cluster_mixer", "p_blue": x,
 * "flip_budget": n}. info_json (may be NULL) receives colourer statistics. */
TP_API tp_status tp_colour(const tp_instance* inst, const char* colourer_json, uint64_t seed, tp_colouring** out,
                           char** info_json);
TP_API tp_status tp_colouring_load(const tp_hypergraph* h, const char* path, tp_colouring** out);
TP_API tp_status tp_colouring_save(const tp_hypergraph* h, const tp_colouring* c, const char* path);
TP_API tp_status tp_colouring_swap(tp_colouring* c);
TP_API void tp_colouring_free(tp_colouring* c);

/* Pipeline. Returns TP_OK with a path, TP_HYPOTHESIS when the run report
 * names a failed hypothesis, TP_HARD_FAULT on a hard fault. The report is
 * filled for TP_OK and TP_HYPOTHESIS. */
TP_API tp_status tp_extract(const tp_instance* inst, const tp_colouring* c, char** report_json);

/* Tight path files: "tight_path <R|B> <count>" then the vertex ids. */
TP_API tp_status tp_path_save(const char* path, const uint32_t* vertices, size_t count, char colour);

/* Re-checks a path file against H and a colouring. *ok is 1 when it passes;
 * verdict_json (may be NULL) gives the first violation. */
TP_API tp_status tp_validate_path(const tp_hypergraph* h, const tp_colouring* c, const char* path_file, int* ok,
                                  char** verdict_json);

/* Config-driven batch. *hard_faults counts trials that raised hard faults. */
TP_API tp_status tp_run_experiment(const char* config_json, char** report_json, uint64_t* hard_faults);

#ifdef __cplusplus
}
#endif

#endif
