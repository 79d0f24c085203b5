#ifndef RCL_CAPI_H
#define RCL_CAPI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. Every fallible call returns one of these (or a negative
 * count); rcl_last_error() holds the message for the calling thread. */
enum rcl_status {
    RCL_OK = 0,
    RCL_INVALID_ARGUMENT = 1,
    RCL_INSTANCE_TOO_LARGE = 2,
    RCL_BUDGET_EXCEEDED = 3,
    RCL_PRECONDITION_FAILED = 4,
    RCL_NO_VALID_VERTEX = 5,
    RCL_NO_VALID_LEAF = 6,
    RCL_EXTENSION_STUCK = 7,
    RCL_RETRIES_EXHAUSTED = 8,
    RCL_STAGE_FAILURE = 9,
    RCL_PARSE_ERROR = 10,
    RCL_IO_ERROR = 11,
    RCL_UNKNOWN_ERROR = 12
};

const char* rcl_last_error(void);

/* ---- graphs ---- */

typedef struct rcl_graph rcl_graph;
typedef struct rcl_colouring rcl_colouring;

rcl_graph* rcl_graph_new(int n);
rcl_graph* rcl_graph_sample_gnp(int n, double p, uint64_t seed);
rcl_graph* rcl_graph_complete(int n);
void rcl_graph_free(rcl_graph* g);
int rcl_graph_n(const rcl_graph* g);
long long rcl_graph_edge_count(const rcl_graph* g);
int rcl_graph_add_edge(rcl_graph* g, int u, int v);
int rcl_graph_has_edge(const rcl_graph* g, int u, int v);

/* edge-list text format: header "n <count>", then "u v" lines */
rcl_graph* rcl_graph_read_file(const char* path);
int rcl_graph_write_file(const rcl_graph* g, const char* path);

/* ---- colourings ("u v R|B" lines after the header) ---- */

rcl_colouring* rcl_colouring_read_file(const char* path, rcl_graph** host_out);
int rcl_colouring_write_file(const rcl_graph* host, const rcl_colouring* c, const char* path);
void rcl_colouring_free(rcl_colouring* c);
int rcl_colouring_is_red(const rcl_colouring* c, int u, int v);

/* strategy is one of: clique, clique-odd, clique-even, random,
 * perturbed-extremal; returns NULL with error set when inapplicable */
rcl_colouring* rcl_apply_strategy(const rcl_graph* g, const char* strategy, int n, double eps,
                                  uint64_t seed);

/* ---- algorithms ---- */

/* exact C_ell search; returns 1 (found), 0 (absent), negative status */
int rcl_find_cycle_exact(const rcl_graph* g, int ell, long long budget, int* cycle_out,
                         int cycle_cap);

/* heuristic cycle finder; same return convention */
int rcl_cycle_finder(const rcl_graph* g, int ell, double p, uint64_t seed, int* cycle_out,
                     int cycle_cap);

int rcl_ramsey_number_cycle(int n);

/* ---- harness commands (CLI-facing; return process exit codes:
 *      0 success, 2 invariant violation, 3 config error) ---- */

int rcl_cmd_verify_lb(int n_lo, int n_hi, const char* out_path);
int rcl_cmd_sweep(const char* config_path, const char* out_dir, long long budget, int jobs,
                  uint64_t seed, int have_seed);
int rcl_cmd_boosters(int n, double p, int seeds, const char* out_dir);
int rcl_cmd_spectrum(int n, double p, uint64_t seed, long long budget, const char* out_path);
int rcl_cmd_plot(const char* csv_path, const char* svg_path);

#ifdef __cplusplus
}
#endif

#endif /* RCL_CAPI_H */
