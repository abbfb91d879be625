/* C interface to the grid exploration core.
 *
 * All functions returning gx_status set a thread-local message retrievable
 * via gx_last_error() on failure. Strings returned through char** must be
 * released with gx_string_free(); handles with their _free function.
 */
#ifndef GRIDROVER_H
#define GRIDROVER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gx_polygon gx_polygon;
typedef struct gx_trace gx_trace;

typedef enum {
    GX_OK = 0,
    GX_ERR_PARSE = 1,        /* malformed or invalid polygon document */
    GX_ERR_BAD_ARGUMENT = 2, /* unknown name, bad parameter, null handle */
    GX_ERR_STRATEGY = 3,     /* illegal move, missed cells, open tour, budget */
    GX_ERR_TOO_LARGE = 4,    /* instance beyond an exhaustive-search cap */
    GX_ERR_INFEASIBLE = 5,   /* generator target cannot be met */
    GX_ERR_INTERNAL = 6
} gx_status;

const char* gx_last_error(void);
void gx_string_free(char* s);

/* --- polygons ------------------------------------------------------- */

gx_status gx_polygon_parse(const char* text, gx_polygon** out);
gx_status gx_polygon_serialize(const gx_polygon* p, char** out);
void gx_polygon_free(gx_polygon* p);

typedef struct {
    int64_t cells;          /* C */
    int64_t boundary_edges; /* E */
    int64_t holes;          /* H */
    int64_t winding_cw;     /* W_cw */
    int64_t winding_ccw;    /* W_ccw */
} gx_stats;

gx_status gx_polygon_stats(const gx_polygon* p, gx_stats* out);

/* --- exploration ----------------------------------------------------- */

/* strategy: "dfs", "smartdfs", "cellexplore", or "cellexplore-sp" */
gx_status gx_run(const gx_polygon* p, const char* strategy, gx_trace** out);
int64_t gx_trace_steps(const gx_trace* t);
gx_status gx_trace_serialize(const gx_trace* t, char** out);
void gx_trace_free(gx_trace* t);

/* JSON report over comma-separated strategies; with_oracle adds S_opt and
 * the exact ratio when the instance fits under the oracle cap. */
gx_status gx_report_json(const gx_polygon* p, const char* strategies, int with_oracle,
                         const char* id, char** out);
gx_status gx_report_csv(const gx_polygon* p, const char* strategies, int with_oracle,
                        const char* id, int with_header, char** out);
/* format: "ascii" or "svg" */
gx_status gx_render(const gx_polygon* p, const gx_trace* t, const char* format, char** out);

/* --- oracle ----------------------------------------------------------- */

gx_status gx_optimal_tour(const gx_polygon* p, int64_t* steps);
gx_status gx_hamiltonian(const gx_polygon* p, int* exists);

/* --- generators -------------------------------------------------------- */

/* family / args:
 *   "corridor"  width, length
 *   "rectangle" width, height
 *   "comb"      teeth, tooth_len
 *   "random-simple" cells
 *   "random-holey"  cells, holes
 *   "fat"       rounds
 */
gx_status gx_generate(const char* family, const int64_t* args, size_t nargs, uint64_t seed,
                      gx_polygon** out);

/* kind: "holes" (param = Q) or "simple" (param = block count). Emits a JSON
 * object with the finalized polygon, the trace, and the forced ratio. */
gx_status gx_adversary(const char* kind, const char* strategy, int param, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDROVER_H */
