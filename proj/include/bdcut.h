/*
 * bdcut — bounded-degree cut solver.
 *
 * C interface over the solver core: opaque handles, status-code returns,
 * explicit destroy functions. All vertex indices are 0-based here; the text
 * format handled by bdcut_instance_parse/render is 1-based.
 */
#ifndef BDCUT_H
#define BDCUT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bdcut_instance bdcut_instance;
typedef struct bdcut_verdict bdcut_verdict;
typedef struct bdcut_cut_list bdcut_cut_list;
typedef struct bdcut_rng bdcut_rng;

typedef enum bdcut_status {
    BDCUT_OK = 0,
    BDCUT_ERR_INVALID_ARGUMENT = 1,
    BDCUT_ERR_PARSE = 2,
    BDCUT_ERR_TOO_LARGE = 3,
    BDCUT_ERR_NO_WITNESS = 4,
    BDCUT_ERR_INTERNAL = 5
} bdcut_status;

typedef struct bdcut_solve_stats {
    uint64_t stage1_guesses;
    uint64_t max_stage2_guesses;
    uint64_t easy_emitted;
    uint64_t easy_tested;
    uint64_t stage1_bound;  /* 2^(12k), saturated */
    uint64_t stage2_bound;  /* 2^(6k), saturated */
    uint64_t total_bound;   /* 2^(18k), saturated */
} bdcut_solve_stats;

const char* bdcut_version(void);
const char* bdcut_status_str(bdcut_status status);

/* ---- instances ---- */

/* edge_endpoints holds 2*m vertex indices (u0, v0, u1, v1, ...). cap_a and
 * cap_b are arrays of n entries or NULL for "unconstrained" (= m). */
bdcut_status bdcut_instance_create(uint32_t n, const uint32_t* edge_endpoints, size_t m,
                                   const uint32_t* a, size_t a_len,
                                   const uint32_t* b, size_t b_len,
                                   const uint32_t* cap_a, const uint32_t* cap_b,
                                   uint32_t k, bdcut_instance** out);

/* Parses the line-oriented instance format. On parse failure a description
 * including the line number is written into errbuf (if non-NULL). */
bdcut_status bdcut_instance_parse(const char* text, bdcut_instance** out,
                                  char* errbuf, size_t errbuf_len);

/* Canonical text for the instance; free the string with bdcut_string_free. */
bdcut_status bdcut_instance_render(const bdcut_instance* inst, char** out);

void bdcut_instance_destroy(bdcut_instance* inst);
void bdcut_string_free(char* s);

uint32_t bdcut_instance_n(const bdcut_instance* inst);
uint32_t bdcut_instance_m(const bdcut_instance* inst);
uint32_t bdcut_instance_k(const bdcut_instance* inst);

/* Borrowed views of the terminal sets; valid while the instance lives. */
bdcut_status bdcut_instance_terminals(const bdcut_instance* inst,
                                      const uint32_t** a, size_t* a_len,
                                      const uint32_t** b, size_t* b_len);

/* ---- random instances ---- */

bdcut_status bdcut_rng_create(uint64_t seed, bdcut_rng** out);
void bdcut_rng_destroy(bdcut_rng* rng);

/* Draws the next instance from the stream. Fixed seed, fixed draws: fixed
 * instances, on every platform. */
bdcut_status bdcut_instance_random(bdcut_rng* rng, uint32_t max_n, uint32_t max_m,
                                   uint32_t max_k, uint32_t max_terminals,
                                   bdcut_instance** out);

/* ---- solving ---- */

bdcut_status bdcut_solve(const bdcut_instance* inst, bdcut_verdict** out);
bdcut_status bdcut_solve_with_stats(const bdcut_instance* inst, bdcut_verdict** out,
                                    bdcut_solve_stats* stats);

/* Exhaustive reference solver; BDCUT_ERR_TOO_LARGE beyond its size guard. */
bdcut_status bdcut_oracle_solve(const bdcut_instance* inst, bdcut_verdict** out);

void bdcut_verdict_destroy(bdcut_verdict* verdict);
int bdcut_verdict_feasible(const bdcut_verdict* verdict);

/* Borrowed views of the witness sides; BDCUT_ERR_NO_WITNESS when infeasible. */
bdcut_status bdcut_verdict_witness(const bdcut_verdict* verdict,
                                   const uint32_t** v1, size_t* v1_len,
                                   const uint32_t** v2, size_t* v2_len,
                                   uint32_t* cut_size);

/* Checks a candidate source side against the full solution definition. */
bdcut_status bdcut_verify(const bdcut_instance* inst, const uint32_t* v1, size_t v1_len,
                          int* ok);

/* ---- important cuts ---- */

/* All important (s,t)-cuts of size at most k on the instance's graph,
 * deduplicated, in canonical order. */
bdcut_status bdcut_important_cuts(const bdcut_instance* inst,
                                  const uint32_t* s, size_t s_len,
                                  const uint32_t* t, size_t t_len,
                                  uint32_t k, bdcut_cut_list** out);

size_t bdcut_cut_list_count(const bdcut_cut_list* list);
bdcut_status bdcut_cut_list_get(const bdcut_cut_list* list, size_t index,
                                const uint32_t** v1, size_t* v1_len, uint32_t* cut_size);
void bdcut_cut_list_destroy(bdcut_cut_list* list);

#ifdef __cplusplus
}
#endif

#endif /* BDCUT_H */
