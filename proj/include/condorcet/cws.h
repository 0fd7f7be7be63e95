/*
 * C interface to the Condorcet winning set library.
 *
 * All functions return a cws_status. Output strings are heap-allocated JSON
 * documents; release them with cws_string_free. Opaque handles are released
 * with their matching *_free function. On any non-OK status a human-readable
 * message is available from cws_last_error() (thread-local, valid until the
 * next library call on the same thread).
 */
#ifndef CONDORCET_CWS_H
#define CONDORCET_CWS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CWS_OK = 0,
    CWS_ERR_DOMAIN = 1, /* well-formed input, operation not applicable */
    CWS_ERR_PARSE = 2   /* malformed document or arguments */
} cws_status;

typedef struct cws_profile_s cws_profile;
typedef struct cws_election_s cws_election;

/* ---- lifecycle ---- */

cws_status cws_profile_from_json(const char* json, cws_profile** out);
cws_status cws_election_from_json(const char* json, cws_election** out);
void cws_profile_free(cws_profile* p);
void cws_election_free(cws_election* e);
void cws_string_free(char* s);

cws_status cws_profile_to_json(const cws_profile* p, char** out_json);
cws_status cws_election_to_json(const cws_election* e, char** out_json);

int cws_profile_num_candidates(const cws_profile* p);
int cws_profile_num_voters(const cws_profile* p);

/* ---- ordinal operations ---- */

/* Exact Condorcet dimension by bounded subset enumeration. k_max <= 0 uses
 * the ceil(log2 m) default. */
cws_status cws_condorcet_dimension(const cws_profile* p, int k_max, char** out_json);

/* Certificate document for the given candidate set, or a document with
 * "winning": false and the first failing challenger. */
cws_status cws_check_winning_set(const cws_profile* p, const int* ids, size_t count,
                                 char** out_json);

/* Majority digraph as JSON ({"m", "arcs": [[j, i], ...]}) or DOT text. */
cws_status cws_majority_digraph_json(const cws_profile* p, char** out_json);
cws_status cws_majority_digraph_dot(const cws_profile* p, char** out_dot);

/* Greedy logarithmic dominating set of the majority tournament. Fails with
 * CWS_ERR_DOMAIN when the digraph is incomplete (even voter count ties). */
cws_status cws_greedy_dominating_set(const cws_profile* p, char** out_json);

/* ---- spatial operations ---- */

/* norm: "inf" or a rational p >= 1 such as "1", "2", "3/2", "1.5". */
cws_status cws_derive_profile(const cws_election* e, const char* norm, char** out_json);

/* Certified planar winning set of size <= 3; norm must be "1" or "inf". */
cws_status cws_planar_winning_set(const cws_election* e, const char* norm, char** out_json);

/* The fixed 3-voter, 3-candidate lower-bound instance. */
cws_status cws_lemma4_instance(char** out_json);

/* construction: "candidate-simplex" (D = m) or "voter-simplex" (D = n). */
cws_status cws_embed(const cws_profile* p, const char* construction, const char* norm,
                     char** out_json);

/* ---- experiments ---- */

/* config document: {"generator": {...}, "instances": N, "seed": S, "k_max": K} */
cws_status cws_run_survey(const char* config_json, int threads, char** out_json);
cws_status cws_hunt(const char* config_json, int target, char** out_json);

/* Message for the most recent failure on this thread; empty string if none. */
const char* cws_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CONDORCET_CWS_H */
