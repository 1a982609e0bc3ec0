/* C interface to the ground-state connectivity toolkit.
 *
 * All functions return GSCON_OK or GSCON_ERR; on error a message is available
 * from gscon_last_error(). Strings returned through out-parameters are owned
 * by the caller and released with gscon_string_free(). Handles are opaque and
 * released with their matching *_free function.
 *
 * Verdict codes mirror the CLI exit codes: 0 yes/accept, 2 no/reject,
 * 3 indeterminate.
 */
#ifndef GSCON_H
#define GSCON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GSCON_OK 0
#define GSCON_ERR 1

#define GSCON_VERDICT_YES 0
#define GSCON_VERDICT_NO 2
#define GSCON_VERDICT_INDETERMINATE 3

typedef struct gscon_instance gscon_instance;
typedef struct gscon_witness gscon_witness;

const char* gscon_last_error(void);
void gscon_string_free(char* s);

/* --- instances and witnesses (JSON wire format) --- */
int gscon_instance_from_json(const char* json_text, gscon_instance** out);
int gscon_instance_to_json(const gscon_instance* inst, char** json_out);
void gscon_instance_free(gscon_instance* inst);

int gscon_witness_from_json(const char* json_text, gscon_witness** out);
int gscon_witness_to_json(const gscon_witness* w, char** json_out);
void gscon_witness_free(gscon_witness* w);

/* --- deciders --- */
int gscon_verify(const gscon_instance* inst, const gscon_witness* w, int* verdict,
                 char** report_json);

int gscon_qcma_sim(const gscon_instance* inst, const char* proof_json, int* verdict,
                   char** report_json);

/* Snap an explicit witness onto the instance's pseudo-net (honest prover). */
int gscon_qcma_make_proof(const gscon_instance* inst, const gscon_witness* w, char** proof_json);

/* net_eps <= 0 selects the resolution Delta/(8L(2(m-1)+1)). */
int gscon_pspace_search(const gscon_instance* inst, double net_eps, uint64_t max_nodes,
                        int* verdict, char** report_json);

/* --- constructions --- */
/* Exit contract: *connected is 1/0; witness_json is set only when connected
 * and emit_witness is nonzero. */
int gscon_reduce_stconn(const char* dimacs_text, const char* x_bits, const char* y_bits,
                        int emit_witness, int* connected, char** instance_json,
                        char** witness_json);

/* Staircase sequence for one Delta; row_json carries
 * {delta, m, max_overlap, final_distance}. sequence_json may be NULL. */
int gscon_staircase(double delta, char** row_json, char** sequence_json);

/* --- property checks --- */
int gscon_korth_states(const char* psi_json, const char* phi_json, int k, double tol,
                       int* is_korth);

/* Coverage test for the single-qubit net: Haar samples snapped and compared.
 * all_ok is 1 when every distance is within eps and index round trips hold. */
int gscon_net_test(double eps, int samples, uint64_t seed, int* all_ok, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* GSCON_H */
