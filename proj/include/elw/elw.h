/* elw: three-strategy quantum-game entangler library.
 *
 * C interface over the C++ core. Complex data crosses the boundary as
 * interleaved doubles [re0, im0, re1, im1, ...]; 3x3 matrices are row-major
 * (18 doubles), 9-component states are 18 doubles, probability and payoff
 * matrices are real row-major double[9].
 *
 * Every function returns ELW_OK on success; on failure a status code is
 * returned and elw_last_error() carries a message for the calling thread.
 */
#ifndef ELW_H
#define ELW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum elw_status {
  ELW_OK = 0,
  ELW_ERR_INVALID_ARGUMENT = 1,
  ELW_ERR_INDEX_OUT_OF_RANGE = 2,
  ELW_ERR_NOT_HERMITIAN = 3,
  ELW_ERR_NOT_TRACELESS = 4,
  ELW_ERR_NOT_UNITARY = 5,
  ELW_ERR_NOT_SYMMETRIC = 6,
  ELW_ERR_NOT_MAXIMAL = 7,
  ELW_ERR_NOT_ROOT_VECTOR = 8,
  ELW_ERR_INVALID_EPSILON = 9,
  ELW_ERR_DEGENERATE = 10,
  ELW_ERR_OUT_OF_DOMAIN = 11,
  ELW_ERR_IO = 12,
  ELW_ERR_PARSE = 13,
} elw_status;

const char* elw_status_string(elw_status status);

/* Message for the most recent failure on this thread. */
const char* elw_last_error(void);

const char* elw_version(void);

/* ---- game handle ------------------------------------------------------- */

typedef struct elw_game elw_game;

typedef struct elw_config {
  double tau, rho, sigma;  /* entangler parameters, radians                */
  double phi2, phi3;       /* classical-strategy phases, radians           */
  int epsilon_minus;       /* 0: eps = e^{+2pi i/3}, 1: eps = e^{-2pi i/3} */
} elw_config;

void elw_config_default(elw_config* cfg);

elw_status elw_game_create(const elw_config* cfg, elw_game** out);
void elw_game_destroy(elw_game* game);

/* Classical strategy unitary U_k, k in 1..3. */
elw_status elw_game_classical_unitary(const elw_game* game, int k,
                                      double out_matrix[18]);

/* Common eigenbasis V of the classical unitaries. */
elw_status elw_game_eigenbasis(const elw_game* game, double out_matrix[18]);

/* Initial state in the chosen frame (tilde_frame nonzero -> relabeled). */
elw_status elw_game_initial_state(const elw_game* game, int tilde_frame,
                                  double out_state[18]);

/* Reduced density matrix of the initial state. */
elw_status elw_game_reduced_density(const elw_game* game, double out_matrix[18]);

/* ---- entanglement classification --------------------------------------- */

typedef enum elw_entanglement_kind {
  ELW_ENTANGLEMENT_MAXIMAL = 0,
  ELW_ENTANGLEMENT_TWO_EQUAL = 1,
  ELW_ENTANGLEMENT_GENERIC = 2,
} elw_entanglement_kind;

typedef struct elw_entanglement {
  elw_entanglement_kind kind;
  double eigenvalues[3];  /* ascending */
  double gaps[2];         /* relative gaps between consecutive eigenvalues */
  int singular;           /* nonzero for rank-deficient coefficient matrix */
} elw_entanglement;

elw_status elw_game_classify(const elw_game* game, double rel_tol,
                             elw_entanglement* out);

/* The 48 maximally entangling parameter triples; out holds count*3 doubles
 * (tau, rho, sigma per row). Pass count >= 48. */
elw_status elw_maximal_solutions(double* out_triples, size_t capacity,
                                 size_t* out_count);

/* ---- stability subalgebra ----------------------------------------------- */

#define ELW_STABILITY_MAX_DIM 16

typedef struct elw_stability {
  int dim;
  int n_even;  /* generators of the form X(x)I + I(x)X */
  int n_odd;   /*                        X(x)I - I(x)X */
  /* rows 0..n_even-1: even combos; then odd combos. Each row holds the 8
   * Gell-Mann coefficients of X, unit norm. */
  double combos[ELW_STABILITY_MAX_DIM][8];
} elw_stability;

elw_status elw_game_stability(const elw_game* game, double tol,
                              elw_stability* out);

/* Residual ||(X (x) I + sign I (x) X) Psi|| for X = sum c_k lambda_k. */
elw_status elw_game_generator_residual(const elw_game* game,
                                       const double coeffs[8], int sign,
                                       double* out_residual);

/* ---- game evaluation ---------------------------------------------------- */

/* exp(i sum c_k lambda_k) over the Gell-Mann basis. */
elw_status elw_strategy_from_coeffs(const double coeffs[8], double out_matrix[18]);

elw_status elw_game_final_state(const elw_game* game, const double ua[18],
                                const double ub[18], double out_state[18]);

/* P[s][s'] = |<s,s'|final>|^2, row-major double[9]. */
elw_status elw_game_outcomes(const elw_game* game, const double ua[18],
                             const double ub[18], double out_probabilities[9]);

elw_status elw_game_payoffs(const elw_game* game, const double ua[18],
                            const double ub[18], const double payoff_a[9],
                            const double payoff_b[9], double* out_a,
                            double* out_b);

/* Bob's countermove against Alice's actual move; requires maximal
 * entanglement (ELW_ERR_NOT_MAXIMAL otherwise). */
elw_status elw_game_counterstrategy(const elw_game* game,
                                    const double v_actual[18],
                                    const double ua_target[18],
                                    const double ub_target[18],
                                    double out_matrix[18]);

/* ---- mixed-strategy feasibility ----------------------------------------- */

typedef struct elw_mixed_witness {
  double gamma;
  double cos_delta;  /* NaN when singular */
  int singular;
} elw_mixed_witness;

#define ELW_MIXED_MAX_WITNESSES 4

typedef struct elw_mixed_result {
  int feasible;
  double alpha, beta;     /* valid when feasible */
  double best_cos_delta;  /* closest to [-1, 1] over the witnesses */
  int n_witnesses;
  elw_mixed_witness witnesses[ELW_MIXED_MAX_WITNESSES];
} elw_mixed_result;

/* Probabilities (p1, p2, p3) of the diagonal strategy e^{i(a L + b D)}. */
elw_status elw_strategy_probabilities(double alpha, double beta,
                                      double out_probabilities[3]);

elw_status elw_mixed_feasibility(double p1, double p2, elw_mixed_result* out);

/* ---- published-results regression --------------------------------------- */

#define ELW_VERIFY_MAX_GROUPS 8
#define ELW_VERIFY_NAME_LEN 32
#define ELW_VERIFY_DETAIL_LEN 96

typedef struct elw_verify_group {
  char name[ELW_VERIFY_NAME_LEN];
  int passed;
  int total;
  char detail[ELW_VERIFY_DETAIL_LEN];
} elw_verify_group;

typedef struct elw_verify_report {
  int ok;
  int n_groups;
  elw_verify_group groups[ELW_VERIFY_MAX_GROUPS];
} elw_verify_report;

/* Run the regression against a generator-table file, or against the embedded
 * copy when tables_path is NULL. */
elw_status elw_verify_paper(const char* tables_path, elw_verify_report* out);

/* ---- misc ---------------------------------------------------------------- */

/* Angle token: plain decimal or pi fraction ("2pi/3", "-pi/2"). */
elw_status elw_parse_angle(const char* token, double* out_radians);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* ELW_H */
