#ifndef ELW_CORE_GAME_HPP
#define ELW_CORE_GAME_HPP

#include <array>
#include <vector>

#include "embedding.hpp"
#include "entanglement.hpp"
#include "gate.hpp"
#include "su3.hpp"
#include "types.hpp"

namespace elw {

// exp(i sum_k c_k lambda_k); every strategy unitary used by the CLI and the
// demos is built through this map.
CMat3 su3_exponential(const GmCoeffs& c);

struct PayoffMatrix {
  RMat3 a;  // row player
  RMat3 b;  // column player
  bool symmetric_game(double tol = 0.0) const {
    return (b - a.transpose()).cwiseAbs().maxCoeff() <= tol;
  }
};

// Precomputed per-configuration data shared by the game operations.
struct Game {
  EmbeddingConfig cfg;
  GateParams params;
  ClassicalTriple classical;
  CMat3 v;
  CMat9 j_full;
  CVec9 psi_original;  // J^ (|1> (x) |1>)
  CVec9 psi_tilde;     // J~ (V^+|1> (x) V^+|1>)

  Game(const EmbeddingConfig& cfg, const GateParams& params);
};

// J^+ (U_A (x) U_B) J (|1> (x) |1>); throws not_unitary at 1e-10.
CVec9 final_state(const Game& g, const CMat3& ua, const CMat3& ub);

// P[s,s'] = |<s,s'|state>|^2.
RMat3 outcome_probabilities(const CVec9& state);

std::pair<double, double> expected_payoffs(const RMat3& p, const PayoffMatrix& m);

// Bob's countermove W = U_B F~ U_A^T conj(V) F~^+ reproducing the target
// outcome distribution against Alice's actual move V. Requires maximal
// entanglement (F~ unitary at 1e-8), else not_maximally_entangled.
CMat3 counterstrategy(const Game& g, const CMat3& v_actual,
                      const CMat3& ua_target, const CMat3& ub_target);

// Outcome probabilities of the diagonal-Cartan strategy e^{i(al*L + be*D)}:
// p1 = |1+u1+u2|^2/9, p2 = |1+e u1+e^2 u2|^2/9, p3 = 1-p1-p2 with
// u1 = e^{-i(al+be)}, u2 = e^{i(be-2al)}, e = e^{2pi i/3}.
std::array<double, 3> strategy_probabilities(double alpha, double beta);

// Target classical mixture (p1, p2) with the derived Cartan parameters.
struct MixedTarget {
  double p1 = 0.0;
  double p2 = 0.0;

  static MixedTarget from_probabilities(double p1, double p2);
  double lambda() const { return (9.0 * p1 - 1.0) / 4.0; }
  double mu() const { return (9.0 * p2 - 1.0) / 4.0; }
};

struct MixedWitness {
  double gamma = 0.0;
  double cos_delta = 0.0;
  bool singular = false;  // cos(gamma) ~ 0, cos_delta recovery skipped
};

struct FeasibilityResult {
  bool feasible = false;
  double alpha = 0.0;  // valid when feasible
  double beta = 0.0;
  std::vector<MixedWitness> witnesses;  // one per candidate root
  double best_cos_delta = 0.0;          // closest to [-1, 1] over witnesses
};

// Decide whether (p1, p2) is realizable by a single diagonal-Cartan strategy.
// Solves the tg(gamma) cubic
//   (3-2l-4m) + 2 sqrt3 (2-l) t + (3-2l-4m) t^2 - 2 sqrt3 l t^3 = 0
// (the published constant/quadratic coefficients read 3-2l-m; eliminating
// cos(delta) between the two defining equations gives 3-2l-4m, which is the
// version that reproduces the published -1.12041 witness), recovers
// cos(delta) = (l - cos^2 g)/cos g per root, and reconstructs (alpha, beta)
// with a round-trip check at 1e-8.
FeasibilityResult mixed_feasibility(const MixedTarget& t);

}  // namespace elw

#endif
