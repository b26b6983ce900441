#ifndef ELW_CORE_GATE_HPP
#define ELW_CORE_GATE_HPP

#include "embedding.hpp"
#include "types.hpp"

namespace elw {

// The three entangler parameters, normalized into [0, 2pi) on construction.
struct GateParams {
  double tau = 0.0;
  double rho = 0.0;
  double sigma = 0.0;

  GateParams() = default;
  GateParams(double tau, double rho, double sigma);
};

// Largest circular distance over the three components.
double circular_distance(const GateParams& a, const GateParams& b);

// theta[j][k] = tau L_j L_k + rho (L_j D_k + D_j L_k) + sigma D_j D_k over the
// Cartan diagonals L = (1,-1,0), D = (1,0,-1). Symmetric with zero total sum.
RMat3 phase_exponents(const GateParams& p);

// Diagonal gate in the common eigenbasis: entry for slot (j,k) is
// e^{i theta_jk}. Unitary, determinant one, commutes with the swap.
struct GateTilde {
  GateParams params;
  CVec9 diagonal;

  CVec9 apply(const CVec9& state) const { return diagonal.cwiseProduct(state); }
  CVec9 apply_inverse(const CVec9& state) const {
    return diagonal.conjugate().cwiseProduct(state);
  }
  CMat9 matrix() const { return diagonal.asDiagonal(); }
};

GateTilde gate_tilde(const GateParams& p);

// Full-basis gate (V (x) V) J~ (V (x) V)^+; commutes with every U_j (x) U_k.
CMat9 gate_full(const GateParams& p, const CMat3& v);

// Start vector in the relabeled (tilde) coordinates: V^+|1> = (1,1,1)/sqrt(3)
// for every admissible config.
CVec3 tilde_start();

// Tilde-frame initial state J~ (V^+|1> (x) V^+|1>); all entanglement and
// stability analysis runs on this vector.
CVec9 initial_state_tilde(const GateParams& p);

// Original-frame initial state J^ (|1> (x) |1>).
CVec9 initial_state_original(const GateParams& p, const CMat3& v);

}  // namespace elw

#endif
