#ifndef ELW_CORE_STABILITY_HPP
#define ELW_CORE_STABILITY_HPP

#include <utility>
#include <vector>

#include "entanglement.hpp"
#include "gate.hpp"
#include "su3.hpp"
#include "types.hpp"

namespace elw {

// One element X (x) I + sign * I (x) X of the stability subalgebra.
struct GeneratorCombo {
  GmCoeffs x;
  int sign = -1;  // +1 or -1
};

// Basis of all pairs (X, Y) in su(3) + su(3) with (X (x) I + I (x) Y) Psi = 0,
// stored as R^16 coefficient vectors (x_1..x_8, y_1..y_8), orthonormal.
struct StabilityBasis {
  std::vector<RVec16> pairs;
  int dim() const { return static_cast<int>(pairs.size()); }
};

// Direct nullspace solve of the 18x16 real annihilation system at the
// tilde-frame initial state. One code path covers maximal / two-equal /
// generic / degenerate points alike.
StabilityBasis stability_algebra(const GateParams& p, double tol = 1e-8);

// ||(X (x) I + sign * I (x) X) Psi~(p)||; a valid generator stays below 1e-10.
double verify_generator(const GeneratorCombo& g, const GateParams& p);

// Same residual for an arbitrary (X, Y) pair.
double verify_pair(const GmCoeffs& x, const GmCoeffs& y, const GateParams& p);

struct SymmetrizedBasis {
  std::vector<GeneratorCombo> combos;  // swap-even (+) then swap-odd (-)
  int n_even = 0;
  int n_odd = 0;
};

// Reorganize a basis into swap eigenvectors Y = +-X by projecting onto the
// even/odd subspaces and re-extracting orthonormal bases. Throws
// symmetrization_incomplete if the split loses dimensions.
SymmetrizedBasis symmetrize_basis(const StabilityBasis& b);

// True iff the R^16 spans coincide at rank tolerance 1e-8.
bool span_match(const std::vector<RVec16>& a, const std::vector<RVec16>& b);

RVec16 combo_to_vec16(const GeneratorCombo& g);

// Conjugation identity J~^+ (E (x) I) J~ = E (x) Omega for a root vector E,
// with Omega = diag(e^{-i(a1+a2)}, e^{i a1}, e^{i a2}) and weights
// a1 = tau*wL + rho*wD, a2 = rho*wL + sigma*wD.
struct OmegaProbe {
  double a1 = 0.0;
  double a2 = 0.0;
  CMat3 omega;
  double residual = 0.0;
};

OmegaProbe conjugate_probe(const GateParams& p, const RootVector& r);

// The eight stability generators at a maximally entangled point from the
// invariance decomposition: X = lambda_i / 2, Y = -F~ conj(X) F~^+ (the sign
// that annihilates; used_minus_sign records which one did).
struct CounterGenerators {
  std::vector<std::pair<GmCoeffs, GmCoeffs>> pairs;
  bool used_minus_sign = true;
};

CounterGenerators maximal_counter_generators(const CMat3& f_tilde,
                                             const GateParams& p);

}  // namespace elw

#endif
