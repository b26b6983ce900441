#ifndef ELW_CORE_ENTANGLEMENT_HPP
#define ELW_CORE_ENTANGLEMENT_HPP

#include <vector>

#include "gate.hpp"
#include "types.hpp"

namespace elw {

// Symmetric coefficient matrix of a two-party state, Psi = sum F_ij |i>|j>,
// F_ij = state[(i-1)*3 + j]. Throws not_symmetric for states that no
// swap-symmetric gate can produce.
struct CoefficientMatrix {
  CMat3 f;

  static CoefficientMatrix from_state(const CVec9& state, double tol = 1e-12);
  // sqrt(3) * F; unitary exactly when the state is maximally entangled.
  CMat3 f_tilde() const { return std::sqrt(3.0) * f; }
};

// Reduced density matrix F F^+ of the tilde-frame initial state, evaluated
// from the closed-form phase sums. Diagonal is exactly (1/3, 1/3, 1/3).
CMat3 reduced_density(const GateParams& p);

// Off-diagonal phase sums a, b, c of 9 * reduced_density: entries (1,2),
// (1,3), (2,3).
struct OffDiagTriple {
  Complex a, b, c;
};

OffDiagTriple offdiag_triple(const GateParams& p);

enum class EntanglementKind { maximal, two_equal, generic };

struct EntanglementClass {
  EntanglementKind kind = EntanglementKind::generic;
  RVec3 eigenvalues;       // ascending
  double gaps[2] = {0, 0}; // relative gaps between consecutive eigenvalues
  bool singular = false;   // rank-deficient F (product-like state)
};

const char* to_string(EntanglementKind k);

// Multiplicity pattern of the reduced-density eigenvalues: maximal when all
// three sit at 1/3, two_equal when exactly one pair coincides, generic
// otherwise. rel_tol is the gap threshold.
EntanglementClass classify(const GateParams& p, double rel_tol = 1e-8);

// The 48 parameter triples of the six maximal-entanglement families,
// de-duplicated by circular distance.
const std::vector<GateParams>& maximal_solutions();

struct DoubleRootResult {
  bool holds = false;
  double lambda0 = 0.0;    // the double root of the off-diagonal cubic
  double third_root = 0.0; // always -2 * lambda0 when holds
};

// Double-root criterion for lambda^3 - (|a|^2+|b|^2+|c|^2) lambda - 2 Re(a b~ c):
// holds iff |a| = |b| = |c| and arg a - arg b + arg c in {0, pi} (mod 2pi);
// the root signs follow sign(Re(a conj(b) c)).
DoubleRootResult double_root_condition(const OffDiagTriple& t, double tol = 1e-8);

// The seven single-nonzero-parameter points with two equal eigenvalues:
// rho in {pi/3, pi, 5pi/3}, tau in {pi/2, 3pi/2}, sigma in {pi/2, 3pi/2}.
const std::vector<GateParams>& two_equal_special_solutions();

}  // namespace elw

#endif
