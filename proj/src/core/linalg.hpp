#ifndef ELW_CORE_LINALG_HPP
#define ELW_CORE_LINALG_HPP

#include <vector>

#include "types.hpp"

namespace elw {

// Predicates. Tolerances are absolute on the max-norm of the defect.
bool is_hermitian(const CMat3& m, double tol);
bool is_unitary(const CMat3& m, double tol);
bool is_symmetric(const CMat3& m, double tol);
bool is_traceless(const CMat3& m, double tol);

// (A (x) B)[(i-1)*3+k, (j-1)*3+l] = A[i,j] * B[k,l]; the first factor owns
// the slow tensor index (Alice slot).
CMat9 kron(const CMat3& a, const CMat3& b);

// Trace over the second (Bob) slot: out[i,j] = sum_k rho[(i-1)*3+k, (j-1)*3+k].
CMat3 partial_trace_b(const CMat9& rho);

// Permutation with swap(phi (x) psi) = psi (x) phi; an involution.
const CMat9& swap_operator();

struct EigResult {
  RVec3 values;  // ascending
  CMat3 vectors; // orthonormal columns, vectors.col(k) pairs with values[k]
};

// Hermitian 3x3 eigendecomposition; throws not_hermitian if the defect
// exceeds 1e-10.
EigResult eigh3(const CMat3& h);

// Orthonormal basis of {v : ||Mv|| <= tol * max(1, sigma_max)} via SVD
// thresholding, absolute floor 1e-12 on the threshold.
std::vector<Eigen::VectorXd> real_nullspace(const Eigen::MatrixXd& m, double tol);

struct CubicRoot {
  double value = 0.0;
  int multiplicity = 0;
};

// All real roots of c3*x^3 + c2*x^2 + c1*x + c0 with multiplicities.
// Companion-matrix eigenvalues; complex pairs filtered at
// |Im| <= 1e-8*(1+|root|); multiple roots snapped onto critical points of
// the polynomial before clustering at relative tolerance 1e-8 (companion
// eigenvalues of a defective root split by ~sqrt(eps), wider than the
// clustering width). Throws degenerate_polynomial when c3 == 0.
std::vector<CubicRoot> cubic_real_roots(double c3, double c2, double c1, double c0);

}  // namespace elw

#endif
