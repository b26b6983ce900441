#ifndef ELW_CORE_SU3_HPP
#define ELW_CORE_SU3_HPP

#include <array>

#include "types.hpp"

namespace elw {

// Standard Gell-Mann matrix lambda_i, i in 1..8, Tr(lambda_i lambda_j) = 2 delta_ij.
const CMat3& gell_mann(int i);

// Cartan pair entering the gate exponent: Lambda = diag(1,-1,0) = lambda_3,
// Delta = diag(1,0,-1) = (lambda_3 + sqrt(3) lambda_8)/2. Both satisfy A^3 = A.
const CMat3& cartan_lambda();
const CMat3& cartan_delta();

// Real coefficients over lambda_1..lambda_8, representing the Hermitian
// traceless matrix sum_i c_i lambda_i.
using GmCoeffs = RVec8;

CMat3 coeffs_to_matrix(const GmCoeffs& c);

// Inverse map, c_i = Tr(lambda_i H)/2. Throws not_hermitian / not_traceless
// if H is outside the su(3) span at 1e-10.
GmCoeffs matrix_to_coeffs(const CMat3& h);

// Ladder matrix unit E_jk (j != k) with its Cartan weights:
// [Lambda, E] = weight_l * E and [Delta, E] = weight_d * E.
struct RootVector {
  int j = 0, k = 0;   // 1-based
  CMat3 e;
  double weight_l = 0.0;
  double weight_d = 0.0;
};

const std::array<RootVector, 6>& root_vectors();

}  // namespace elw

#endif
