#ifndef ELW_CORE_EMBEDDING_HPP
#define ELW_CORE_EMBEDDING_HPP

#include "types.hpp"

namespace elw {

// Which primitive cube root of unity enters the classical-strategy matrices.
enum class Epsilon { plus, minus };  // e^{+2pi i/3} / e^{-2pi i/3}

Complex epsilon_value(Epsilon e);

struct EmbeddingConfig {
  double phi2 = 0.0;
  double phi3 = 0.0;
  Epsilon epsilon = Epsilon::plus;

  static EmbeddingConfig defaults() { return {}; }
  // Checked constructor for a raw cube root; throws invalid_epsilon unless
  // eps^3 = 1 and eps != 1.
  static EmbeddingConfig from_raw(double phi2, double phi3, Complex eps);
};

struct ClassicalTriple {
  CMat3 u1, u2, u3;
  const CMat3& u(int k) const;  // 1-based
};

// The commuting strategy unitaries with U_k|1> = e^{i phi_k}|k> (phi_1 = 0).
ClassicalTriple classical_unitaries(const EmbeddingConfig& cfg);

// Common eigenbasis; column k is the joint eigenvector paired with row k of
// eigenvalue_table. Unitary by construction.
CMat3 eigenbasis(const EmbeddingConfig& cfg);

// Row k = eigenvalues of (U_1, U_2, U_3) on eigenvector k:
//   (1, 1, eps), (1, eps, 1), (1, eps^2, eps^2).
CMat3 eigenvalue_table(const EmbeddingConfig& cfg);

}  // namespace elw

#endif
