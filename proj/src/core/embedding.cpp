#include "embedding.hpp"

#include <cmath>

namespace elw {

Complex epsilon_value(Epsilon e) {
  const double s = e == Epsilon::plus ? 1.0 : -1.0;
  return std::polar(1.0, s * kTwoPi / 3.0);
}

EmbeddingConfig EmbeddingConfig::from_raw(double phi2, double phi3, Complex eps) {
  if (std::abs(eps * eps * eps - 1.0) > 1e-12 || std::abs(eps - 1.0) < 1e-12)
    fail(ErrorCode::invalid_epsilon,
         "epsilon must be a primitive cube root of unity");
  EmbeddingConfig cfg;
  cfg.phi2 = phi2;
  cfg.phi3 = phi3;
  cfg.epsilon = eps.imag() > 0 ? Epsilon::plus : Epsilon::minus;
  return cfg;
}

const CMat3& ClassicalTriple::u(int k) const {
  switch (k) {
    case 1: return u1;
    case 2: return u2;
    case 3: return u3;
  }
  fail(ErrorCode::index_out_of_range, "classical unitary index must be 1..3");
}

ClassicalTriple classical_unitaries(const EmbeddingConfig& cfg) {
  const Complex eps = epsilon_value(cfg.epsilon);
  const Complex e2 = std::polar(1.0, cfg.phi2);
  const Complex e3 = std::polar(1.0, cfg.phi3);

  ClassicalTriple t;
  t.u1 = CMat3::Identity();
  t.u2 = CMat3::Zero();
  t.u2(0, 2) = eps * std::conj(e3);
  t.u2(1, 0) = e2;
  t.u2(2, 1) = std::conj(eps) * e3 * std::conj(e2);
  t.u3 = CMat3::Zero();
  t.u3(0, 1) = eps * std::conj(e2);
  t.u3(1, 2) = std::conj(eps) * e2 * std::conj(e3);
  t.u3(2, 0) = e3;
  return t;
}

CMat3 eigenbasis(const EmbeddingConfig& cfg) {
  const Complex eps = epsilon_value(cfg.epsilon);
  const Complex ec = std::conj(eps);
  const Complex e2 = std::polar(1.0, cfg.phi2);
  const Complex e3 = std::polar(1.0, cfg.phi3);
  const double n = 1.0 / std::sqrt(3.0);

  CMat3 v;
  v << 1.0, 1.0, 1.0,
       e2, ec * e2, eps * e2,
       ec * e3, e3, eps * e3;
  return n * v;
}

CMat3 eigenvalue_table(const EmbeddingConfig& cfg) {
  const Complex eps = epsilon_value(cfg.epsilon);
  CMat3 t;
  t << 1.0, 1.0, eps,
       1.0, eps, 1.0,
       1.0, eps * eps, eps * eps;
  return t;
}

}  // namespace elw
