#include "gate.hpp"

#include <cmath>

#include "linalg.hpp"

namespace elw {

namespace {

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r == kTwoPi) r = 0.0;
  return r;
}

}  // namespace

GateParams::GateParams(double tau_, double rho_, double sigma_)
    : tau(wrap_angle(tau_)), rho(wrap_angle(rho_)), sigma(wrap_angle(sigma_)) {}

double circular_distance(const GateParams& a, const GateParams& b) {
  auto dist = [](double x, double y) {
    double d = std::abs(wrap_angle(x) - wrap_angle(y));
    return std::min(d, kTwoPi - d);
  };
  return std::max({dist(a.tau, b.tau), dist(a.rho, b.rho), dist(a.sigma, b.sigma)});
}

RMat3 phase_exponents(const GateParams& p) {
  const double L[3] = {1.0, -1.0, 0.0};
  const double D[3] = {1.0, 0.0, -1.0};
  RMat3 th;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      th(j, k) = p.tau * L[j] * L[k] + p.rho * (L[j] * D[k] + D[j] * L[k]) +
                 p.sigma * D[j] * D[k];
  return th;
}

GateTilde gate_tilde(const GateParams& p) {
  const RMat3 th = phase_exponents(p);
  GateTilde g;
  g.params = p;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      g.diagonal(3 * j + k) = std::polar(1.0, th(j, k));
  return g;
}

CMat9 gate_full(const GateParams& p, const CMat3& v) {
  const CMat9 vv = kron(v, v);
  return vv * gate_tilde(p).matrix() * vv.adjoint();
}

CVec3 tilde_start() {
  const double n = 1.0 / std::sqrt(3.0);
  return CVec3(n, n, n);
}

CVec9 initial_state_tilde(const GateParams& p) {
  const CVec3 s = tilde_start();
  CVec9 start;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      start(3 * j + k) = s(j) * s(k);
  return gate_tilde(p).apply(start);
}

CVec9 initial_state_original(const GateParams& p, const CMat3& v) {
  CVec9 e11 = CVec9::Zero();
  e11(0) = 1.0;
  return gate_full(p, v) * e11;
}

}  // namespace elw
