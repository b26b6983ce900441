#include "game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "linalg.hpp"

namespace elw {

namespace {

void require_unitary(const CMat3& u, const char* who) {
  if (!is_unitary(u, 1e-10))
    fail(ErrorCode::not_unitary, std::string(who) + ": matrix is not unitary");
}

}  // namespace

CMat3 su3_exponential(const GmCoeffs& c) {
  const EigResult eig = eigh3(coeffs_to_matrix(c));
  CMat3 phases = CMat3::Zero();
  for (int k = 0; k < 3; ++k) phases(k, k) = std::polar(1.0, eig.values(k));
  return eig.vectors * phases * eig.vectors.adjoint();
}

Game::Game(const EmbeddingConfig& cfg_, const GateParams& params_)
    : cfg(cfg_),
      params(params_),
      classical(classical_unitaries(cfg_)),
      v(eigenbasis(cfg_)),
      j_full(gate_full(params_, v)),
      psi_original(initial_state_original(params_, v)),
      psi_tilde(initial_state_tilde(params_)) {}

CVec9 final_state(const Game& g, const CMat3& ua, const CMat3& ub) {
  require_unitary(ua, "final_state");
  require_unitary(ub, "final_state");
  return g.j_full.adjoint() * (kron(ua, ub) * g.psi_original);
}

RMat3 outcome_probabilities(const CVec9& state) {
  RMat3 p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      p(i, j) = std::norm(state(3 * i + j));
  return p;
}

std::pair<double, double> expected_payoffs(const RMat3& p, const PayoffMatrix& m) {
  return {p.cwiseProduct(m.a).sum(), p.cwiseProduct(m.b).sum()};
}

CMat3 counterstrategy(const Game& g, const CMat3& v_actual,
                      const CMat3& ua_target, const CMat3& ub_target) {
  require_unitary(v_actual, "counterstrategy");
  require_unitary(ua_target, "counterstrategy");
  require_unitary(ub_target, "counterstrategy");
  const CMat3 ft = CoefficientMatrix::from_state(g.psi_original).f_tilde();
  if (!is_unitary(ft, 1e-8))
    fail(ErrorCode::not_maximally_entangled,
         "counterstrategy requires a maximally entangled initial state");
  return ub_target * ft * ua_target.transpose() * v_actual.conjugate() * ft.adjoint();
}

std::array<double, 3> strategy_probabilities(double alpha, double beta) {
  const Complex u1 = std::polar(1.0, -(alpha + beta));
  const Complex u2 = std::polar(1.0, beta - 2.0 * alpha);
  const Complex eps = std::polar(1.0, kTwoPi / 3.0);
  const double p1 = std::norm(1.0 + u1 + u2) / 9.0;
  const double p2 = std::norm(1.0 + eps * u1 + eps * eps * u2) / 9.0;
  return {p1, p2, 1.0 - p1 - p2};
}

MixedTarget MixedTarget::from_probabilities(double p1, double p2) {
  if (!(p1 >= 0.0) || !(p2 >= 0.0) || !(p1 + p2 <= 1.0 + 1e-12))
    fail(ErrorCode::out_of_domain,
         "mixed target requires p1, p2 >= 0 and p1 + p2 <= 1");
  return {p1, p2};
}

namespace {

struct Candidate {
  double x = 0.0;  // arg u1
  double y = 0.0;  // arg u2
};

bool round_trip_ok(const MixedTarget& t, double alpha, double beta) {
  const std::array<double, 3> q = strategy_probabilities(alpha, beta);
  return std::abs(q[0] - t.p1) <= 1e-8 && std::abs(q[1] - t.p2) <= 1e-8;
}

bool try_accept(const MixedTarget& t, const Candidate& c, FeasibilityResult& out) {
  const double alpha = -(c.x + c.y) / 3.0;
  const double beta = (-2.0 * c.x + c.y) / 3.0;
  if (!round_trip_ok(t, alpha, beta)) return false;
  out.feasible = true;
  out.alpha = alpha;
  out.beta = beta;
  return true;
}

}  // namespace

FeasibilityResult mixed_feasibility(const MixedTarget& t) {
  const double l = t.lambda();
  const double m = t.mu();
  const double s3 = std::sqrt(3.0);
  const double c3 = -2.0 * s3 * l;
  const double c2 = 3.0 - 2.0 * l - 4.0 * m;
  const double c1 = 2.0 * s3 * (2.0 - l);
  const double c0 = c2;

  FeasibilityResult out;
  std::vector<double> tangents;
  const bool degenerate = std::abs(l) <= 1e-9;
  if (!degenerate) {
    for (const CubicRoot& r : cubic_real_roots(c3, c2, c1, c0))
      tangents.push_back(r.value);
  } else if (std::abs(c2) > 1e-12) {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      tangents.push_back((-c1 + sq) / (2.0 * c2));
      tangents.push_back((-c1 - sq) / (2.0 * c2));
    }
  } else if (std::abs(c1) > 1e-12) {
    tangents.push_back(-c0 / c1);
  }

  const double feas_tol = 1.0 + 1e-9;
  for (double tg : tangents) {
    const double gamma = std::atan(tg);
    const double cg = std::cos(gamma);
    if (std::abs(cg) < 1e-12) {
      out.witnesses.push_back(
          {gamma, std::numeric_limits<double>::quiet_NaN(), true});
      continue;
    }
    const double cd = (l - cg * cg) / cg;
    out.witnesses.push_back({gamma, cd, false});
    if (out.feasible || std::abs(cd) > feas_tol) continue;
    const double delta = std::acos(std::clamp(cd, -1.0, 1.0));
    for (double d : {delta, -delta})
      if (try_accept(t, {d + gamma, d - gamma}, out)) break;
  }

  if (degenerate && !out.feasible) {
    // cos(gamma) = 0 branch: u2 = -u1, so p1 = 1/9 and
    // 9 p2 = 4 - 2 sqrt3 sin(arg u1).
    const double sx = (3.0 - 4.0 * m) / (2.0 * s3);
    if (std::abs(sx) <= feas_tol) {
      const double x0 = std::asin(std::clamp(sx, -1.0, 1.0));
      for (double x : {x0, kPi - x0})
        if (try_accept(t, {x, x - kPi}, out)) break;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const MixedWitness& w : out.witnesses) {
    if (w.singular) continue;
    const double dist = std::max(0.0, std::abs(w.cos_delta) - 1.0);
    if (dist < best) {
      best = dist;
      out.best_cos_delta = w.cos_delta;
    }
  }
  return out;
}

}  // namespace elw
