#include "stability.hpp"

#include <cmath>

#include "linalg.hpp"

namespace elw {

namespace {

CVec9 apply_pair(const CMat3& x, const CMat3& y, const CVec9& psi) {
  // (X (x) I + I (x) Y) on the 9-vector, row-major tensor layout
  CVec9 out = CVec9::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 3; ++k)
        acc += x(i, k) * psi(3 * k + j) + y(j, k) * psi(3 * i + k);
      out(3 * i + j) = acc;
    }
  return out;
}

// Rank-revealing orthonormal basis of the row span.
std::vector<RVec16> row_span_basis(const std::vector<RVec16>& rows, double tol) {
  if (rows.empty()) return {};
  Eigen::MatrixXd m(rows.size(), 16);
  for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  std::vector<RVec16> basis;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(1.0, sv(0))) basis.push_back(svd.matrixV().col(i));
  return basis;
}

int span_rank(const std::vector<RVec16>& rows, double tol) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd m(rows.size(), 16);
  for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(1.0, sv(0))) ++rank;
  return rank;
}

}  // namespace

StabilityBasis stability_algebra(const GateParams& p, double tol) {
  const CVec9 psi = initial_state_tilde(p);

  // 16 real unknowns (x, y); 9 complex equations -> 18 real rows.
  Eigen::MatrixXd m(18, 16);
  for (int c = 0; c < 8; ++c) {
    const CMat3& lam = gell_mann(c + 1);
    const CVec9 colx = apply_pair(lam, CMat3::Zero(), psi);
    const CVec9 coly = apply_pair(CMat3::Zero(), lam, psi);
    for (int r = 0; r < 9; ++r) {
      m(r, c) = colx(r).real();
      m(9 + r, c) = colx(r).imag();
      m(r, 8 + c) = coly(r).real();
      m(9 + r, 8 + c) = coly(r).imag();
    }
  }

  StabilityBasis basis;
  for (const Eigen::VectorXd& v : real_nullspace(m, tol))
    basis.pairs.push_back(RVec16(v));
  return basis;
}

double verify_pair(const GmCoeffs& x, const GmCoeffs& y, const GateParams& p) {
  const CVec9 psi = initial_state_tilde(p);
  return apply_pair(coeffs_to_matrix(x), coeffs_to_matrix(y), psi).norm();
}

double verify_generator(const GeneratorCombo& g, const GateParams& p) {
  return verify_pair(g.x, g.sign > 0 ? GmCoeffs(g.x) : GmCoeffs(-g.x), p);
}

RVec16 combo_to_vec16(const GeneratorCombo& g) {
  RVec16 v;
  v.head<8>() = g.x;
  v.tail<8>() = g.sign > 0 ? GmCoeffs(g.x) : GmCoeffs(-g.x);
  return v;
}

SymmetrizedBasis symmetrize_basis(const StabilityBasis& b) {
  std::vector<RVec16> even, odd;
  for (const RVec16& v : b.pairs) {
    const RVec8 x = v.head<8>(), y = v.tail<8>();
    RVec16 e, o;
    e.head<8>() = 0.5 * (x + y);
    e.tail<8>() = e.head<8>();
    o.head<8>() = 0.5 * (x - y);
    o.tail<8>() = -o.head<8>();
    if (e.norm() > 1e-12) even.push_back(e);
    if (o.norm() > 1e-12) odd.push_back(o);
  }
  const std::vector<RVec16> be = row_span_basis(even, 1e-8);
  const std::vector<RVec16> bo = row_span_basis(odd, 1e-8);
  if (static_cast<int>(be.size() + bo.size()) != b.dim())
    fail(ErrorCode::symmetrization_incomplete,
         "swap-eigenspace split does not preserve the dimension");

  SymmetrizedBasis out;
  out.n_even = static_cast<int>(be.size());
  out.n_odd = static_cast<int>(bo.size());
  for (const RVec16& v : be) {
    GeneratorCombo g;
    g.x = v.head<8>().normalized();
    g.sign = +1;
    out.combos.push_back(g);
  }
  for (const RVec16& v : bo) {
    GeneratorCombo g;
    g.x = v.head<8>().normalized();
    g.sign = -1;
    out.combos.push_back(g);
  }
  return out;
}

bool span_match(const std::vector<RVec16>& a, const std::vector<RVec16>& b) {
  const double tol = 1e-8;
  const int ra = span_rank(a, tol);
  const int rb = span_rank(b, tol);
  if (ra != rb) return false;
  std::vector<RVec16> joint(a);
  joint.insert(joint.end(), b.begin(), b.end());
  return span_rank(joint, tol) == ra;
}

OmegaProbe conjugate_probe(const GateParams& p, const RootVector& r) {
  if (r.j < 1 || r.j > 3 || r.k < 1 || r.k > 3 || r.j == r.k ||
      (r.e.cwiseAbs().sum() - 1.0) > 1e-12 ||
      std::abs(r.e(r.j - 1, r.k - 1) - 1.0) > 1e-12)
    fail(ErrorCode::not_root_vector, "conjugate_probe: not a root vector");

  OmegaProbe probe;
  probe.a1 = p.tau * r.weight_l + p.rho * r.weight_d;
  probe.a2 = p.rho * r.weight_l + p.sigma * r.weight_d;
  probe.omega = CMat3::Zero();
  probe.omega(0, 0) = std::polar(1.0, -(probe.a1 + probe.a2));
  probe.omega(1, 1) = std::polar(1.0, probe.a1);
  probe.omega(2, 2) = std::polar(1.0, probe.a2);

  const CMat9 jt = gate_tilde(p).matrix();
  const CMat9 lhs = jt.adjoint() * kron(r.e, CMat3::Identity()) * jt;
  probe.residual = (lhs - kron(r.e, probe.omega)).cwiseAbs().maxCoeff();
  return probe;
}

CounterGenerators maximal_counter_generators(const CMat3& f_tilde,
                                             const GateParams& p) {
  if (!is_unitary(f_tilde, 1e-10))
    fail(ErrorCode::not_unitary,
         "maximal_counter_generators: F~ is not unitary at 1e-10");

  CounterGenerators out;
  for (int i = 1; i <= 8; ++i) {
    const CMat3 x = 0.5 * gell_mann(i);
    const CMat3 y = -(f_tilde * x.conjugate() * f_tilde.adjoint());
    const GmCoeffs xc = matrix_to_coeffs(x);
    GmCoeffs yc = matrix_to_coeffs(y);
    if (verify_pair(xc, yc, p) > 1e-10) {
      yc = -yc;  // the opposite sign of the published decomposition
      out.used_minus_sign = false;
      if (verify_pair(xc, yc, p) > 1e-10)
        fail(ErrorCode::not_maximally_entangled,
             "counter generator fails to annihilate the state");
    }
    out.pairs.emplace_back(xc, yc);
  }
  return out;
}

}  // namespace elw
