#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace elw {

bool is_hermitian(const CMat3& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const CMat3& m, double tol) {
  return (m * m.adjoint() - CMat3::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_symmetric(const CMat3& m, double tol) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

bool is_traceless(const CMat3& m, double tol) {
  return std::abs(m.trace()) <= tol;
}

CMat9 kron(const CMat3& a, const CMat3& b) {
  CMat9 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
  return out;
}

CMat3 partial_trace_b(const CMat9& rho) {
  CMat3 out = CMat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out(i, j) += rho(3 * i + k, 3 * j + k);
  return out;
}

const CMat9& swap_operator() {
  static const CMat9 swap = [] {
    CMat9 s = CMat9::Zero();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        s(3 * k + i, 3 * i + k) = 1.0;
    return s;
  }();
  return swap;
}

EigResult eigh3(const CMat3& h) {
  if (!is_hermitian(h, 1e-10))
    fail(ErrorCode::not_hermitian, "eigh3: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat3> solver(0.5 * (h + h.adjoint().eval()));
  EigResult res;
  res.values = solver.eigenvalues();
  res.vectors = solver.eigenvectors();
  return res;
}

std::vector<Eigen::VectorXd> real_nullspace(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = std::max(tol * std::max(1.0, smax), 1e-12);
  std::vector<Eigen::VectorXd> basis;
  const Eigen::Index n = m.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i >= sv.size() || sv(i) <= thr) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

std::vector<CubicRoot> cubic_real_roots(double c3, double c2, double c1, double c0) {
  if (c3 == 0.0)
    fail(ErrorCode::degenerate_polynomial, "cubic_real_roots: leading coefficient is zero");

  const double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  Eigen::Matrix3d companion;
  companion << 0, 0, -d,
               1, 0, -c,
               0, 1, -b;
  Eigen::EigenSolver<Eigen::Matrix3d> solver(companion);

  const double scale = 1.0 + std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  auto poly = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };

  std::vector<double> roots;
  for (int i = 0; i < 3; ++i) {
    const Complex ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) <= 1e-8 * (1.0 + std::abs(ev))) roots.push_back(ev.real());
  }

  // Critical points of the polynomial that are themselves roots mark exact
  // multiple roots; snap nearby companion eigenvalues onto them.
  const double qa = 3 * c3, qb = 2 * c2, qc = c1;
  const double disc = qb * qb - 4 * qa * qc;
  if (disc >= 0) {
    const double sq = std::sqrt(disc);
    for (double s : {(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)}) {
      if (std::abs(poly(s)) > 1e-8 * scale) continue;
      for (double& r : roots)
        if (std::abs(r - s) <= 1e-5 * (1.0 + std::abs(s))) r = s;
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<CubicRoot> out;
  for (double r : roots) {
    if (!out.empty() && std::abs(r - out.back().value) <= 1e-8 * (1.0 + std::abs(r)))
      ++out.back().multiplicity;
    else
      out.push_back({r, 1});
  }
  return out;
}

}  // namespace elw
