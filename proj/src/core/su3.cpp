#include "su3.hpp"

#include <cmath>
#include <string>

#include "linalg.hpp"

namespace elw {

namespace {

std::array<CMat3, 8> make_gell_mann() {
  const Complex i(0.0, 1.0);
  const double s3 = std::sqrt(3.0);
  std::array<CMat3, 8> l;
  l[0] << 0, 1, 0,  1, 0, 0,  0, 0, 0;
  l[1] << 0, -i, 0,  i, 0, 0,  0, 0, 0;
  l[2] << 1, 0, 0,  0, -1, 0,  0, 0, 0;
  l[3] << 0, 0, 1,  0, 0, 0,  1, 0, 0;
  l[4] << 0, 0, -i,  0, 0, 0,  i, 0, 0;
  l[5] << 0, 0, 0,  0, 0, 1,  0, 1, 0;
  l[6] << 0, 0, 0,  0, 0, -i,  0, i, 0;
  l[7] << 1 / s3, 0, 0,  0, 1 / s3, 0,  0, 0, -2 / s3;
  return l;
}

}  // namespace

const CMat3& gell_mann(int i) {
  static const std::array<CMat3, 8> lambdas = make_gell_mann();
  if (i < 1 || i > 8)
    fail(ErrorCode::index_out_of_range, "gell_mann: index " + std::to_string(i));
  return lambdas[i - 1];
}

const CMat3& cartan_lambda() {
  static const CMat3 m = (CMat3() << 1, 0, 0,  0, -1, 0,  0, 0, 0).finished();
  return m;
}

const CMat3& cartan_delta() {
  static const CMat3 m = (CMat3() << 1, 0, 0,  0, 0, 0,  0, 0, -1).finished();
  return m;
}

CMat3 coeffs_to_matrix(const GmCoeffs& c) {
  CMat3 h = CMat3::Zero();
  for (int i = 0; i < 8; ++i) h += c(i) * gell_mann(i + 1);
  return h;
}

GmCoeffs matrix_to_coeffs(const CMat3& h) {
  if (!is_hermitian(h, 1e-10))
    fail(ErrorCode::not_hermitian, "matrix_to_coeffs: matrix is not Hermitian");
  if (!is_traceless(h, 1e-10))
    fail(ErrorCode::not_traceless, "matrix_to_coeffs: matrix is not traceless");
  GmCoeffs c;
  for (int i = 0; i < 8; ++i) c(i) = 0.5 * (gell_mann(i + 1) * h).trace().real();
  return c;
}

const std::array<RootVector, 6>& root_vectors() {
  static const std::array<RootVector, 6> roots = [] {
    std::array<RootVector, 6> r;
    int n = 0;
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        if (j == k) continue;
        RootVector rv;
        rv.j = j;
        rv.k = k;
        rv.e = CMat3::Zero();
        rv.e(j - 1, k - 1) = 1.0;
        rv.weight_l = (cartan_lambda()(j - 1, j - 1) - cartan_lambda()(k - 1, k - 1)).real();
        rv.weight_d = (cartan_delta()(j - 1, j - 1) - cartan_delta()(k - 1, k - 1)).real();
        r[n++] = rv;
      }
    }
    return r;
  }();
  return roots;
}

}  // namespace elw
