#include "entanglement.hpp"

#include <cmath>

#include "linalg.hpp"

namespace elw {

CoefficientMatrix CoefficientMatrix::from_state(const CVec9& state, double tol) {
  if (std::abs(state.norm() - 1.0) > 1e-10)
    fail(ErrorCode::invalid_argument, "coefficient matrix requires a normalized state");
  CMat3 f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f(i, j) = state(3 * i + j);
  if (!is_symmetric(f, tol))
    fail(ErrorCode::not_symmetric,
         "state was not produced by a swap-symmetric gate");
  return {f};
}

OffDiagTriple offdiag_triple(const GateParams& p) {
  const double t = p.tau, r = p.rho, s = p.sigma;
  auto e = [](double x) { return std::polar(1.0, x); };
  OffDiagTriple out;
  out.a = e(3 * r + s + 2 * t) + e(-(r + 2 * t)) + e(-(2 * r + s));
  out.b = e(3 * r + 2 * s + t) + e(-(2 * r + t)) + e(-(r + 2 * s));
  out.c = e(s - t) + e(-(r - t)) + e(r - s);
  return out;
}

CMat3 reduced_density(const GateParams& p) {
  const OffDiagTriple t = offdiag_triple(p);
  CMat3 rho;
  rho << 3.0, t.a, t.b,
         std::conj(t.a), 3.0, t.c,
         std::conj(t.b), std::conj(t.c), 3.0;
  return rho / 9.0;
}

const char* to_string(EntanglementKind k) {
  switch (k) {
    case EntanglementKind::maximal: return "Maximal";
    case EntanglementKind::two_equal: return "TwoEqual";
    case EntanglementKind::generic: return "Generic";
  }
  return "?";
}

EntanglementClass classify(const GateParams& p, double rel_tol) {
  const EigResult eig = eigh3(reduced_density(p));
  EntanglementClass out;
  out.eigenvalues = eig.values;
  const double scale = std::max(1.0, std::abs(eig.values(2)));
  out.gaps[0] = (eig.values(1) - eig.values(0)) / scale;
  out.gaps[1] = (eig.values(2) - eig.values(1)) / scale;
  out.singular = eig.values(0) <= 1e-10;

  const double off = std::max(std::abs(eig.values(0) - 1.0 / 3.0),
                              std::abs(eig.values(2) - 1.0 / 3.0));
  if (off <= rel_tol)
    out.kind = EntanglementKind::maximal;
  else if (out.gaps[0] <= rel_tol || out.gaps[1] <= rel_tol)
    out.kind = EntanglementKind::two_equal;
  else
    out.kind = EntanglementKind::generic;
  return out;
}

const std::vector<GateParams>& maximal_solutions() {
  static const std::vector<GateParams> sols = [] {
    const double f = kTwoPi / 3.0;
    const double ninth = kTwoPi / 9.0;
    // sigma grids of the "-2pi/3" and "+2pi/3" families as printed
    std::vector<double> minus, plus;
    for (int k = 3; k <= 9; ++k) minus.push_back(k * ninth);
    for (int k = 0; k <= 8; ++k) plus.push_back(k * ninth);

    std::vector<GateParams> all;
    for (double s : minus) all.emplace_back(s - f, s - f, s);  // tau=rho=sigma-2pi/3
    for (double s : plus) all.emplace_back(s + f, s + f, s);   // tau=rho=sigma+2pi/3
    for (double s : minus) all.emplace_back(s - f, s, s);      // tau=sigma-2pi/3, rho=sigma
    for (double s : plus) all.emplace_back(s + f, s, s);       // tau=sigma+2pi/3, rho=sigma
    for (double s : minus) all.emplace_back(s, s - f, s);      // rho=sigma-2pi/3, tau=sigma
    for (double s : plus) all.emplace_back(s, s + f, s);       // rho=sigma+2pi/3, tau=sigma

    std::vector<GateParams> uniq;
    for (const GateParams& p : all) {
      bool dup = false;
      for (const GateParams& q : uniq)
        if (circular_distance(p, q) < 1e-9) { dup = true; break; }
      if (!dup) uniq.push_back(p);
    }
    return uniq;
  }();
  return sols;
}

DoubleRootResult double_root_condition(const OffDiagTriple& t, double tol) {
  DoubleRootResult out;
  const double ma = std::abs(t.a), mb = std::abs(t.b), mc = std::abs(t.c);
  const double m = std::max({ma, mb, mc});
  if (m <= tol) return out;  // a=b=c=0: triple root, maximal upstream

  if (std::abs(ma - mb) > tol * (1 + m) || std::abs(ma - mc) > tol * (1 + m))
    return out;
  const double phase = std::arg(t.a) - std::arg(t.b) + std::arg(t.c);
  const double c = std::cos(phase);  // +-1 when the phase condition holds
  if (std::abs(std::abs(c) - 1.0) > tol) return out;

  out.holds = true;
  const double re = (t.a * std::conj(t.b) * t.c).real();
  out.lambda0 = re >= 0 ? -ma : ma;
  out.third_root = -2.0 * out.lambda0;
  return out;
}

const std::vector<GateParams>& two_equal_special_solutions() {
  static const std::vector<GateParams> sols = {
      {0, kPi / 3, 0}, {0, kPi, 0}, {0, 5 * kPi / 3, 0},
      {kPi / 2, 0, 0}, {3 * kPi / 2, 0, 0},
      {0, 0, kPi / 2}, {0, 0, 3 * kPi / 2},
  };
  return sols;
}

}  // namespace elw
