#include "doctest.h"

#include "paper_tables.hpp"
#include "stability.hpp"
#include "test_util.hpp"

using namespace elw;
using elw_test::SplitMix64;

TEST_SUITE_BEGIN("stability");

namespace {

GeneratorCombo combo_from(std::initializer_list<std::pair<int, double>> coeffs,
                          int sign) {
  GeneratorCombo g;
  g.x = GmCoeffs::Zero();
  for (const auto& [k, v] : coeffs) g.x(k - 1) = v;
  g.sign = sign;
  return g;
}

}  // namespace

TEST_CASE("stability dimensions at the canonical points") {
  CHECK(stability_algebra({0, kTwoPi / 3, 0}).dim() == 8);
  CHECK(stability_algebra({0, kPi / 3, 0}).dim() == 4);
  CHECK(stability_algebra({0, kPi / 2, 0}).dim() == 2);
}

TEST_CASE("basis pairs annihilate the state and are orthonormal") {
  SplitMix64 rng(61);
  for (const GateParams& p :
       {GateParams(0, kTwoPi / 3, 0), GateParams(0, kPi, 0),
        elw_test::random_params(rng)}) {
    const StabilityBasis b = stability_algebra(p);
    for (const RVec16& v : b.pairs) {
      CHECK(verify_pair(v.head<8>(), v.tail<8>(), p) <= 1e-10);
      CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("verify_generator spot checks") {
  CHECK(verify_generator(combo_from({{2, 1}, {5, 1}}, -1), {0, kTwoPi / 3, 0}) <=
        1e-10);
  CHECK(verify_generator(combo_from({{2, 1}, {5, -1}, {7, 1}}, +1), {0, kPi, 0}) <=
        1e-10);
  CHECK(verify_generator(combo_from({{1, 1}}, -1), {0, kPi / 2, 0}) > 0.1);
}

TEST_CASE("swap symmetrization splits") {
  auto split = [](const GateParams& p) {
    return symmetrize_basis(stability_algebra(p));
  };
  SymmetrizedBasis s = split({0, kTwoPi / 3, 0});
  CHECK(s.n_even == 3);
  CHECK(s.n_odd == 5);
  s = split({0, kPi, 0});
  CHECK(s.n_even == 1);
  CHECK(s.n_odd == 3);
  s = split({0, kPi / 2, 0});
  CHECK(s.n_even == 0);
  CHECK(s.n_odd == 2);

  // symmetrized combos still annihilate
  for (const GateParams& p : {GateParams(0, kTwoPi / 3, 0), GateParams(0, kPi, 0)})
    for (const GeneratorCombo& g : split(p).combos)
      CHECK(verify_generator(g, p) <= 1e-10);
}

TEST_CASE("span_match against the shipped tables") {
  auto table_span = [](const char* case_id) {
    std::vector<RVec16> vecs;
    GateParams p;
    for (const TableEntry& e : embedded_generator_tables())
      if (e.case_id == case_id) {
        vecs.push_back(combo_to_vec16(e.combo));
        p = e.params;
      }
    REQUIRE(!vecs.empty());
    return std::pair(vecs, p);
  };

  const auto [max_i, p_i] = table_span("max-i");
  CHECK(span_match(stability_algebra(p_i).pairs, max_i));

  const auto [max_iii, p_iii] = table_span("max-iii");
  CHECK(span_match(stability_algebra(p_iii).pairs, max_iii));

  // wrong parameter point: different table, same dimension
  const auto [max_ii, p_ii] = table_span("max-ii");
  (void)p_ii;
  CHECK_FALSE(span_match(stability_algebra(p_i).pairs, max_ii));
}

TEST_CASE("every shipped table entry annihilates at its stated point") {
  const auto& tables = embedded_generator_tables();
  CHECK(tables.size() == 54);
  for (const TableEntry& e : tables)
    CHECK(verify_generator(e.combo, e.params) <= 1e-10);
}

TEST_CASE("conjugation probe weights and residuals") {
  const auto& roots = root_vectors();

  for (const RootVector& r : roots) {
    const OmegaProbe probe = conjugate_probe({0, 0, 0}, r);
    CHECK(probe.a1 == 0.0);
    CHECK(probe.a2 == 0.0);
    CHECK((probe.omega - CMat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(probe.residual <= 1e-15);
  }

  auto find = [&](int j, int k) -> const RootVector& {
    for (const RootVector& r : roots)
      if (r.j == j && r.k == k) return r;
    FAIL("missing root");
    return roots[0];
  };
  OmegaProbe probe = conjugate_probe({1, 0, 0}, find(1, 2));
  CHECK(probe.a1 == doctest::Approx(2));
  CHECK(probe.a2 == doctest::Approx(0));
  CHECK(probe.residual <= 1e-12);

  probe = conjugate_probe({0, 1, 0}, find(1, 3));
  CHECK(probe.a1 == doctest::Approx(2));
  CHECK(probe.a2 == doctest::Approx(1));
  CHECK(probe.residual <= 1e-12);

  SplitMix64 rng(62);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const GateParams p = elw_test::random_params(rng);
    for (const RootVector& r : roots)
      worst = std::max(worst, conjugate_probe(p, r).residual);
  }
  CHECK(worst <= 1e-12);

  RootVector bogus;
  bogus.j = 1;
  bogus.k = 1;
  bogus.e = CMat3::Identity();
  CHECK_THROWS_AS(conjugate_probe({0, 0, 0}, bogus), Error);
}

TEST_CASE("counter generators at a maximal point") {
  const GateParams p(0, kTwoPi / 3, 0);
  const CVec9 psi = initial_state_tilde(p);
  const CMat3 ft = CoefficientMatrix::from_state(psi).f_tilde();

  const CounterGenerators cg = maximal_counter_generators(ft, p);
  CHECK(cg.pairs.size() == 8);
  CHECK(cg.used_minus_sign);
  std::vector<RVec16> span;
  for (const auto& [x, y] : cg.pairs) {
    CHECK(verify_pair(x, y, p) <= 1e-10);
    RVec16 v;
    v.head<8>() = x;
    v.tail<8>() = y;
    span.push_back(v);
  }
  CHECK(span_match(stability_algebra(p).pairs, span));

  // generic point: F~ far from unitary
  const CMat3 bad =
      CoefficientMatrix::from_state(initial_state_tilde({0, kPi / 2, 0})).f_tilde();
  CHECK_THROWS_AS(maximal_counter_generators(bad, {0, kPi / 2, 0}), Error);
}

TEST_CASE("conjugation by identity F~ pairs X with -conj(X)") {
  const GateParams p(0, kTwoPi / 3, 0);
  const CVec9 psi = initial_state_tilde(p);
  const CMat3 ft = CoefficientMatrix::from_state(psi).f_tilde();
  const CounterGenerators cg = maximal_counter_generators(ft, p);
  for (const auto& [x, y] : cg.pairs) {
    const CMat3 want = -(ft * coeffs_to_matrix(x).conjugate() * ft.adjoint());
    CHECK((coeffs_to_matrix(y) - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("grid: dimension matches the eigenvalue multiplicity class") {
  const int n = 20;
  const double step = kTwoPi / n;
  int checked = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const GateParams p(a * step, b * step, c * step);
        const CVec9 psi = initial_state_tilde(p);
        const CMat3 f = CoefficientMatrix::from_state(psi).f;
        if (std::abs(f.determinant()) <= 1e-6) continue;
        ++checked;
        const int dim = stability_algebra(p).dim();
        const EntanglementClass cls = classify(p);
        int want = 0;
        switch (cls.kind) {
          case EntanglementKind::maximal: want = 8; break;
          case EntanglementKind::two_equal: want = 4; break;
          case EntanglementKind::generic: want = 2; break;
        }
        CHECK(dim == want);
      }
  CHECK(checked > 6000);
}

TEST_CASE("generators exponentiate to invariances") {
  SplitMix64 rng(63);
  for (const GateParams& p :
       {GateParams(0, kTwoPi / 3, 0), GateParams(0, kPi, 0),
        GateParams(0, kPi / 2, 0)}) {
    const CVec9 psi = initial_state_tilde(p);
    for (const RVec16& v : stability_algebra(p).pairs) {
      const double t = rng.uniform(0, kTwoPi);
      const CMat3 ua = su3_exponential(GmCoeffs(t * v.head<8>()));
      const CMat3 ub = su3_exponential(GmCoeffs(t * v.tail<8>()));
      CVec9 moved = CVec9::Zero();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
              moved(3 * i + j) += ua(i, k) * ub(j, l) * psi(3 * k + l);
      CHECK((moved - psi).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("singular product state reports its measured dimension") {
  const StabilityBasis b = stability_algebra({0, 0, 0});
  CHECK(classify({0, 0, 0}).singular);
  CHECK(b.dim() == 7);
  for (const RVec16& v : b.pairs)
    CHECK(verify_pair(v.head<8>(), v.tail<8>(), {0, 0, 0}) <= 1e-10);
}

TEST_SUITE_END();
