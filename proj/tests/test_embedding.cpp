#include "doctest.h"

#include "embedding.hpp"
#include "linalg.hpp"
#include "test_util.hpp"

using namespace elw;
using elw_test::SplitMix64;

TEST_SUITE_BEGIN("embedding");

namespace {

EmbeddingConfig make_cfg(double p2, double p3, Epsilon e) {
  EmbeddingConfig cfg;
  cfg.phi2 = p2;
  cfg.phi3 = p3;
  cfg.epsilon = e;
  return cfg;
}

}  // namespace

TEST_CASE("U_k|1> lands on e^{i phi_k}|k>") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const EmbeddingConfig cfg =
        make_cfg(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                 trial % 2 ? Epsilon::minus : Epsilon::plus);
    const ClassicalTriple t = classical_unitaries(cfg);
    const CVec3 e1(1, 0, 0);
    const double phases[3] = {0.0, cfg.phi2, cfg.phi3};
    for (int k = 1; k <= 3; ++k) {
      CVec3 want = CVec3::Zero();
      want(k - 1) = std::polar(1.0, phases[k - 1]);
      CHECK(((t.u(k) * e1) - want).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }
}

TEST_CASE("default config: U2|1> = |2> exactly") {
  const ClassicalTriple t = classical_unitaries(EmbeddingConfig::defaults());
  CVec3 got = t.u2 * CVec3(1, 0, 0);
  CHECK(got(0) == Complex(0, 0));
  CHECK(got(1) == Complex(1, 0));
  CHECK(got(2) == Complex(0, 0));
}

TEST_CASE("pairwise commutation and unitarity") {
  const EmbeddingConfig cfg = make_cfg(kPi / 5, -kPi / 7, Epsilon::minus);
  const ClassicalTriple t = classical_unitaries(cfg);
  for (int k = 1; k <= 3; ++k) CHECK(is_unitary(t.u(k), 1e-14));
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      CHECK((t.u(j) * t.u(k) - t.u(k) * t.u(j)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("eigenbasis diagonalizes the triple per the eigenvalue table") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 6; ++trial) {
    const EmbeddingConfig cfg =
        make_cfg(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                 trial % 2 ? Epsilon::minus : Epsilon::plus);
    const ClassicalTriple t = classical_unitaries(cfg);
    const CMat3 v = eigenbasis(cfg);
    CHECK((v * v.adjoint() - CMat3::Identity()).cwiseAbs().maxCoeff() <= 1e-14);

    const CMat3 table = eigenvalue_table(cfg);
    for (int k = 1; k <= 3; ++k) {
      const CMat3 d = v.adjoint() * t.u(k) * v;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          const Complex want = r == c ? table(r, k - 1) : Complex(0, 0);
          CHECK(std::abs(d(r, c) - want) <= 1e-14);
        }
    }
  }
}

TEST_CASE("eigenvalue table rows") {
  const EmbeddingConfig cfg = EmbeddingConfig::defaults();
  const Complex eps = epsilon_value(cfg.epsilon);
  const CMat3 table = eigenvalue_table(cfg);
  CHECK(std::abs(table(0, 0) - 1.0) == 0.0);
  CHECK(std::abs(table(0, 1) - 1.0) == 0.0);
  CHECK(std::abs(table(0, 2) - eps) == 0.0);
  CHECK(std::abs(table(1, 1) - eps) == 0.0);
  CHECK(std::abs(table(1, 2) - 1.0) == 0.0);
  CHECK(std::abs(table(2, 1) - eps * eps) == 0.0);
  CHECK(std::abs(table(2, 2) - eps * eps) == 0.0);
}

TEST_CASE("V^+|1> has all components of modulus 1/sqrt3") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 6; ++trial) {
    const EmbeddingConfig cfg =
        make_cfg(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), Epsilon::plus);
    const CVec3 s = eigenbasis(cfg).adjoint() * CVec3(1, 0, 0);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(std::abs(s(i)) - 1.0 / std::sqrt(3.0)) <= 1e-14);
  }
}

TEST_CASE("checked raw epsilon constructor") {
  CHECK(EmbeddingConfig::from_raw(0, 0, std::polar(1.0, kTwoPi / 3)).epsilon ==
        Epsilon::plus);
  CHECK(EmbeddingConfig::from_raw(0, 0, std::polar(1.0, -kTwoPi / 3)).epsilon ==
        Epsilon::minus);
  CHECK_THROWS_AS(EmbeddingConfig::from_raw(0, 0, Complex(1, 0)), Error);
  CHECK_THROWS_AS(EmbeddingConfig::from_raw(0, 0, Complex(0.5, 0)), Error);
  CHECK_THROWS_AS(EmbeddingConfig::from_raw(0, 0, std::polar(1.0, kPi / 3)), Error);
}

TEST_CASE("constructed unitaries fit the pre-commutation patterns") {
  // U2 realizes the general one-shift form with alpha = 0, beta = eps e^{-i phi3};
  // U3 the other with gamma = eps e^{-i phi2}, delta = 0.
  SplitMix64 rng(34);
  for (int trial = 0; trial < 4; ++trial) {
    const EmbeddingConfig cfg =
        make_cfg(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), Epsilon::plus);
    const ClassicalTriple t = classical_unitaries(cfg);
    const Complex eps = epsilon_value(cfg.epsilon);
    const Complex e2 = std::polar(1.0, cfg.phi2);
    const Complex e3 = std::polar(1.0, cfg.phi3);

    const Complex beta = t.u2(0, 2);
    CHECK(std::abs(t.u2(0, 0)) == 0.0);
    CHECK(std::abs(t.u2(0, 1)) == 0.0);  // alpha = 0
    CHECK(std::abs(std::abs(beta) - 1.0) <= 1e-14);
    CHECK(std::abs(t.u2(1, 0) - e2) <= 1e-14);
    CHECK(std::abs(t.u2(2, 1) - std::conj(beta) * std::conj(e2)) <= 1e-14);
    CHECK(std::abs(t.u2(2, 2)) == 0.0);  // -conj(alpha) e^{-i phi2}
    CHECK(std::abs(beta - eps * std::conj(e3)) <= 1e-14);

    const Complex gamma = t.u3(0, 1);
    CHECK(std::abs(t.u3(0, 2)) == 0.0);  // delta = 0
    CHECK(std::abs(std::abs(gamma) - 1.0) <= 1e-14);
    CHECK(std::abs(t.u3(1, 1)) == 0.0);  // -conj(delta) e^{-i phi3}
    CHECK(std::abs(t.u3(1, 2) - std::conj(gamma) * std::conj(e3)) <= 1e-14);
    CHECK(std::abs(t.u3(2, 0) - e3) <= 1e-14);
    CHECK(std::abs(gamma - eps * std::conj(e2)) <= 1e-14);
  }
}

TEST_SUITE_END();
