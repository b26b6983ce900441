// Exercises the C surface the way an external binding would: only elw/elw.h.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>

#include "elw/elw.h"

namespace {

constexpr double kTwoPi = 6.283185307179586;

elw_config config_at(double tau, double rho, double sigma) {
  elw_config cfg;
  elw_config_default(&cfg);
  cfg.tau = tau;
  cfg.rho = rho;
  cfg.sigma = sigma;
  return cfg;
}

struct GameHandle {
  elw_game* game = nullptr;
  explicit GameHandle(const elw_config& cfg) {
    REQUIRE(elw_game_create(&cfg, &game) == ELW_OK);
  }
  ~GameHandle() { elw_game_destroy(game); }
};

std::complex<double> at(const double m[18], int i, int j) {
  return {m[2 * (3 * i + j)], m[2 * (3 * i + j) + 1]};
}

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("lifecycle and null handling") {
  elw_config cfg = config_at(0, 0, 0);
  elw_game* game = nullptr;
  CHECK(elw_game_create(nullptr, &game) == ELW_ERR_INVALID_ARGUMENT);
  CHECK(elw_game_create(&cfg, nullptr) == ELW_ERR_INVALID_ARGUMENT);
  CHECK(std::string(elw_last_error()) == "null argument");
  REQUIRE(elw_game_create(&cfg, &game) == ELW_OK);
  elw_game_destroy(game);
  elw_game_destroy(nullptr);  // no-op
  CHECK(std::string(elw_version()).find('.') != std::string::npos);
  CHECK(std::string(elw_status_string(ELW_OK)) == "ok");
  CHECK(std::string(elw_status_string(ELW_ERR_NOT_MAXIMAL)) ==
        "state is not maximally entangled");
}

TEST_CASE("classification through the C surface") {
  GameHandle maximal(config_at(0, kTwoPi / 3, 0));
  elw_entanglement e;
  REQUIRE(elw_game_classify(maximal.game, 0, &e) == ELW_OK);
  CHECK(e.kind == ELW_ENTANGLEMENT_MAXIMAL);
  CHECK(!e.singular);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(e.eigenvalues[i] - 1.0 / 3.0) < 1e-10);

  GameHandle product(config_at(0, 0, 0));
  REQUIRE(elw_game_classify(product.game, 0, &e) == ELW_OK);
  CHECK(e.kind == ELW_ENTANGLEMENT_TWO_EQUAL);
  CHECK(e.singular);

  GameHandle generic(config_at(0, kTwoPi / 4, 0));
  REQUIRE(elw_game_classify(generic.game, 0, &e) == ELW_OK);
  CHECK(e.kind == ELW_ENTANGLEMENT_GENERIC);
}

TEST_CASE("reduced density and initial states") {
  GameHandle g(config_at(0, 0, kTwoPi / 3));
  double rho[18];
  REQUIRE(elw_game_reduced_density(g.game, rho) == ELW_OK);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const std::complex<double> want = i == j ? 1.0 / 3.0 : 0.0;
      CHECK(std::abs(at(rho, i, j) - want) < 1e-10);
    }

  double tilde[18], orig[18];
  REQUIRE(elw_game_initial_state(g.game, 1, tilde) == ELW_OK);
  REQUIRE(elw_game_initial_state(g.game, 0, orig) == ELW_OK);
  double norm_t = 0, norm_o = 0;
  for (int i = 0; i < 9; ++i) {
    norm_t += tilde[2 * i] * tilde[2 * i] + tilde[2 * i + 1] * tilde[2 * i + 1];
    norm_o += orig[2 * i] * orig[2 * i] + orig[2 * i + 1] * orig[2 * i + 1];
  }
  CHECK(std::abs(norm_t - 1.0) < 1e-12);
  CHECK(std::abs(norm_o - 1.0) < 1e-12);
}

TEST_CASE("eigenbasis is unitary") {
  GameHandle g(config_at(0.3, 1.1, 2.0));
  double v[18];
  REQUIRE(elw_game_eigenbasis(g.game, v) == ELW_OK);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::complex<double> dot = 0;
      for (int k = 0; k < 3; ++k) dot += at(v, i, k) * std::conj(at(v, j, k));
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-13);
    }
}

TEST_CASE("stability dimensions and splits") {
  elw_stability s;
  GameHandle maximal(config_at(0, kTwoPi / 3, 0));
  REQUIRE(elw_game_stability(maximal.game, 0, &s) == ELW_OK);
  CHECK(s.dim == 8);
  CHECK(s.n_even == 3);
  CHECK(s.n_odd == 5);

  // every reported combo annihilates
  for (int i = 0; i < s.dim; ++i) {
    double residual = 0;
    const int sign = i < s.n_even ? +1 : -1;
    REQUIRE(elw_game_generator_residual(maximal.game, s.combos[i], sign,
                                        &residual) == ELW_OK);
    CHECK(residual <= 1e-10);
  }

  GameHandle twoeq(config_at(0, kTwoPi / 2, 0));  // rho = pi
  REQUIRE(elw_game_stability(twoeq.game, 0, &s) == ELW_OK);
  CHECK(s.dim == 4);
  CHECK(s.n_even == 1);
  CHECK(s.n_odd == 3);

  GameHandle generic(config_at(0, kTwoPi / 4, 0));
  REQUIRE(elw_game_stability(generic.game, 0, &s) == ELW_OK);
  CHECK(s.dim == 2);
}

TEST_CASE("classical play through the C surface") {
  elw_config cfg = config_at(0.4, 1.9, 5.2);
  cfg.phi2 = 0.7;
  cfg.phi3 = -1.2;
  GameHandle g(cfg);
  double u2[18], u3[18], probs[9];
  REQUIRE(elw_game_classical_unitary(g.game, 2, u2) == ELW_OK);
  REQUIRE(elw_game_classical_unitary(g.game, 3, u3) == ELW_OK);
  CHECK(elw_game_classical_unitary(g.game, 4, u2) == ELW_ERR_INDEX_OUT_OF_RANGE);

  REQUIRE(elw_game_outcomes(g.game, u2, u3, probs) == ELW_OK);
  CHECK(std::abs(probs[3 * 1 + 2] - 1.0) < 1e-12);

  double pa = 0, pb = 0;
  const double payoff_a[9] = {1, 0, 2, 2, 1, 0, 0, 2, 1};
  const double payoff_b[9] = {1, 2, 0, 0, 1, 2, 2, 0, 1};
  REQUIRE(elw_game_payoffs(g.game, u2, u3, payoff_a, payoff_b, &pa, &pb) == ELW_OK);
  CHECK(std::abs(pa - payoff_a[3 * 1 + 2]) < 1e-12);
  CHECK(std::abs(pb - payoff_b[3 * 1 + 2]) < 1e-12);
}

TEST_CASE("strategies from coefficients and the counterstrategy") {
  GameHandle g(config_at(0, kTwoPi / 3, 0));

  const double ca[8] = {0.3, -0.7, 1.1, 0.2, -0.4, 0.9, -1.3, 0.5};
  const double cb[8] = {-0.8, 0.2, 0.6, -1.0, 0.1, -0.3, 0.7, 1.2};
  const double cv[8] = {1.4, 0.5, -0.9, 0.3, 0.8, -0.2, 0.4, -0.6};
  double ua[18], ub[18], v[18], w[18];
  REQUIRE(elw_strategy_from_coeffs(ca, ua) == ELW_OK);
  REQUIRE(elw_strategy_from_coeffs(cb, ub) == ELW_OK);
  REQUIRE(elw_strategy_from_coeffs(cv, v) == ELW_OK);

  REQUIRE(elw_game_counterstrategy(g.game, v, ua, ub, w) == ELW_OK);
  double target[9], counter[9];
  REQUIRE(elw_game_outcomes(g.game, ua, ub, target) == ELW_OK);
  REQUIRE(elw_game_outcomes(g.game, v, w, counter) == ELW_OK);
  for (int i = 0; i < 9; ++i) CHECK(std::abs(target[i] - counter[i]) <= 1e-10);

  GameHandle generic(config_at(0, kTwoPi / 4, 0));
  CHECK(elw_game_counterstrategy(generic.game, v, ua, ub, w) == ELW_ERR_NOT_MAXIMAL);
  CHECK(std::string(elw_last_error()).find("maximal") != std::string::npos);
}

TEST_CASE("mixed feasibility and strategy probabilities") {
  double probs[3];
  REQUIRE(elw_strategy_probabilities(0, 0, probs) == ELW_OK);
  CHECK(std::abs(probs[0] - 1.0) < 1e-14);

  elw_mixed_result r;
  REQUIRE(elw_mixed_feasibility(1.0 / 18.0, 5.0 / 9.0, &r) == ELW_OK);
  CHECK(!r.feasible);
  CHECK(std::abs(r.best_cos_delta - (-1.12041)) <= 1e-4);
  CHECK(r.n_witnesses >= 1);

  REQUIRE(elw_mixed_feasibility(1.0 / 3.0, 1.0 / 3.0, &r) == ELW_OK);
  CHECK(r.feasible);
  REQUIRE(elw_strategy_probabilities(r.alpha, r.beta, probs) == ELW_OK);
  CHECK(std::abs(probs[0] - 1.0 / 3.0) <= 1e-8);
  CHECK(std::abs(probs[1] - 1.0 / 3.0) <= 1e-8);

  CHECK(elw_mixed_feasibility(0.8, 0.7, &r) == ELW_ERR_OUT_OF_DOMAIN);
}

TEST_CASE("maximal solutions") {
  size_t count = 0;
  REQUIRE(elw_maximal_solutions(nullptr, 0, &count) == ELW_OK);
  CHECK(count == 48);
  double triples[48 * 3];
  REQUIRE(elw_maximal_solutions(triples, 48, &count) == ELW_OK);
  for (size_t i = 0; i < count; ++i) {
    GameHandle g(config_at(triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]));
    elw_entanglement e;
    REQUIRE(elw_game_classify(g.game, 0, &e) == ELW_OK);
    CHECK(e.kind == ELW_ENTANGLEMENT_MAXIMAL);
  }
  double too_small[3];
  CHECK(elw_maximal_solutions(too_small, 1, &count) == ELW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify-paper: embedded tables pass, corrupted file is flagged") {
  elw_verify_report report;
  REQUIRE(elw_verify_paper(nullptr, &report) == ELW_OK);
  CHECK(report.ok);
  REQUIRE(report.n_groups == 5);
  CHECK(std::string(report.groups[0].name) == "maximal-families");
  CHECK(report.groups[0].passed == 48);
  CHECK(report.groups[0].total == 48);
  CHECK(std::string(report.groups[1].name) == "generator-tables");
  CHECK(report.groups[1].passed == 54);
  CHECK(report.groups[1].total == 54);

  const char* path = "capi_corrupt_tables.dat";
  {
    std::ofstream out(path);
    out << "bogus 0 2pi/3 0 - 1 0 0 0 0 0 0 0\n";
  }
  REQUIRE(elw_verify_paper(path, &report) == ELW_OK);
  CHECK(!report.ok);
  CHECK(std::string(report.groups[1].detail).find("bogus/G1") != std::string::npos);
  std::remove(path);

  CHECK(elw_verify_paper("missing_file.dat", &report) == ELW_ERR_IO);
}

TEST_CASE("angle parsing") {
  double v = 0;
  REQUIRE(elw_parse_angle("2pi/3", &v) == ELW_OK);
  CHECK(std::abs(v - kTwoPi / 3) < 1e-15);
  CHECK(elw_parse_angle("junk", &v) == ELW_ERR_PARSE);
}

TEST_SUITE_END();
