#include "elw/elw.h"

#include <cstring>
#include <string>

#include "entanglement.hpp"
#include "game.hpp"
#include "parse.hpp"
#include "paper_tables.hpp"
#include "stability.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

elw_status map_code(elw::ErrorCode code) {
  using elw::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return ELW_ERR_INVALID_ARGUMENT;
    case ErrorCode::index_out_of_range: return ELW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::not_hermitian: return ELW_ERR_NOT_HERMITIAN;
    case ErrorCode::not_traceless: return ELW_ERR_NOT_TRACELESS;
    case ErrorCode::not_unitary: return ELW_ERR_NOT_UNITARY;
    case ErrorCode::not_symmetric: return ELW_ERR_NOT_SYMMETRIC;
    case ErrorCode::not_maximally_entangled: return ELW_ERR_NOT_MAXIMAL;
    case ErrorCode::not_root_vector: return ELW_ERR_NOT_ROOT_VECTOR;
    case ErrorCode::invalid_epsilon: return ELW_ERR_INVALID_EPSILON;
    case ErrorCode::degenerate_polynomial: return ELW_ERR_DEGENERATE;
    case ErrorCode::symmetrization_incomplete: return ELW_ERR_DEGENERATE;
    case ErrorCode::out_of_domain: return ELW_ERR_OUT_OF_DOMAIN;
    case ErrorCode::io_error: return ELW_ERR_IO;
    case ErrorCode::parse_error: return ELW_ERR_PARSE;
  }
  return ELW_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
elw_status guarded(Fn&& fn) {
  try {
    fn();
    return ELW_OK;
  } catch (const elw::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELW_ERR_INVALID_ARGUMENT;
  }
}

elw_status require(bool ok, const char* message) {
  if (ok) return ELW_OK;
  g_last_error = message;
  return ELW_ERR_INVALID_ARGUMENT;
}

void write_cmat3(const elw::CMat3& m, double out[18]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[2 * (3 * i + j)] = m(i, j).real();
      out[2 * (3 * i + j) + 1] = m(i, j).imag();
    }
}

elw::CMat3 read_cmat3(const double in[18]) {
  elw::CMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = elw::Complex(in[2 * (3 * i + j)], in[2 * (3 * i + j) + 1]);
  return m;
}

void write_cvec9(const elw::CVec9& v, double out[18]) {
  for (int i = 0; i < 9; ++i) {
    out[2 * i] = v(i).real();
    out[2 * i + 1] = v(i).imag();
  }
}

void copy_string(const std::string& s, char* dst, size_t cap) {
  std::strncpy(dst, s.c_str(), cap - 1);
  dst[cap - 1] = '\0';
}

}  // namespace

struct elw_game {
  elw::Game game;
};

extern "C" {

const char* elw_status_string(elw_status status) {
  switch (status) {
    case ELW_OK: return "ok";
    case ELW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ELW_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case ELW_ERR_NOT_HERMITIAN: return "matrix is not Hermitian";
    case ELW_ERR_NOT_TRACELESS: return "matrix is not traceless";
    case ELW_ERR_NOT_UNITARY: return "matrix is not unitary";
    case ELW_ERR_NOT_SYMMETRIC: return "matrix is not symmetric";
    case ELW_ERR_NOT_MAXIMAL: return "state is not maximally entangled";
    case ELW_ERR_NOT_ROOT_VECTOR: return "not a root vector";
    case ELW_ERR_INVALID_EPSILON: return "invalid cube root of unity";
    case ELW_ERR_DEGENERATE: return "degenerate computation";
    case ELW_ERR_OUT_OF_DOMAIN: return "argument outside its domain";
    case ELW_ERR_IO: return "i/o error";
    case ELW_ERR_PARSE: return "parse error";
  }
  return "unknown status";
}

const char* elw_last_error(void) { return g_last_error.c_str(); }

const char* elw_version(void) { return "1.0.0"; }

void elw_config_default(elw_config* cfg) {
  if (!cfg) return;
  cfg->tau = 0.0;
  cfg->rho = 0.0;
  cfg->sigma = 0.0;
  cfg->phi2 = 0.0;
  cfg->phi3 = 0.0;
  cfg->epsilon_minus = 0;
}

elw_status elw_game_create(const elw_config* cfg, elw_game** out) {
  if (elw_status s = require(cfg && out, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    elw::EmbeddingConfig ecfg;
    ecfg.phi2 = cfg->phi2;
    ecfg.phi3 = cfg->phi3;
    ecfg.epsilon = cfg->epsilon_minus ? elw::Epsilon::minus : elw::Epsilon::plus;
    *out = new elw_game{
        elw::Game(ecfg, elw::GateParams(cfg->tau, cfg->rho, cfg->sigma))};
  });
}

void elw_game_destroy(elw_game* game) { delete game; }

elw_status elw_game_classical_unitary(const elw_game* game, int k,
                                      double out_matrix[18]) {
  if (elw_status s = require(game && out_matrix, "null argument"); s != ELW_OK) return s;
  return guarded([&] { write_cmat3(game->game.classical.u(k), out_matrix); });
}

elw_status elw_game_eigenbasis(const elw_game* game, double out_matrix[18]) {
  if (elw_status s = require(game && out_matrix, "null argument"); s != ELW_OK) return s;
  return guarded([&] { write_cmat3(game->game.v, out_matrix); });
}

elw_status elw_game_initial_state(const elw_game* game, int tilde_frame,
                                  double out_state[18]) {
  if (elw_status s = require(game && out_state, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    write_cvec9(tilde_frame ? game->game.psi_tilde : game->game.psi_original,
                out_state);
  });
}

elw_status elw_game_reduced_density(const elw_game* game, double out_matrix[18]) {
  if (elw_status s = require(game && out_matrix, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    write_cmat3(elw::reduced_density(game->game.params), out_matrix);
  });
}

elw_status elw_game_classify(const elw_game* game, double rel_tol,
                             elw_entanglement* out) {
  if (elw_status s = require(game && out, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    const elw::EntanglementClass c =
        elw::classify(game->game.params, rel_tol > 0 ? rel_tol : 1e-8);
    switch (c.kind) {
      case elw::EntanglementKind::maximal: out->kind = ELW_ENTANGLEMENT_MAXIMAL; break;
      case elw::EntanglementKind::two_equal: out->kind = ELW_ENTANGLEMENT_TWO_EQUAL; break;
      case elw::EntanglementKind::generic: out->kind = ELW_ENTANGLEMENT_GENERIC; break;
    }
    for (int i = 0; i < 3; ++i) out->eigenvalues[i] = c.eigenvalues(i);
    out->gaps[0] = c.gaps[0];
    out->gaps[1] = c.gaps[1];
    out->singular = c.singular ? 1 : 0;
  });
}

elw_status elw_maximal_solutions(double* out_triples, size_t capacity,
                                 size_t* out_count) {
  if (elw_status s = require(out_count != nullptr, "null argument"); s != ELW_OK) return s;
  const auto& sols = elw::maximal_solutions();
  *out_count = sols.size();
  if (!out_triples) return ELW_OK;
  if (elw_status s = require(capacity >= sols.size(), "capacity below 48");
      s != ELW_OK)
    return s;
  for (size_t i = 0; i < sols.size(); ++i) {
    out_triples[3 * i] = sols[i].tau;
    out_triples[3 * i + 1] = sols[i].rho;
    out_triples[3 * i + 2] = sols[i].sigma;
  }
  return ELW_OK;
}

elw_status elw_game_stability(const elw_game* game, double tol,
                              elw_stability* out) {
  if (elw_status s = require(game && out, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    const elw::StabilityBasis basis =
        elw::stability_algebra(game->game.params, tol > 0 ? tol : 1e-8);
    const elw::SymmetrizedBasis sym = elw::symmetrize_basis(basis);
    out->dim = basis.dim();
    out->n_even = sym.n_even;
    out->n_odd = sym.n_odd;
    for (size_t i = 0; i < sym.combos.size() && i < ELW_STABILITY_MAX_DIM; ++i)
      for (int j = 0; j < 8; ++j)
        out->combos[i][j] = sym.combos[i].x(j);
  });
}

elw_status elw_game_generator_residual(const elw_game* game,
                                       const double coeffs[8], int sign,
                                       double* out_residual) {
  if (elw_status s = require(game && coeffs && out_residual && (sign == 1 || sign == -1),
                             "need coefficients and sign +-1");
      s != ELW_OK)
    return s;
  return guarded([&] {
    elw::GeneratorCombo combo;
    for (int i = 0; i < 8; ++i) combo.x(i) = coeffs[i];
    combo.sign = sign;
    *out_residual = elw::verify_generator(combo, game->game.params);
  });
}

elw_status elw_strategy_from_coeffs(const double coeffs[8], double out_matrix[18]) {
  if (elw_status s = require(coeffs && out_matrix, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    elw::GmCoeffs c;
    for (int i = 0; i < 8; ++i) c(i) = coeffs[i];
    write_cmat3(elw::su3_exponential(c), out_matrix);
  });
}

elw_status elw_game_final_state(const elw_game* game, const double ua[18],
                                const double ub[18], double out_state[18]) {
  if (elw_status s = require(game && ua && ub && out_state, "null argument");
      s != ELW_OK)
    return s;
  return guarded([&] {
    write_cvec9(elw::final_state(game->game, read_cmat3(ua), read_cmat3(ub)),
                out_state);
  });
}

elw_status elw_game_outcomes(const elw_game* game, const double ua[18],
                             const double ub[18], double out_probabilities[9]) {
  if (elw_status s = require(game && ua && ub && out_probabilities, "null argument");
      s != ELW_OK)
    return s;
  return guarded([&] {
    const elw::RMat3 p = elw::outcome_probabilities(
        elw::final_state(game->game, read_cmat3(ua), read_cmat3(ub)));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out_probabilities[3 * i + j] = p(i, j);
  });
}

elw_status elw_game_payoffs(const elw_game* game, const double ua[18],
                            const double ub[18], const double payoff_a[9],
                            const double payoff_b[9], double* out_a,
                            double* out_b) {
  if (elw_status s = require(game && ua && ub && payoff_a && payoff_b && out_a && out_b,
                             "null argument");
      s != ELW_OK)
    return s;
  return guarded([&] {
    elw::PayoffMatrix m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m.a(i, j) = payoff_a[3 * i + j];
        m.b(i, j) = payoff_b[3 * i + j];
      }
    const elw::RMat3 p = elw::outcome_probabilities(
        elw::final_state(game->game, read_cmat3(ua), read_cmat3(ub)));
    const auto [pa, pb] = elw::expected_payoffs(p, m);
    *out_a = pa;
    *out_b = pb;
  });
}

elw_status elw_game_counterstrategy(const elw_game* game,
                                    const double v_actual[18],
                                    const double ua_target[18],
                                    const double ub_target[18],
                                    double out_matrix[18]) {
  if (elw_status s = require(game && v_actual && ua_target && ub_target && out_matrix,
                             "null argument");
      s != ELW_OK)
    return s;
  return guarded([&] {
    write_cmat3(elw::counterstrategy(game->game, read_cmat3(v_actual),
                                     read_cmat3(ua_target), read_cmat3(ub_target)),
                out_matrix);
  });
}

elw_status elw_strategy_probabilities(double alpha, double beta,
                                      double out_probabilities[3]) {
  if (elw_status s = require(out_probabilities != nullptr, "null argument");
      s != ELW_OK)
    return s;
  const std::array<double, 3> p = elw::strategy_probabilities(alpha, beta);
  for (int i = 0; i < 3; ++i) out_probabilities[i] = p[i];
  return ELW_OK;
}

elw_status elw_mixed_feasibility(double p1, double p2, elw_mixed_result* out) {
  if (elw_status s = require(out != nullptr, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    const elw::FeasibilityResult r =
        elw::mixed_feasibility(elw::MixedTarget::from_probabilities(p1, p2));
    out->feasible = r.feasible ? 1 : 0;
    out->alpha = r.alpha;
    out->beta = r.beta;
    out->best_cos_delta = r.best_cos_delta;
    out->n_witnesses = 0;
    for (const elw::MixedWitness& w : r.witnesses) {
      if (out->n_witnesses >= ELW_MIXED_MAX_WITNESSES) break;
      elw_mixed_witness& dst = out->witnesses[out->n_witnesses++];
      dst.gamma = w.gamma;
      dst.cos_delta = w.cos_delta;
      dst.singular = w.singular ? 1 : 0;
    }
  });
}

elw_status elw_verify_paper(const char* tables_path, elw_verify_report* out) {
  if (elw_status s = require(out != nullptr, "null argument"); s != ELW_OK) return s;
  return guarded([&] {
    const std::vector<elw::TableEntry> tables =
        tables_path ? elw::load_generator_tables(tables_path)
                    : elw::embedded_generator_tables();
    const elw::VerifyReport report = elw::verify_paper(tables);
    out->ok = report.ok() ? 1 : 0;
    out->n_groups = 0;
    for (const elw::VerifyGroup& g : report.groups) {
      if (out->n_groups >= ELW_VERIFY_MAX_GROUPS) break;
      elw_verify_group& dst = out->groups[out->n_groups++];
      copy_string(g.name, dst.name, ELW_VERIFY_NAME_LEN);
      copy_string(g.detail, dst.detail, ELW_VERIFY_DETAIL_LEN);
      dst.passed = g.passed;
      dst.total = g.total;
    }
  });
}

elw_status elw_parse_angle(const char* token, double* out_radians) {
  if (elw_status s = require(token && out_radians, "null argument"); s != ELW_OK) return s;
  return guarded([&] { *out_radians = elw::parse_angle(token); });
}

}  // extern "C"
