// elw-cli: classification, scans, stability reports, payoffs,
// counterstrategy demos, mixed-strategy feasibility, and the verify-paper
// regression. Talks to the library exclusively through the C API.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "elw/elw.h"

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(elw_status status, int exit_code = kExitDomain) {
  if (status == ELW_OK) return;
  die(exit_code, std::string(elw_status_string(status)) + ": " + elw_last_error());
}

// Counter-based generator, reproducible for a fixed --seed.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_angle_or_die(const std::string& token, bool degrees) {
  double v = 0;
  if (elw_parse_angle(token.c_str(), &v) != ELW_OK)
    die(kExitUsage, "bad angle '" + token + "'");
  if (degrees && token.find("pi") == std::string::npos) v *= kPi / 180.0;
  return v;
}

struct Options {
  elw_config config;
  double tol = 1e-8;
  uint64_t seed = 0;
  bool json_output = false;
  bool degrees = false;
  double payoff_a[9] = {1, 0, 2, 2, 1, 0, 0, 2, 1};
  double payoff_b[9] = {1, 2, 0, 0, 1, 2, 2, 0, 1};
};

double json_angle(const json& value, bool degrees) {
  if (value.is_string()) return parse_angle_or_die(value.get<std::string>(), degrees);
  if (value.is_number()) {
    double v = value.get<double>();
    return degrees ? v * kPi / 180.0 : v;
  }
  die(kExitUsage, "angle values must be numbers or angle strings");
}

void load_config_file(const std::string& path, Options& opt) {
  std::ifstream in(path);
  if (!in) die(kExitUsage, "cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    die(kExitUsage, std::string("config parse error: ") + e.what());
  }
  for (const char* key : {"tau", "rho", "sigma", "phi2", "phi3"}) {
    if (!doc.contains(key)) continue;
    const double v = json_angle(doc[key], opt.degrees);
    if (std::string(key) == "tau") opt.config.tau = v;
    else if (std::string(key) == "rho") opt.config.rho = v;
    else if (std::string(key) == "sigma") opt.config.sigma = v;
    else if (std::string(key) == "phi2") opt.config.phi2 = v;
    else opt.config.phi3 = v;
  }
  if (doc.contains("epsilon")) {
    const std::string e = doc["epsilon"].get<std::string>();
    if (e == "plus") opt.config.epsilon_minus = 0;
    else if (e == "minus") opt.config.epsilon_minus = 1;
    else die(kExitUsage, "epsilon must be \"plus\" or \"minus\"");
  }
  auto load_matrix = [&](const char* key, double* dst) {
    if (!doc.contains(key)) return;
    const json& m = doc[key];
    if (!m.is_array() || m.size() != 3)
      die(kExitUsage, std::string(key) + " must be a 3x3 array");
    for (int i = 0; i < 3; ++i) {
      if (!m[i].is_array() || m[i].size() != 3)
        die(kExitUsage, std::string(key) + " must be a 3x3 array");
      for (int j = 0; j < 3; ++j) dst[3 * i + j] = m[i][j].get<double>();
    }
  };
  load_matrix("payoff_a", opt.payoff_a);
  load_matrix("payoff_b", opt.payoff_b);
}

struct GameHandle {
  elw_game* game = nullptr;
  explicit GameHandle(const elw_config& cfg) {
    check(elw_game_create(&cfg, &game), kExitUsage);
  }
  ~GameHandle() { elw_game_destroy(game); }
  GameHandle(const GameHandle&) = delete;
  GameHandle& operator=(const GameHandle&) = delete;
};

json matrix_json(const double m[18]) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j)
      row.push_back({m[2 * (3 * i + j)], m[2 * (3 * i + j) + 1]});
    rows.push_back(row);
  }
  return rows;
}

json probabilities_json(const double p[9]) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(p[3 * i + j]);
    rows.push_back(row);
  }
  return rows;
}

json params_json(const elw_config& cfg) {
  return {{"tau", cfg.tau}, {"rho", cfg.rho}, {"sigma", cfg.sigma}};
}

const char* kind_name(elw_entanglement_kind k) {
  switch (k) {
    case ELW_ENTANGLEMENT_MAXIMAL: return "Maximal";
    case ELW_ENTANGLEMENT_TWO_EQUAL: return "TwoEqual";
    case ELW_ENTANGLEMENT_GENERIC: return "Generic";
  }
  return "?";
}

// Strategy spec: U1|U2|U3, or eight comma-separated exponent coefficients,
// or "random" (draws from the seeded stream).
void resolve_strategy(const std::string& spec, const GameHandle& game,
                      SplitMix64& rng, double out[18]) {
  if (spec == "U1" || spec == "U2" || spec == "U3") {
    check(elw_game_classical_unitary(game.game, spec[1] - '0', out), kExitUsage);
    return;
  }
  double coeffs[8];
  if (spec == "random") {
    for (double& c : coeffs) c = rng.uniform(-2, 2);
  } else {
    std::stringstream ss(spec);
    std::string tok;
    int n = 0;
    while (std::getline(ss, tok, ',')) {
      if (n >= 8) die(kExitUsage, "strategy needs exactly 8 coefficients");
      try {
        coeffs[n++] = std::stod(tok);
      } catch (...) {
        die(kExitUsage, "bad strategy coefficient '" + tok + "'");
      }
    }
    if (n != 8) die(kExitUsage, "strategy needs exactly 8 coefficients");
  }
  check(elw_strategy_from_coeffs(coeffs, out), kExitUsage);
}

int cmd_classify(const Options& opt) {
  GameHandle game(opt.config);
  elw_entanglement e;
  check(elw_game_classify(game.game, opt.tol, &e));
  json out = {
      {"params", params_json(opt.config)},
      {"eigenvalues", {e.eigenvalues[0], e.eigenvalues[1], e.eigenvalues[2]}},
      {"class", kind_name(e.kind)},
      {"gaps", {e.gaps[0], e.gaps[1]}},
      {"singular", e.singular != 0},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct Axis {
  double min = 0, max = 0;
  int steps = 1;
  double at(int i) const {
    return steps == 1 ? min : min + (max - min) * i / (steps - 1);
  }
};

int cmd_scan(const Options& opt, const Axis& tau, const Axis& rho, const Axis& sigma) {
  for (const Axis* a : {&tau, &rho, &sigma})
    if (a->steps < 1 || a->min > a->max)
      die(kExitUsage, "scan axes need steps >= 1 and min <= max");

  std::printf("tau,rho,sigma,ev1,ev2,ev3,class,stab_dim\n");
  for (int i = 0; i < tau.steps; ++i)
    for (int j = 0; j < rho.steps; ++j)
      for (int k = 0; k < sigma.steps; ++k) {
        elw_config cfg = opt.config;
        cfg.tau = tau.at(i);
        cfg.rho = rho.at(j);
        cfg.sigma = sigma.at(k);
        GameHandle game(cfg);
        elw_entanglement e;
        check(elw_game_classify(game.game, opt.tol, &e));
        elw_stability s;
        check(elw_game_stability(game.game, opt.tol, &s));
        std::printf("%s,%s,%s,%s,%s,%s,%s,%d\n", format_double(cfg.tau).c_str(),
                    format_double(cfg.rho).c_str(),
                    format_double(cfg.sigma).c_str(),
                    format_double(e.eigenvalues[0]).c_str(),
                    format_double(e.eigenvalues[1]).c_str(),
                    format_double(e.eigenvalues[2]).c_str(), kind_name(e.kind),
                    s.dim);
      }
  return 0;
}

int cmd_stability(const Options& opt) {
  GameHandle game(opt.config);
  elw_stability s;
  check(elw_game_stability(game.game, opt.tol, &s));
  json gens = json::array();
  for (int i = 0; i < s.dim && i < ELW_STABILITY_MAX_DIM; ++i) {
    json coeffs = json::array();
    for (int j = 0; j < 8; ++j) coeffs.push_back(s.combos[i][j]);
    gens.push_back({{"sign", i < s.n_even ? "+" : "-"}, {"coeffs", coeffs}});
  }
  json out = {
      {"params", params_json(opt.config)},
      {"dim", s.dim},
      {"n_even", s.n_even},
      {"n_odd", s.n_odd},
      {"generators", gens},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_payoff(const Options& opt, const std::string& spec_a,
               const std::string& spec_b) {
  GameHandle game(opt.config);
  SplitMix64 rng(opt.seed);
  double ua[18], ub[18], probs[9], pa = 0, pb = 0;
  resolve_strategy(spec_a, game, rng, ua);
  resolve_strategy(spec_b, game, rng, ub);
  check(elw_game_outcomes(game.game, ua, ub, probs));
  check(elw_game_payoffs(game.game, ua, ub, opt.payoff_a, opt.payoff_b, &pa, &pb));
  json out = {
      {"params", params_json(opt.config)},
      {"probabilities", probabilities_json(probs)},
      {"payoff_a", pa},
      {"payoff_b", pb},
  };
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_counter(const Options& opt, const std::string& spec_actual,
                const std::string& spec_a, const std::string& spec_b) {
  GameHandle game(opt.config);
  SplitMix64 rng(opt.seed);
  double v[18], ua[18], ub[18], w[18];
  resolve_strategy(spec_actual, game, rng, v);
  resolve_strategy(spec_a, game, rng, ua);
  resolve_strategy(spec_b, game, rng, ub);
  check(elw_game_counterstrategy(game.game, v, ua, ub, w));

  double target[9], counter[9];
  check(elw_game_outcomes(game.game, ua, ub, target));
  check(elw_game_outcomes(game.game, v, w, counter));
  double max_diff = 0;
  for (int i = 0; i < 9; ++i)
    max_diff = std::max(max_diff, std::abs(target[i] - counter[i]));

  json out = {
      {"params", params_json(opt.config)},
      {"countermove", matrix_json(w)},
      {"target_probabilities", probabilities_json(target)},
      {"counter_probabilities", probabilities_json(counter)},
      {"max_probability_diff", max_diff},
      {"matched", max_diff <= 1e-10},
  };
  std::cout << out.dump(2) << "\n";
  return out["matched"].get<bool>() ? 0 : kExitVerifyFailed;
}

int cmd_mixed(const Options& opt, double p1, double p2) {
  (void)opt;
  elw_mixed_result r;
  check(elw_mixed_feasibility(p1, p2, &r));
  json witnesses = json::array();
  for (int i = 0; i < r.n_witnesses; ++i) {
    json w = {{"gamma", r.witnesses[i].gamma},
              {"singular", r.witnesses[i].singular != 0}};
    if (!r.witnesses[i].singular) w["cos_delta"] = r.witnesses[i].cos_delta;
    witnesses.push_back(w);
  }
  json out = {
      {"p1", p1},
      {"p2", p2},
      {"feasible", r.feasible != 0},
      {"cos_delta", r.best_cos_delta},
      {"witnesses", witnesses},
  };
  if (r.feasible) {
    out["alpha"] = r.alpha;
    out["beta"] = r.beta;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify_paper(const std::string& tables_path, bool json_output) {
  elw_verify_report report;
  check(elw_verify_paper(tables_path.empty() ? nullptr : tables_path.c_str(),
                         &report),
        kExitUsage);
  if (json_output) {
    json groups = json::array();
    for (int i = 0; i < report.n_groups; ++i) {
      groups.push_back({{"name", report.groups[i].name},
                        {"passed", report.groups[i].passed},
                        {"total", report.groups[i].total},
                        {"detail", report.groups[i].detail}});
    }
    json out = {{"ok", report.ok != 0}, {"groups", groups}};
    std::cout << out.dump(2) << "\n";
  } else {
    const char* labels[] = {"maximal triples", "generators", "parameter points",
                            "points", "witness"};
    for (int i = 0; i < report.n_groups; ++i) {
      const elw_verify_group& g = report.groups[i];
      std::printf("%s %-20s %d/%d %s%s%s\n",
                  g.passed == g.total ? "PASS" : "FAIL", g.name, g.passed,
                  g.total, i < 5 ? labels[i] : "", g.detail[0] ? " -- " : "",
                  g.detail);
    }
    std::printf("RESULT: %s\n", report.ok ? "PASS" : "FAIL");
  }
  return report.ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-strategy quantum-game entangler toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  elw_config_default(&opt.config);

  std::string config_path;
  std::string tau_s, rho_s, sigma_s, phi2_s, phi3_s, epsilon_s;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--tau", tau_s, "entangler parameter tau (angle token)");
  app.add_option("--rho", rho_s, "entangler parameter rho");
  app.add_option("--sigma", sigma_s, "entangler parameter sigma");
  app.add_option("--phi2", phi2_s, "classical phase phi2");
  app.add_option("--phi3", phi3_s, "classical phase phi3");
  app.add_option("--epsilon", epsilon_s, "cube root of unity: plus|minus");
  app.add_option("--tol", opt.tol, "numerical tolerance");
  app.add_option("--seed", opt.seed, "seed for random strategies");
  app.add_flag("--deg", opt.degrees, "plain numeric angles are degrees");
  app.add_flag("--json", opt.json_output, "machine-readable output where applicable");

  auto* classify = app.add_subcommand("classify", "entanglement class of the initial state");

  auto* scan = app.add_subcommand("scan", "CSV grid scan over the parameters");
  std::string ax_min[3], ax_max[3];
  int ax_steps[3] = {1, 1, 1};
  const char* ax_names[3] = {"tau", "rho", "sigma"};
  for (int i = 0; i < 3; ++i) {
    const std::string base = std::string("--") + ax_names[i];
    scan->add_option(base + "-min", ax_min[i], "axis lower bound (angle token)");
    scan->add_option(base + "-max", ax_max[i], "axis upper bound (angle token)");
    scan->add_option(base + "-steps", ax_steps[i], "number of grid points");
  }

  auto* stability = app.add_subcommand("stability", "stability subalgebra report");

  auto* payoff = app.add_subcommand("payoff", "expected payoffs for a strategy pair");
  std::string strat_a = "U1", strat_b = "U1";
  payoff->add_option("--strategy-a", strat_a, "U1|U2|U3, 8 coefficients, or random");
  payoff->add_option("--strategy-b", strat_b, "U1|U2|U3, 8 coefficients, or random");

  auto* counter = app.add_subcommand("counter", "counterstrategy demo at a maximal point");
  std::string actual = "random", target_a = "random", target_b = "random";
  counter->add_option("--actual", actual, "Alice's actual move");
  counter->add_option("--target-a", target_a, "target move for Alice");
  counter->add_option("--target-b", target_b, "target move for Bob");

  auto* mixed = app.add_subcommand("mixed", "mixed-strategy feasibility");
  double p1 = 0, p2 = 0;
  mixed->add_option("--p1", p1, "target probability of strategy 1")->required();
  mixed->add_option("--p2", p2, "target probability of strategy 2")->required();

  auto* verify = app.add_subcommand("verify-paper", "published-results regression");
  std::string tables_path;
  verify->add_option("--tables", tables_path, "generator table file (default: embedded)");
  bool verify_json = false;
  verify->add_flag("--json", verify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, opt);
    if (!tau_s.empty()) opt.config.tau = parse_angle_or_die(tau_s, opt.degrees);
    if (!rho_s.empty()) opt.config.rho = parse_angle_or_die(rho_s, opt.degrees);
    if (!sigma_s.empty()) opt.config.sigma = parse_angle_or_die(sigma_s, opt.degrees);
    if (!phi2_s.empty()) opt.config.phi2 = parse_angle_or_die(phi2_s, opt.degrees);
    if (!phi3_s.empty()) opt.config.phi3 = parse_angle_or_die(phi3_s, opt.degrees);
    if (!epsilon_s.empty()) {
      if (epsilon_s == "plus") opt.config.epsilon_minus = 0;
      else if (epsilon_s == "minus") opt.config.epsilon_minus = 1;
      else die(kExitUsage, "epsilon must be plus or minus");
    }

    if (classify->parsed()) return cmd_classify(opt);
    if (scan->parsed()) {
      Axis axes[3];
      const double base[3] = {opt.config.tau, opt.config.rho, opt.config.sigma};
      for (int i = 0; i < 3; ++i) {
        axes[i].min = ax_min[i].empty() ? base[i]
                                        : parse_angle_or_die(ax_min[i], opt.degrees);
        axes[i].max = ax_max[i].empty() ? axes[i].min
                                        : parse_angle_or_die(ax_max[i], opt.degrees);
        axes[i].steps = ax_steps[i];
      }
      return cmd_scan(opt, axes[0], axes[1], axes[2]);
    }
    if (stability->parsed()) return cmd_stability(opt);
    if (payoff->parsed()) return cmd_payoff(opt, strat_a, strat_b);
    if (counter->parsed()) return cmd_counter(opt, actual, target_a, target_b);
    if (mixed->parsed()) return cmd_mixed(opt, p1, p2);
    if (verify->parsed())
      return cmd_verify_paper(tables_path, verify_json || opt.json_output);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
