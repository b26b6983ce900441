#include "paper_tables.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "parse.hpp"

namespace elw {

std::string TableEntry::name() const {
  return case_id + "/G" + std::to_string(index);
}

std::vector<TableEntry> parse_generator_tables(std::istream& in) {
  std::vector<TableEntry> entries;
  std::map<std::string, int> counters;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string case_id;
    if (!(ss >> case_id)) continue;  // blank line

    auto bad = [&](const std::string& what) {
      fail(ErrorCode::parse_error,
           "generator table line " + std::to_string(lineno) + ": " + what);
    };

    std::string tau, rho, sigma, sign;
    if (!(ss >> tau >> rho >> sigma >> sign)) bad("missing fields");

    TableEntry e;
    e.case_id = case_id;
    e.index = ++counters[case_id];
    e.params = GateParams(parse_angle(tau), parse_angle(rho), parse_angle(sigma));
    if (sign == "+")
      e.combo.sign = +1;
    else if (sign == "-")
      e.combo.sign = -1;
    else
      bad("sign must be + or -");
    for (int i = 0; i < 8; ++i) {
      std::string tok;
      if (!(ss >> tok)) bad("expected 8 coefficients");
      e.combo.x(i) = parse_coefficient(tok);
    }
    std::string extra;
    if (ss >> extra) bad("trailing token '" + extra + "'");
    if (e.combo.x.norm() == 0.0) bad("zero generator");
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<TableEntry> load_generator_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open generator table file: " + path);
  return parse_generator_tables(in);
}

const std::vector<TableEntry>& embedded_generator_tables() {
  static const std::vector<TableEntry> entries = [] {
    std::istringstream ss(embedded_generator_tables_text());
    return parse_generator_tables(ss);
  }();
  return entries;
}

}  // namespace elw
