#ifndef ELW_CORE_PAPER_TABLES_HPP
#define ELW_CORE_PAPER_TABLES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gate.hpp"
#include "stability.hpp"
#include "types.hpp"

namespace elw {

// One line of the generator-table data file.
struct TableEntry {
  std::string case_id;  // "max-i" .. "gen-iii"
  int index = 0;        // 1-based position within its case
  GateParams params;
  GeneratorCombo combo;

  std::string name() const;  // "max-i/G4"
};

// Line format: <case-id> <tau> <rho> <sigma> <sign> <c1..c8>, '#' comments.
// Throws parse_error on malformed lines, io_error for an unreadable path.
std::vector<TableEntry> parse_generator_tables(std::istream& in);
std::vector<TableEntry> load_generator_tables(const std::string& path);

// The copy compiled into the library (identical to data/generator_tables.dat).
const std::vector<TableEntry>& embedded_generator_tables();
const char* embedded_generator_tables_text();

}  // namespace elw

#endif
