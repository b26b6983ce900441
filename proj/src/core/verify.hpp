#ifndef ELW_CORE_VERIFY_HPP
#define ELW_CORE_VERIFY_HPP

#include <string>
#include <vector>

#include "paper_tables.hpp"

namespace elw {

struct VerifyGroup {
  std::string name;
  int passed = 0;
  int total = 0;
  std::string detail;  // first failure, or a summary value
  bool ok() const { return passed == total; }
};

struct VerifyReport {
  std::vector<VerifyGroup> groups;
  bool ok() const {
    for (const VerifyGroup& g : groups)
      if (!g.ok()) return false;
    return true;
  }
};

// The published-results regression: maximal families, generator residuals,
// span matches, stability dimensions, and the mixed-strategy witness.
VerifyReport verify_paper(const std::vector<TableEntry>& tables);

}  // namespace elw

#endif
