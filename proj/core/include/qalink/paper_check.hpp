#pragma once

#include <string>
#include <vector>

namespace qalink {

// One-shot audit of every reference constant the library is built around:
// family determinants, certificate splits, continued-fraction identities and
// surgery arithmetic. Backs the `paper-check` CLI command.
struct PaperCheckRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct PaperCheckReport {
  std::vector<PaperCheckRow> rows;
  bool all_pass = false;
};

struct PaperCheckOptions {
  // Swaps the pretzel template for a wrong tangle so the pretzel rows fail;
  // negative control used by the tests.
  bool corrupt_pretzel_for_test = false;
};

PaperCheckReport run_paper_check(const PaperCheckOptions& opts = {});

std::string paper_check_to_text(const PaperCheckReport& r);

}  // namespace qalink
