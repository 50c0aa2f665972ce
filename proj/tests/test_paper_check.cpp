#include <doctest.h>

#include <string>

#include "qalink/paper_check.hpp"

using namespace qalink;

TEST_CASE("consistency sweep passes on the real constructions") {
  PaperCheckReport report = run_paper_check();
  CHECK(report.all_pass);
  CHECK(report.rows.size() >= 15);
  for (const PaperCheckRow& row : report.rows) CHECK(row.pass);
  std::string text = paper_check_to_text(report);
  CHECK(text.find("all checks pass") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("the sweep is not a rubber stamp") {
  // swap in a wrong quotient tangle: the construction still builds (10/3 is a
  // fine framed tangle) but the family determinants no longer match.
  PaperCheckOptions opts;
  opts.corrupt_pretzel_for_test = true;
  PaperCheckReport report = run_paper_check(opts);
  CHECK_FALSE(report.all_pass);
  int failing = 0;
  for (const PaperCheckRow& row : report.rows)
    if (!row.pass) ++failing;
  CHECK(failing >= 3);
  std::string text = paper_check_to_text(report);
  CHECK(text.find("some checks FAILED") != std::string::npos);
}
