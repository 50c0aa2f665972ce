#include "qalink/paper_check.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qalink/determinant.hpp"
#include "qalink/families.hpp"
#include "qalink/qa.hpp"
#include "qalink/slopes.hpp"
#include "qalink/tangle.hpp"

namespace qalink {

namespace {

std::string cf_text(const ContinuedFraction& terms) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < terms.size(); ++i) out << (i ? "," : "") << terms[i];
  out << ']';
  return out.str();
}

long long det_at(const FramedQATangle& t, const Slope& r) {
  Int v = determinant(closure(t.tangle, r));
  return static_cast<long long>(v);
}

std::string root_split(const FramedQATangle& t, const Slope& r) {
  auto cert = certify_qa(closure(t.tangle, r));
  if (!cert) return "inconclusive";
  const QACertificate::Node& root = *cert->root;
  if (root.base) return "leaf";
  if (!verify_certificate(*cert)) return "certificate failed verification";
  return std::to_string(root.children[0]->det) + "+" + std::to_string(root.children[1]->det);
}

// Two smoothings of the innermost ladder crossing, larger determinant first.
std::string resolution_split(const FramedQATangle& t, const Slope& r) {
  TangleClosure tc = closure_layout(t.tangle, r);
  if (!tc.final_ladder_crossing) return "no ladder crossing";
  long long d0 =
      static_cast<long long>(determinant(resolve_crossing(tc.diagram, *tc.final_ladder_crossing, 0)));
  long long d1 =
      static_cast<long long>(determinant(resolve_crossing(tc.diagram, *tc.final_ladder_crossing, 1)));
  auto [lo, hi] = std::minmax(d0, d1);
  return std::to_string(hi) + "+" + std::to_string(lo);
}

}  // namespace

PaperCheckReport run_paper_check(const PaperCheckOptions& opts) {
  PaperCheckReport rep;
  auto add = [&rep](const std::string& name, const std::string& expected,
                    const std::string& computed) {
    rep.rows.push_back({name, expected, computed, expected == computed});
  };

  add("cf 13/10", "[1,3,3]", cf_text(cf_expand(make_slope(13, 10))));
  add("cf 7/3", "[2,3]", cf_text(cf_expand(make_slope(7, 3))));
  add("cf 13/9", "[1,2,4]", cf_text(cf_expand(make_slope(13, 9))));

  {
    long long fails = 0;
    for (long long p = 0; p <= 200; ++p)
      for (long long q = 1; q <= 200; ++q) {
        if (std::gcd(p, q) != 1) continue;
        Slope r{p, q};
        if (cf_evaluate(cf_expand(r)) != r) ++fails;
      }
    if (cf_evaluate(cf_expand(Slope{1, 0})) != (Slope{1, 0})) ++fails;
    add("cf round-trip, all p/q up to 200", "0 failures", std::to_string(fails) + " failures");
  }
  {
    long long fails = 0;
    for (long long p = 0; p <= 200; ++p)
      for (long long q = 1; q <= 200; ++q) {
        if (std::gcd(p, q) != 1) continue;
        ContinuedFraction terms = cf_expand(Slope{p, q});
        if (terms.empty() || terms.size() > 6) continue;
        auto [r0, r1] = cf_resolve_last(terms);
        if (r0.p + r1.p != p || r0.q + r1.q != q) ++fails;
      }
    add("cf mediant of resolve-last, expansions up to 6 terms", "0 failures",
        std::to_string(fails) + " failures");
  }

  FramedQATangle pretzel =
      opts.corrupt_pretzel_for_test
          ? make_framed_qa_tangle(rational_tangle(make_slope(10, 3)),
                                  "corrupted pretzel template (negative control)")
          : pretzel_quotient_tangle(3);
  add("pretzel det at 1/0", "4", std::to_string(det_at(pretzel, Slope{1, 0})));
  add("pretzel det at 0", "11", std::to_string(det_at(pretzel, Slope{0, 1})));
  add("pretzel det at 1", "15", std::to_string(det_at(pretzel, Slope{1, 1})));
  add("pretzel certificate root split at 1", "11+4", root_split(pretzel, Slope{1, 1}));
  {
    std::ostringstream bad;
    for (long long n = 0; n <= 10; ++n)
      if (det_at(pretzel, Slope{n, 1}) != 4 * n + 11) bad << ' ' << n;
    add("pretzel integer fills 0..10 give 4n+11", "ok",
        bad.str().empty() ? "ok" : "mismatch at" + bad.str());
  }
  add("pretzel c", "1", std::to_string(pretzel.invariants.c));

  FramedQATangle base = seifert_tangle({Slope{1, 2}, Slope{-1, 5}}, 0);
  add("Seifert base c", "1", std::to_string(base.invariants.c));
  add("Seifert base det at 1/0", "3", std::to_string(det_at(base, Slope{1, 0})));
  add("Seifert base det at 0", "10", std::to_string(det_at(base, Slope{0, 1})));
  add("Seifert base det at 1", "13", std::to_string(det_at(base, Slope{1, 1})));
  add("Seifert base det at 7/3", "51", std::to_string(det_at(base, Slope{7, 3})));
  add("Seifert base final-crossing split at 7/3", "35+16", resolution_split(base, Slope{7, 3}));

  FramedQATangle iterated = iterate_fill(base, Slope{7, 3});
  add("iterated fill 7/3: d_inf", "51", std::to_string(iterated.invariants.d_inf));
  add("iterated fill 7/3: d_zero", "70", std::to_string(iterated.invariants.d_zero));
  add("iterated det at 13/9", "1293", std::to_string(det_at(iterated, Slope{13, 9})));

  {
    long long fails = 0;
    for (long long p = 2; p <= 50; ++p)
      for (long long q = 2; q <= 7; ++q) {
        if (std::gcd(p, q) != 1) continue;
        CableImage ci = cable_image_slope(p, q, 1, -1);
        if (ci.r != make_slope(p * q - 1, 1) || ci.image != make_slope(p * q - 1, q * q)) ++fails;
      }
    add("cable image of pq-1 surgery is (pq-1)/q^2", "0 failures",
        std::to_string(fails) + " failures");
  }
  {
    long long fails = 0;
    for (long long q = 2; q <= 7; ++q) {
      Slope prev{0, 1};
      bool have_prev = false;
      for (long long p = 2; p <= 50; ++p) {
        if (std::gcd(p, q) != 1) continue;
        Slope image = cable_image_slope(p, q, 1, -1).image;
        if (have_prev && image.p * prev.q <= prev.p * image.q) ++fails;
        prev = image;
        have_prev = true;
      }
    }
    add("cable image monotone in p", "0 failures", std::to_string(fails) + " failures");
  }
  add("orbifold for cone (2,5), fill distance 7", "S2(2,5,7)",
      heil_orbifold({2, 5}, make_slope(1, 7), make_slope(1, 0)));

  rep.all_pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                             [](const PaperCheckRow& r) { return r.pass; });
  return rep;
}

std::string paper_check_to_text(const PaperCheckReport& r) {
  std::ostringstream out;
  for (const PaperCheckRow& row : r.rows)
    out << (row.pass ? "ok   " : "FAIL ") << row.name << ": expected " << row.expected
        << ", computed " << row.computed << '\n';
  out << (r.all_pass ? "all checks pass" : "some checks FAILED") << '\n';
  return out.str();
}

}  // namespace qalink
