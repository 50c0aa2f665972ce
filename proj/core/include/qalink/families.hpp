#pragma once

#include <string>
#include <vector>

#include "qalink/diagram.hpp"
#include "qalink/qa.hpp"
#include "qalink/slopes.hpp"
#include "qalink/tangle.hpp"

namespace qalink {

// A framed tangle whose two elementary closures (slopes 1/0 and 0) carry
// certified quasi-alternating diagrams. invariants are measured from those
// closures and drive the determinant prediction for every other fill.
// fractions records the cone fractions beta/alpha of the rational summands
// when the tangle was assembled as a sum; seifert_built marks tangles
// eligible for iterate_fill.
struct FramedQATangle {
  Tangle tangle;
  FramedTangleInvariants invariants;
  std::string provenance;
  std::vector<Slope> fractions;
  bool seifert_built = false;
};

// Measures det(closure(t, 1/0)) and det(closure(t, 0)), checks the additivity
// det(closure(t, 1)) = d_inf + d_zero, then certifies and re-verifies both
// elementary closures. Throws std::runtime_error when any gate fails.
FramedQATangle make_framed_qa_tangle(Tangle t, std::string provenance);

// The fixed quotient tangle T' of the (-2, 3, q) pretzel family: invariants
// (c, d_inf, d_zero) = (1, 4, 11), so det(closure(·, n)) = 4n + 11. The
// underlying tangle is the same for every q; the branch set of the odd
// pretzel P_q arises as the fill n = (q-3)/2.
FramedQATangle pretzel_quotient_tangle(int q);

// Sum of rational tangles with cone fractions beta/alpha (Slope{beta, alpha},
// alpha >= 2, beta != 0) plus framing twists.
FramedQATangle seifert_tangle(const std::vector<Slope>& fractions, int frame);

// Appends one rational summand with cone order p = r.p, numerator chosen
// (smallest |x|, gcd(|x|, p) = 1) so that the new d_inf equals the measured
// det(closure(t, r)); the new d_zero is the old one times p. Requires a
// seifert-built tangle and a finite positive slope.
FramedQATangle iterate_fill(const FramedQATangle& t, const Slope& r);

struct FamilyRow {
  Slope slope;
  long long det = 0;
  long long pred = 0;
  std::string split = "-";  // "a+b" from the final-crossing resolution
  bool det_ok = false;
  bool split_ok = false;
  bool cert_ok = false;
  bool pass() const { return det_ok && split_ok && cert_ok; }
};

struct FamilyReport {
  std::string provenance;
  std::vector<FamilyRow> rows;
  bool all_pass = false;
};

// Sweeps slope 1/0 plus every reduced p/q with 0 <= p <= max_p and
// 1 <= q <= max_q (sorted by (q, p)). Each row checks measured determinant
// against p*d_inf + q*d_zero, checks the two smoothings of the innermost
// ladder crossing against the truncated-slope predictions, and certifies
// and re-verifies the closure. Requires max_p >= 1, max_q >= 0.
FamilyReport verify_family(const FramedQATangle& t, int max_p, int max_q);

std::string report_to_text(const FamilyReport& r);
std::string report_to_json(const FamilyReport& r);

}  // namespace qalink
