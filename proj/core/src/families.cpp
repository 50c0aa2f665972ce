#include "qalink/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "qalink/determinant.hpp"
#include "qa_internal.hpp"

namespace qalink {

namespace {

constexpr int kClosureBudget = 10000;

long long measured_det(const LinkDiagram& d) {
  Int v = determinant(d);
  if (v > Int(std::numeric_limits<long long>::max()))
    throw std::overflow_error("determinant does not fit in long long");
  return static_cast<long long>(v);
}

// Rational summand whose tangle fraction equals the cone fraction beta/alpha.
Tangle fraction_summand(const Slope& f) {
  long long beta = f.p, alpha = f.q;
  if (alpha < 1 || beta == 0)
    throw std::invalid_argument("cone fraction must have alpha >= 1, beta != 0");
  return rational_tangle(make_slope(beta < 0 ? -alpha : alpha, std::llabs(beta)));
}

// Formal fraction of the summand list followed by the framing twists; kept
// unreduced so the denominator stays the product of the cone orders.
std::pair<long long, long long> formal_fraction(const std::vector<Slope>& fractions,
                                                int framing) {
  long long n = 0, d = 1;
  for (const Slope& f : fractions) {
    n = n * f.q + f.p * d;
    d *= f.q;
  }
  d += static_cast<long long>(framing) * n;
  return {n, d};
}

void certify_closure(detail::CertifyContext& ctx, const LinkDiagram& d,
                     const std::string& what) {
  auto node = detail::certify_with_context(ctx, d, kClosureBudget);
  if (!node || !verify_certificate(QACertificate{node}))
    throw std::runtime_error("closure " + what + " is not certifiably quasi-alternating");
}

// Measurement + certification gate shared by every constructor.
FramedQATangle finish(FramedQATangle t) {
  validate_tangle(t.tangle);
  LinkDiagram inf_closure = closure(t.tangle, Slope{1, 0});
  LinkDiagram zero_closure = closure(t.tangle, Slope{0, 1});
  long long d_inf = measured_det(inf_closure);
  long long d_zero = measured_det(zero_closure);
  t.invariants = make_invariants(d_inf, d_zero);

  if (!t.fractions.empty()) {
    auto [n, d] = formal_fraction(t.fractions, t.tangle.framing);
    if (std::llabs(n) != d_inf || std::llabs(d) != d_zero)
      throw std::logic_error("summand bookkeeping disagrees with measured closures");
  }

  long long d_one = measured_det(closure(t.tangle, Slope{1, 1}));
  if (d_one != d_inf + d_zero)
    throw std::runtime_error("framing is not additive: det(closure(1)) = " +
                             std::to_string(d_one) + ", expected " +
                             std::to_string(d_inf + d_zero));

  detail::CertifyContext ctx;
  certify_closure(ctx, inf_closure, "1/0");
  certify_closure(ctx, zero_closure, "0");
  return t;
}

}  // namespace

FramedQATangle make_framed_qa_tangle(Tangle t, std::string provenance) {
  FramedQATangle out;
  out.tangle = std::move(t);
  out.provenance = std::move(provenance);
  return finish(std::move(out));
}

FramedQATangle pretzel_quotient_tangle(int q) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("pretzel_quotient_tangle: q must be odd and >= 3");
  // Quotient of the (-2, 3, q) pretzel by its strong inversion: the sum of a
  // -7/11 tangle and a single positive half-twist. The only facts the rest of
  // the pipeline relies on are behavioral — closures 4 and 11, fill additivity
  // 4n + 11 — and they are re-measured and re-certified here on every call.
  FramedQATangle out;
  out.fractions = {Slope{-7, 11}, Slope{1, 1}};
  out.tangle = tangle_sum(fraction_summand(out.fractions[0]), fraction_summand(out.fractions[1]));
  std::ostringstream prov;
  prov << "pretzel T' (q=" << q << ", fill n=" << (q - 3) / 2 << ")";
  out.provenance = prov.str();
  return finish(std::move(out));
}

FramedQATangle seifert_tangle(const std::vector<Slope>& fractions, int frame) {
  if (fractions.empty())
    throw std::invalid_argument("seifert_tangle: need at least one fraction");
  FramedQATangle out;
  for (const Slope& f : fractions) {
    Slope s = make_slope(f.p, f.q);
    if (s.q < 2 || s.p == 0)
      throw std::invalid_argument("seifert_tangle: fraction " + to_string(f) +
                                  " must have denominator >= 2");
    out.fractions.push_back(s);
  }
  Tangle sum = fraction_summand(out.fractions[0]);
  for (size_t i = 1; i < out.fractions.size(); ++i)
    sum = tangle_sum(sum, fraction_summand(out.fractions[i]));
  out.tangle = add_framing_twists(sum, frame);
  out.seifert_built = true;
  std::ostringstream prov;
  prov << "Seifert tangle (";
  for (size_t i = 0; i < out.fractions.size(); ++i)
    prov << (i ? ", " : "") << to_string(out.fractions[i]);
  prov << "; frame " << frame << ")";
  out.provenance = prov.str();
  return finish(std::move(out));
}

FramedQATangle iterate_fill(const FramedQATangle& t, const Slope& r) {
  if (!t.seifert_built)
    throw std::invalid_argument("iterate_fill: tangle was not built by seifert_tangle");
  Slope s = make_slope(r.p, r.q);
  if (s.p < 1 || s.q < 1)
    throw std::invalid_argument("iterate_fill: slope must be finite and positive");

  long long measured = measured_det(closure(t.tangle, s));
  if (measured < 1) throw std::runtime_error("iterate_fill: filled closure has determinant 0");

  // New summand x/p with |n*p + x*d| = measured: two sign branches, keep the
  // admissible x of smallest magnitude (positive on ties).
  auto [n, d] = formal_fraction(t.fractions, t.tangle.framing);
  std::optional<long long> best;
  for (long long target : {measured, -measured}) {
    long long num = target - n * s.p;
    if (num % d != 0) continue;
    long long x = num / d;
    if (x == 0 || std::gcd(std::llabs(x), s.p) != 1) continue;
    if (!best || std::llabs(x) < std::llabs(*best) ||
        (std::llabs(x) == std::llabs(*best) && x > *best))
      best = x;
  }
  if (!best)
    throw std::runtime_error("iterate_fill: no admissible summand numerator for fill " +
                             to_string(s));

  Slope new_fraction{*best, s.p};
  FramedQATangle out;
  out.tangle = tangle_sum(t.tangle, fraction_summand(new_fraction));
  out.fractions = t.fractions;
  out.fractions.push_back(new_fraction);
  out.seifert_built = true;
  out.provenance = t.provenance + " + fill " + to_string(s);
  out = finish(std::move(out));

  if (out.invariants.d_inf != measured || out.invariants.d_zero != t.invariants.d_zero * s.p)
    throw std::runtime_error("iterate_fill: invariants of the filled tangle do not match");
  return out;
}

namespace {

std::string split_text(long long a, long long b) {
  return std::to_string(a) + "+" + std::to_string(b);
}

FamilyRow check_slope(detail::CertifyContext& ctx, const FramedQATangle& t, const Slope& r) {
  FamilyRow row;
  row.slope = r;
  TangleClosure tc = closure_layout(t.tangle, r);
  row.det = detail::cached_det(ctx, tc.diagram, to_pd(tc.diagram));
  row.pred = predicted_det(t.invariants, r);
  row.det_ok = row.det == row.pred;

  if (tc.final_ladder_crossing) {
    int c = *tc.final_ladder_crossing;
    LinkDiagram d0 = resolve_crossing(tc.diagram, c, 0);
    LinkDiagram d1 = resolve_crossing(tc.diagram, c, 1);
    long long det0 = detail::cached_det(ctx, d0, to_pd(d0));
    long long det1 = detail::cached_det(ctx, d1, to_pd(d1));
    auto [r0, r1] = cf_resolve_last(cf_expand(r));
    long long p0 = predicted_det(t.invariants, r0);
    long long p1 = predicted_det(t.invariants, r1);
    row.split_ok = std::minmax(det0, det1) == std::minmax(p0, p1);
    row.split = row.split_ok ? split_text(p1, p0) : split_text(det0, det1);
  } else {
    row.split = "-";
    row.split_ok = true;  // nothing to resolve at 1/0 or a zero-twist ladder
  }

  auto node = detail::certify_with_context(ctx, tc.diagram, kClosureBudget);
  row.cert_ok = node && verify_certificate(QACertificate{node});
  return row;
}

}  // namespace

FamilyReport verify_family(const FramedQATangle& t, int max_p, int max_q) {
  if (max_p < 1 || max_q < 0)
    throw std::invalid_argument("verify_family: need max_p >= 1, max_q >= 0");
  std::vector<Slope> slopes{Slope{1, 0}};
  for (long long q = 1; q <= max_q; ++q)
    for (long long p = 0; p <= max_p; ++p)
      if (std::gcd(p, q) == 1) slopes.push_back(Slope{p, q});

  FamilyReport report;
  report.provenance = t.provenance;
  detail::CertifyContext ctx;
  for (const Slope& r : slopes) report.rows.push_back(check_slope(ctx, t, r));
  report.all_pass = std::all_of(report.rows.begin(), report.rows.end(),
                                [](const FamilyRow& row) { return row.pass(); });
  return report;
}

std::string report_to_text(const FamilyReport& r) {
  std::ostringstream out;
  for (const FamilyRow& row : r.rows)
    out << to_string(row.slope) << " det=" << row.det << " pred=" << row.pred
        << " split=" << row.split << " cert=" << (row.cert_ok ? "ok" : "FAIL") << '\n';
  if (r.all_pass) {
    out << "all rows pass\n";
  } else {
    out << "failing slopes:";
    for (const FamilyRow& row : r.rows)
      if (!row.pass()) out << ' ' << to_string(row.slope);
    out << '\n';
  }
  return out.str();
}

std::string report_to_json(const FamilyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const FamilyRow& row : r.rows) {
    rows.push_back({{"slope", to_string(row.slope)},
                    {"det", row.det},
                    {"pred", row.pred},
                    {"split", row.split},
                    {"det_ok", row.det_ok},
                    {"split_ok", row.split_ok},
                    {"cert_ok", row.cert_ok},
                    {"pass", row.pass()}});
  }
  nlohmann::json j{{"family", r.provenance}, {"rows", rows}, {"all_pass", r.all_pass}};
  return j.dump(2);
}

}  // namespace qalink
