#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qalink {

// Reduced rational slope p/q: gcd(|p|,q) = 1, q >= 0, and q = 0 only as the
// infinite slope 1/0. Sign lives on p.
struct Slope {
  long long p = 0;
  long long q = 1;
  friend bool operator==(const Slope&, const Slope&) = default;
};

Slope make_slope(long long p, long long q);
Slope parse_slope(const std::string& text);  // "p/q" or bare integer
std::string to_string(const Slope& s);

// Ascending expansion [a1,...,al]; empty list denotes 1/0. Greedy-normal
// form has a1 >= 0, inner terms >= 1 and al >= 2 whenever l >= 2.
using ContinuedFraction = std::vector<long long>;

// Greedy floor-based expansion of a slope >= 0 (or 1/0). Negative slopes are
// rejected: mirror first.
ContinuedFraction cf_expand(const Slope& s);

// Continuant evaluation. Tolerates non-normal terms (zeros, decremented
// ends), which is what makes the truncation arithmetic below exact.
Slope cf_evaluate(const ContinuedFraction& terms);

// For [a1..al] return r0 = value of [a1..a_{l-1}] and r1 = value of
// [a1..al - 1]. Mediant identity: p = p0 + p1, q = q0 + q1.
std::pair<Slope, Slope> cf_resolve_last(const ContinuedFraction& terms);

// Minimal geometric intersection number |p_a q_b - p_b q_a|.
long long slope_distance(const Slope& a, const Slope& b);

// Data attached to a framed tangle: c and the primitive class (m, n) with
// n > 0, m < 0, scaled so that the two distinguished closure determinants
// are d_inf = c*n and d_zero = -c*m.
struct FramedTangleInvariants {
  long long c = 1;
  long long m = 0;
  long long n = 1;
  long long d_inf = 1;
  long long d_zero = 1;
  friend bool operator==(const FramedTangleInvariants&,
                         const FramedTangleInvariants&) = default;
};

// Derive (c, m, n) from the two closure determinants (both >= 1).
FramedTangleInvariants make_invariants(long long d_inf, long long d_zero);

// c * |p*n - q*m|; equals p*d_inf + q*d_zero for p, q >= 0.
long long predicted_det(const FramedTangleInvariants& inv, const Slope& r);

struct CableImage {
  Slope r;      // (k*p*q + sign)/k on the cabled knot
  Slope image;  // r / q^2 on the companion
};

// Surgery slope transfer across a (q,p)-cable; requires q >= 2, k >= 1,
// sign = +-1 and p coprime to q.
CableImage cable_image_slope(long long p, long long q, long long k, int sign);

// Base-orbifold descriptor for a filled Seifert piece: distance 0 from the
// fiber gives a connect sum of lens spaces, anything else appends the
// filling distance as one more cone point (reported verbatim, even when 1).
std::string heil_orbifold(const std::vector<long long>& cone_points,
                          const Slope& fill, const Slope& fiber);

}  // namespace qalink
