#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalink/diagram.hpp"
#include "qalink/slopes.hpp"

namespace qalink {

// Diagram fragment with four open endpoints (NW, NE, SW, SE). Port fields
// hold edge ids; a crossingless strand can serve two ports with one id.
// framing counts bottom half-twists, materialized only at closure time.
struct Tangle {
  std::vector<Quad> crossings;
  int n_edges = 0;
  int trivial_loops = 0;
  int nw = 0, ne = 0, sw = 0, se = 0;
  int framing = 0;
};

// Every edge id must have exactly two ends counting quad occurrences and
// port incidences; throws otherwise.
void validate_tangle(const Tangle& t);

Tangle horizontal_tangle();  // strands nw-ne and sw-se (the 0-tangle)
Tangle vertical_tangle();    // strands nw-sw and ne-se

// Append one half-twist on the east (h) or south (v) pair of endpoints;
// sign -1 gives the mirrored crossing.
Tangle twist_h(const Tangle& t, int sign);
Tangle twist_v(const Tangle& t, int sign);

Tangle mirror(const Tangle& t);  // swap over/under everywhere; negate framing

// Twist ladder realizing an expansion [a1..al]: batches are emitted from the
// innermost term a_l outward, vertical twists for odd positions, horizontal
// for even, so the first emitted crossing belongs to the a_l region.
Tangle ladder_tangle(const ContinuedFraction& terms);

// Standard alternating tangle whose denominator closure is the two-bridge
// link b(p, q). 0/1 and 1/0 give crossingless horizontal strands; negative
// slopes mirror the positive tangle.
Tangle rational_tangle(const Slope& r);

// Horizontal juxtaposition: T1's east ports fuse to T2's west ports.
// Framings add; the 0-closure of the sum is the connected sum of closures.
Tangle tangle_sum(const Tangle& t1, const Tangle& t2);

Tangle add_framing_twists(const Tangle& t, int k);

// Numerator closure of ladder(r) + T, with T's framing twists materialized
// below T first. r = 1/0 is the plain numerator closure; r = 0 the
// denominator closure. Crossings: |ladder| + |framing| + |T|.
LinkDiagram closure(const Tangle& t, const Slope& r);

// closure plus the layout facts needed to resolve the innermost ladder
// crossing (the one whose two smoothings realize the truncated slopes).
struct TangleClosure {
  LinkDiagram diagram;
  int ladder_crossings = 0;
  std::optional<int> final_ladder_crossing;  // crossing index in diagram
};
TangleClosure closure_layout(const Tangle& t, const Slope& r);

// closure(rational_tangle(r), 0); alternating, determinant p. Requires p >= 1.
LinkDiagram two_bridge_diagram(const Slope& r);

// Numerator closure of the sum of rational tangles with fractions beta/alpha
// (given as Slope{beta, alpha}, alpha >= 2) plus an integer summand e.
// Determinant: |prod(alpha) * (e + sum(beta/alpha))|.
LinkDiagram montesinos_diagram(int e, const std::vector<Slope>& fractions);

std::string serialize_tangle(const Tangle& t);

}  // namespace qalink
