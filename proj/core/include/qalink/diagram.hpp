#pragma once

#include <array>
#include <string>
#include <vector>

namespace qalink {

// Crossing quadruple: edge ids counterclockwise from the incoming understrand,
// so slots 0,2 carry the understrand and slots 1,3 the overstrand. Stored
// canonically as the lex-min of the quad and its rotation by two (same
// unoriented crossing seen from the other understrand end).
using Quad = std::array<int, 4>;

Quad canonical_quad(Quad q);

// Planar link diagram: crossings over edge ids 1..n_edges (each id occurring
// exactly twice), plus a count of crossing-free circles. The constructor
// validates edge occurrences and the Euler count V-E+F=2 on every
// crossing-connected component.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Quad> crossings, int trivial_loops);

  const std::vector<Quad>& crossings() const { return crossings_; }
  int n_crossings() const { return static_cast<int>(crossings_.size()); }
  int n_edges() const { return n_edges_; }
  int trivial_loops() const { return trivial_loops_; }
  bool empty() const { return crossings_.empty() && trivial_loops_ == 0; }

  bool operator==(const LinkDiagram&) const = default;

 private:
  std::vector<Quad> crossings_;
  int n_edges_ = 0;
  int trivial_loops_ = 0;
};

struct DiagramProperties {
  bool connected = false;
  bool alternating = false;
  bool reduced = false;
  int components = 0;  // link components (strands + free loops)
};

// Text format: whitespace-separated `X(a,b,c,d)` tokens plus `O` tokens for
// crossing-free circles; serializer emits crossings in index order, single
// space separated, `O` tokens last.
LinkDiagram parse_pd(const std::string& text);
std::string to_pd(const LinkDiagram& d);

// Lexicographically minimal serialization over cyclic edge relabelings.
// Diagrams differing by a cyclic id shift (plus crossing order) share a key;
// other relabelings may miss — a memoization key where misses cost speed,
// never soundness.
std::string canonical_pd(const LinkDiagram& d);

// Replaces crossing c by one of its two smoothings: choice 0 joins slots
// (0,1) and (2,3), choice 1 joins (0,3) and (1,2). A smoothing that closes
// off an isolated loop increments trivial_loops.
LinkDiagram resolve_crossing(const LinkDiagram& d, int c, int choice);

LinkDiagram mirror(const LinkDiagram& d);

// Crossing-removing Reidemeister I / II moves to fixpoint; deterministic.
LinkDiagram reduce(const LinkDiagram& d);

DiagramProperties properties(const LinkDiagram& d);

}  // namespace qalink
