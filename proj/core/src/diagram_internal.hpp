#pragma once

// Shared combinatorial machinery: edge-end bookkeeping, face tracing and the
// splice engine that realizes smoothings, Reidemeister removals, tangle sums
// and closures as one join-and-renumber operation.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qalink/diagram.hpp"

namespace qalink::detail {

// Slot = 4*crossing + position (position 0..3 as in the quad).
inline int slot(int c, int i) { return 4 * c + i; }
inline int slot_crossing(int s) { return s / 4; }
inline int slot_pos(int s) { return s & 3; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// occ[e] lists the slots where edge e appears, in scan order (crossing-major,
// positions 0..3). Closed diagrams have exactly two entries per edge.
std::vector<std::vector<int>> edge_occurrences(const std::vector<Quad>& quads,
                                               int n_edges);

struct Faces {
  std::vector<int> face_of_slot;  // size 4n, orbit ids from 0
  int n_faces = 0;
};

// Orbits of s -> other_end(edge at next ccw slot). Requires every edge to
// occur exactly twice in the quads (closed diagram).
Faces trace_faces(const std::vector<Quad>& quads, int n_edges);

// Union-find over crossings sharing an edge.
int crossing_component_count(const std::vector<Quad>& quads, int n_edges);

// Union-find over edges joined through a crossing (slots 0~2 and 1~3):
// classes are the diagram's strands.
int strand_count(const std::vector<Quad>& quads, int n_edges);

// Splice: keep some crossings verbatim, declare every remaining edge end
// loose, fuse loose ends pairwise, leave some open. run() walks the merged
// strands, renumbers edges by first appearance (kept quads in scan order,
// then open ends in declaration order) and counts closed-off circles.
class Splice {
 public:
  explicit Splice(int n_edges) : n_edges_(n_edges) {}

  void keep(const Quad& q) { kept_.push_back(q); }
  int loose(int edge) {
    loose_edges_.push_back(edge);
    return static_cast<int>(loose_edges_.size()) - 1;
  }
  void join(int a, int b) { joins_.emplace_back(a, b); }
  void open(int handle) { open_.push_back(handle); }

  struct Result {
    std::vector<Quad> quads;
    int n_edges = 0;
    int circles = 0;
    std::vector<int> open_edges;  // new id per open() call, in order
  };
  Result run() const;

 private:
  int n_edges_;
  std::vector<Quad> kept_;
  std::vector<int> loose_edges_;
  std::vector<std::pair<int, int>> joins_;
  std::vector<int> open_;
};

}  // namespace qalink::detail
