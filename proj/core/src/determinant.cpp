#include "qalink/determinant.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <stdexcept>
#include <vector>

#include "diagram_internal.hpp"

namespace qalink {

namespace {

// 2-color the faces (checkerboard). Corners i and i+1 of a crossing sit on
// opposite sides of the edge at slot i+1, so they get opposite colors.
std::vector<int> face_coloring(const detail::Faces& faces, int n_crossings) {
  std::vector<int> color(faces.n_faces, -1);
  if (faces.n_faces == 0) return color;
  std::deque<int> queue;
  color[faces.face_of_slot[0]] = 0;
  queue.push_back(faces.face_of_slot[0]);
  std::vector<std::vector<int>> adj(faces.n_faces);
  for (int c = 0; c < n_crossings; ++c)
    for (int i = 0; i < 4; ++i) {
      int f1 = faces.face_of_slot[detail::slot(c, i)];
      int f2 = faces.face_of_slot[detail::slot(c, (i + 1) & 3)];
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::logic_error("face graph is not checkerboard colorable");
      }
    }
  }
  for (int f = 0; f < faces.n_faces; ++f)
    if (color[f] < 0) throw std::logic_error("face coloring did not reach every face");
  return color;
}

}  // namespace

GoeritzMatrix goeritz_matrix(const LinkDiagram& d) {
  return goeritz_matrix(d, GoeritzOptions{});
}

GoeritzMatrix goeritz_matrix(const LinkDiagram& d, const GoeritzOptions& opts) {
  int pieces = detail::crossing_component_count(d.crossings(), d.n_edges()) +
               d.trivial_loops();
  if (pieces > 1)
    throw std::invalid_argument("goeritz_matrix requires a connected diagram");

  GoeritzMatrix m;
  m.swapped_shading = opts.swap_shading;
  int n = d.n_crossings();
  if (n == 0) {
    // crossingless unknot: one white region, struck; empty matrix, |det| 1
    m.n_white_regions = 1;
    m.deleted_region = 0;
    if (opts.delete_region > 0)
      throw std::invalid_argument("delete_region out of range");
    return m;
  }

  auto faces = detail::trace_faces(d.crossings(), d.n_edges());
  auto color = face_coloring(faces, n);
  // white = color class of the corner-0 face of crossing 0 (or the other one)
  int white = color[faces.face_of_slot[0]];
  if (opts.swap_shading) white = 1 - white;

  std::vector<int> white_index(faces.n_faces, -1);
  int n_white = 0;
  for (int f = 0; f < faces.n_faces; ++f)
    if (color[f] == white) white_index[f] = n_white++;
  m.n_white_regions = n_white;

  std::vector<std::vector<Int>> g(n_white, std::vector<Int>(n_white, 0));
  for (int c = 0; c < n; ++c) {
    auto corner = [&](int i) { return faces.face_of_slot[detail::slot(c, i)]; };
    int w1, w2, eta;
    if (color[corner(0)] == white) {
      w1 = white_index[corner(0)];
      w2 = white_index[corner(2)];
      eta = 1;
    } else {
      w1 = white_index[corner(1)];
      w2 = white_index[corner(3)];
      eta = -1;
    }
    if (w1 == w2) continue;  // both diagonal corners in one region: no load
    g[w1][w2] -= eta;
    g[w2][w1] -= eta;
    g[w1][w1] += eta;
    g[w2][w2] += eta;
  }

  int del = opts.delete_region < 0 ? n_white - 1 : opts.delete_region;
  if (del < 0 || del >= n_white)
    throw std::invalid_argument("delete_region out of range");
  m.deleted_region = del;
  m.entries.assign(n_white - 1, std::vector<Int>(n_white - 1, 0));
  for (int i = 0, ri = 0; i < n_white; ++i) {
    if (i == del) continue;
    for (int j = 0, rj = 0; j < n_white; ++j) {
      if (j == del) continue;
      m.entries[ri][rj++] = g[i][j];
    }
    ++ri;
  }
  return m;
}

Int goeritz_det(const GoeritzMatrix& m) {
  auto a = m.entries;
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);  // sign is irrelevant, we report |det|
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return abs(a[n - 1][n - 1]);
}

Int determinant(const LinkDiagram& d) {
  int pieces = detail::crossing_component_count(d.crossings(), d.n_edges()) +
               d.trivial_loops();
  if (pieces > 1) return 0;
  if (d.n_crossings() == 0) return 1;  // crossingless unknot (or empty)
  return goeritz_det(goeritz_matrix(d));
}

Int determinant_oracle(const LinkDiagram& d) {
  using Rat = boost::multiprecision::cpp_rational;
  int n = d.n_crossings();
  if (n == 0) return d.trivial_loops() <= 1 ? 1 : 0;
  if (d.trivial_loops() > 0) return 0;

  const auto& quads = d.crossings();
  int ne = d.n_edges();

  // a strand that never goes under is a split circle lying over the rest
  detail::UnionFind strands(ne + 1);
  for (const auto& q : quads) {
    strands.unite(q[0], q[2]);
    strands.unite(q[1], q[3]);
  }
  std::vector<char> has_under(ne + 1, 0);
  for (const auto& q : quads) has_under[strands.find(q[0])] = 1;
  for (int e = 1; e <= ne; ++e)
    if (strands.find(e) == e && !has_under[e]) return 0;

  // arcs: maximal runs of edges joined through overpasses
  detail::UnionFind arcs(ne + 1);
  for (const auto& q : quads) arcs.unite(q[1], q[3]);
  std::vector<int> arc_index(ne + 1, -1);
  int n_arcs = 0;
  for (int e = 1; e <= ne; ++e)
    if (arcs.find(e) == e) arc_index[e] = n_arcs++;
  if (n_arcs != n) throw std::logic_error("arc count mismatch");
  auto arc = [&](int e) { return arc_index[arcs.find(e)]; };

  // one relation per crossing: in + out - 2 * over, evaluated at -1
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n, 0));
  for (int c = 0; c < n; ++c) {
    const Quad& q = quads[c];
    mat[c][arc(q[0])] += 1;
    mat[c][arc(q[2])] += 1;
    mat[c][arc(q[1])] -= 2;
  }

  // strike the last row and column, eliminate over exact rationals
  int m = n - 1;
  Rat det = 1;
  for (int k = 0; k < m; ++k) {
    int p = -1;
    for (int r = k; r < m; ++r)
      if (mat[r][k] != 0) {
        p = r;
        break;
      }
    if (p < 0) return 0;
    if (p != k) std::swap(mat[k], mat[p]);
    det *= mat[k][k];
    for (int i = k + 1; i < m; ++i) {
      if (mat[i][k] == 0) continue;
      Rat f = mat[i][k] / mat[k][k];
      for (int j = k; j < m; ++j) mat[i][j] -= f * mat[k][j];
    }
  }
  if (boost::multiprecision::denominator(det) != 1)
    throw std::logic_error("non-integral determinant");
  return abs(boost::multiprecision::numerator(det));
}

}  // namespace qalink
