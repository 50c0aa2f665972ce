#include "qalink/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "diagram_internal.hpp"

namespace qalink {

namespace detail {

std::vector<std::vector<int>> edge_occurrences(const std::vector<Quad>& quads,
                                               int n_edges) {
  std::vector<std::vector<int>> occ(n_edges + 1);
  for (int c = 0; c < static_cast<int>(quads.size()); ++c)
    for (int i = 0; i < 4; ++i) {
      int e = quads[c][i];
      if (e < 1 || e > n_edges)
        throw std::invalid_argument("edge id " + std::to_string(e) +
                                    " outside 1.." + std::to_string(n_edges));
      occ[e].push_back(slot(c, i));
    }
  return occ;
}

Faces trace_faces(const std::vector<Quad>& quads, int n_edges) {
  auto occ = edge_occurrences(quads, n_edges);
  int n_slots = 4 * static_cast<int>(quads.size());
  Faces f;
  f.face_of_slot.assign(n_slots, -1);
  auto step = [&](int s) {
    int c = slot_crossing(s), i = slot_pos(s);
    int s2 = slot(c, (i + 1) & 3);
    int e = quads[c][(i + 1) & 3];
    return occ[e][0] == s2 ? occ[e][1] : occ[e][0];
  };
  for (int s0 = 0; s0 < n_slots; ++s0) {
    if (f.face_of_slot[s0] >= 0) continue;
    int id = f.n_faces++;
    for (int s = s0; f.face_of_slot[s] < 0; s = step(s)) f.face_of_slot[s] = id;
  }
  return f;
}

int crossing_component_count(const std::vector<Quad>& quads, int n_edges) {
  int n = static_cast<int>(quads.size());
  if (n == 0) return 0;
  auto occ = edge_occurrences(quads, n_edges);
  UnionFind uf(n);
  for (int e = 1; e <= n_edges; ++e)
    if (occ[e].size() == 2)
      uf.unite(slot_crossing(occ[e][0]), slot_crossing(occ[e][1]));
  int count = 0;
  for (int c = 0; c < n; ++c) count += uf.find(c) == c;
  return count;
}

int strand_count(const std::vector<Quad>& quads, int n_edges) {
  if (n_edges == 0) return 0;
  UnionFind uf(n_edges + 1);
  for (const auto& q : quads) {
    uf.unite(q[0], q[2]);
    uf.unite(q[1], q[3]);
  }
  int count = 0;
  for (int e = 1; e <= n_edges; ++e) count += uf.find(e) == e;
  return count;
}

Splice::Result Splice::run() const {
  int K = static_cast<int>(kept_.size());
  int n_loose = static_cast<int>(loose_edges_.size());
  int n_sites = 4 * K + n_loose;

  std::vector<std::array<int, 2>> ends(n_edges_ + 1, {-1, -1});
  auto add_site = [&](int e, int site) {
    if (e < 1 || e > n_edges_) throw std::logic_error("splice: edge id out of range");
    if (ends[e][0] < 0) ends[e][0] = site;
    else if (ends[e][1] < 0) ends[e][1] = site;
    else throw std::logic_error("splice: edge with more than two ends");
  };
  for (int c = 0; c < K; ++c)
    for (int i = 0; i < 4; ++i) add_site(kept_[c][i], 4 * c + i);
  for (int h = 0; h < n_loose; ++h) add_site(loose_edges_[h], 4 * K + h);
  for (int e = 1; e <= n_edges_; ++e)
    if (ends[e][0] >= 0 && ends[e][1] < 0)
      throw std::logic_error("splice: edge with a single end");

  std::vector<int> via_edge(n_sites, -1), via_join(n_sites, -1);
  for (int e = 1; e <= n_edges_; ++e) {
    if (ends[e][0] < 0) continue;  // edge absent from this splice
    via_edge[ends[e][0]] = ends[e][1];
    via_edge[ends[e][1]] = ends[e][0];
  }
  std::vector<char> used(n_loose, 0);
  for (auto [a, b] : joins_) {
    if (a < 0 || b < 0 || a >= n_loose || b >= n_loose || a == b || used[a] || used[b])
      throw std::logic_error("splice: bad join");
    used[a] = used[b] = 1;
    via_join[4 * K + a] = 4 * K + b;
    via_join[4 * K + b] = 4 * K + a;
  }
  for (int h : open_) {
    if (h < 0 || h >= n_loose || used[h]) throw std::logic_error("splice: bad open end");
    used[h] = 1;
  }
  for (char u : used)
    if (!u) throw std::logic_error("splice: unaccounted loose end");

  std::vector<int> id(n_sites, 0);
  int next = 0;
  auto walk_path = [&](int s0) {
    id[s0] = ++next;
    int cur = via_edge[s0];
    while (via_join[cur] >= 0) {
      id[cur] = next;
      cur = via_join[cur];
      id[cur] = next;
      cur = via_edge[cur];
    }
    id[cur] = next;
  };
  for (int s = 0; s < 4 * K; ++s)
    if (!id[s]) walk_path(s);
  for (int h : open_)
    if (!id[4 * K + h]) walk_path(4 * K + h);

  Result r;
  for (int s = 4 * K; s < n_sites; ++s) {
    if (id[s]) continue;
    ++r.circles;
    int cur = s;
    do {
      id[cur] = -1;
      cur = via_edge[cur];
      id[cur] = -1;
      cur = via_join[cur];
      if (cur < 0) throw std::logic_error("splice: broken circle");
    } while (cur != s);
  }

  r.n_edges = next;
  r.quads.reserve(K);
  for (int c = 0; c < K; ++c)
    r.quads.push_back({id[4 * c], id[4 * c + 1], id[4 * c + 2], id[4 * c + 3]});
  r.open_edges.reserve(open_.size());
  for (int h : open_) r.open_edges.push_back(id[4 * K + h]);
  return r;
}

}  // namespace detail

Quad canonical_quad(Quad q) {
  Quad r{q[2], q[3], q[0], q[1]};
  return std::min(q, r);
}

LinkDiagram::LinkDiagram(std::vector<Quad> crossings, int trivial_loops)
    : crossings_(std::move(crossings)), trivial_loops_(trivial_loops) {
  if (trivial_loops_ < 0) throw std::invalid_argument("negative trivial loop count");
  for (auto& q : crossings_) q = canonical_quad(q);
  n_edges_ = 2 * static_cast<int>(crossings_.size());
  auto occ = detail::edge_occurrences(crossings_, n_edges_);
  for (int e = 1; e <= n_edges_; ++e)
    if (occ[e].size() != 2)
      throw std::invalid_argument("edge id " + std::to_string(e) + " occurs " +
                                  std::to_string(occ[e].size()) + " times, expected 2");

  // V - E + F = 2 on each crossing-connected component
  if (!crossings_.empty()) {
    int n = n_crossings();
    auto faces = detail::trace_faces(crossings_, n_edges_);
    detail::UnionFind uf(n);
    for (int e = 1; e <= n_edges_; ++e)
      uf.unite(detail::slot_crossing(occ[e][0]), detail::slot_crossing(occ[e][1]));
    std::vector<int> v_count(n, 0), f_count(n, 0);
    std::vector<int> face_root(faces.n_faces, -1);
    for (int c = 0; c < n; ++c) ++v_count[uf.find(c)];
    for (int s = 0; s < 4 * n; ++s) {
      int fid = faces.face_of_slot[s];
      if (face_root[fid] < 0) {
        face_root[fid] = uf.find(detail::slot_crossing(s));
        ++f_count[face_root[fid]];
      }
    }
    for (int c = 0; c < n; ++c) {
      if (uf.find(c) != c) continue;
      // E = 2V within a component, so planarity reads F = V + 2
      if (f_count[c] != v_count[c] + 2)
        throw std::invalid_argument(
            "non-planar face trace (component with " + std::to_string(v_count[c]) +
            " crossings has " + std::to_string(f_count[c]) + " faces)");
    }
  }
}

LinkDiagram parse_pd(const std::string& text) {
  std::vector<Quad> quads;
  int loops = 0;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      ++i;
  };
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("malformed PD token at offset " + std::to_string(i) +
                                 ": " + why);
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + n, v);
    if (ec != std::errc() || v <= 0) throw fail("expected positive edge id");
    i = p - text.data();
    return v;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= n || text[i] != c) throw fail(std::string("expected '") + c + "'");
    ++i;
  };
  bool any = false;
  while (true) {
    skip_ws();
    if (i >= n) break;
    any = true;
    if (text[i] == 'O') {
      ++i;
      ++loops;
    } else if (text[i] == 'X') {
      ++i;
      expect('(');
      Quad q;
      q[0] = parse_int();
      expect(',');
      q[1] = parse_int();
      expect(',');
      q[2] = parse_int();
      expect(',');
      q[3] = parse_int();
      expect(')');
      quads.push_back(q);
    } else {
      throw fail("expected 'X' or 'O'");
    }
    if (i < n && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      throw fail("expected whitespace between tokens");
  }
  if (!any) throw std::invalid_argument("empty PD text");
  return LinkDiagram(std::move(quads), loops);
}

std::string to_pd(const LinkDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& q : d.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
  }
  for (int k = 0; k < d.trivial_loops(); ++k) {
    if (!first) out << ' ';
    first = false;
    out << 'O';
  }
  return out.str();
}

std::string canonical_pd(const LinkDiagram& d) {
  if (d.n_crossings() == 0) return to_pd(d);
  int ne = d.n_edges();
  std::vector<Quad> best, quads(d.n_crossings());
  for (int shift = 0; shift < ne; ++shift) {
    for (int c = 0; c < d.n_crossings(); ++c) {
      const Quad& q = d.crossings()[c];
      quads[c] = canonical_quad({(q[0] - 1 + shift) % ne + 1, (q[1] - 1 + shift) % ne + 1,
                                 (q[2] - 1 + shift) % ne + 1, (q[3] - 1 + shift) % ne + 1});
    }
    std::sort(quads.begin(), quads.end());
    if (best.empty() || quads < best) best = quads;
  }
  std::ostringstream out;
  for (const auto& q : best)
    out << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ") ";
  std::string s = out.str();
  for (int k = 0; k < d.trivial_loops(); ++k) s += "O ";
  s.pop_back();
  return s;
}

LinkDiagram resolve_crossing(const LinkDiagram& d, int c, int choice) {
  if (c < 0 || c >= d.n_crossings())
    throw std::invalid_argument("invalid crossing index " + std::to_string(c));
  if (choice != 0 && choice != 1)
    throw std::invalid_argument("smoothing choice must be 0 or 1");
  detail::Splice sp(d.n_edges());
  for (int k = 0; k < d.n_crossings(); ++k)
    if (k != c) sp.keep(d.crossings()[k]);
  const Quad& q = d.crossings()[c];
  int h0 = sp.loose(q[0]), h1 = sp.loose(q[1]), h2 = sp.loose(q[2]), h3 = sp.loose(q[3]);
  if (choice == 0) {
    sp.join(h0, h1);
    sp.join(h2, h3);
  } else {
    sp.join(h0, h3);
    sp.join(h1, h2);
  }
  auto r = sp.run();
  return LinkDiagram(std::move(r.quads), d.trivial_loops() + r.circles);
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Quad> quads;
  quads.reserve(d.n_crossings());
  for (const auto& q : d.crossings()) quads.push_back({q[3], q[0], q[1], q[2]});
  return LinkDiagram(std::move(quads), d.trivial_loops());
}

namespace {

// R1: edge occupying cyclically adjacent slots. The removing smoothing keeps
// the strand through the kink (choice 1 at even i, choice 0 at odd i).
bool try_r1(const LinkDiagram& d, LinkDiagram& out) {
  for (int c = 0; c < d.n_crossings(); ++c) {
    const Quad& q = d.crossings()[c];
    for (int i = 0; i < 4; ++i)
      if (q[i] == q[(i + 1) & 3]) {
        out = resolve_crossing(d, c, i % 2 == 0 ? 1 : 0);
        return true;
      }
  }
  return false;
}

// R2: bigon face {(c,i),(c',j)}, c != c', with one strand over at both
// crossings: parity(i+1) == parity(j). Removal flattens both crossings.
bool try_r2(const LinkDiagram& d, LinkDiagram& out) {
  auto faces = detail::trace_faces(d.crossings(), d.n_edges());
  int n_slots = 4 * d.n_crossings();
  std::vector<std::vector<int>> members(faces.n_faces);
  for (int s = 0; s < n_slots; ++s) members[faces.face_of_slot[s]].push_back(s);
  for (const auto& m : members) {
    if (m.size() != 2) continue;
    int c1 = detail::slot_crossing(m[0]), i = detail::slot_pos(m[0]);
    int c2 = detail::slot_crossing(m[1]), j = detail::slot_pos(m[1]);
    if (c1 == c2) continue;
    if (((i + 1) & 1) != (j & 1)) continue;
    detail::Splice sp(d.n_edges());
    for (int k = 0; k < d.n_crossings(); ++k)
      if (k != c1 && k != c2) sp.keep(d.crossings()[k]);
    for (int c : {c1, c2}) {
      const Quad& q = d.crossings()[c];
      int h0 = sp.loose(q[0]), h1 = sp.loose(q[1]), h2 = sp.loose(q[2]),
          h3 = sp.loose(q[3]);
      sp.join(h0, h2);
      sp.join(h1, h3);
    }
    auto r = sp.run();
    out = LinkDiagram(std::move(r.quads), d.trivial_loops() + r.circles);
    return true;
  }
  return false;
}

}  // namespace

LinkDiagram reduce(const LinkDiagram& d) {
  LinkDiagram cur = d;
  for (;;) {
    LinkDiagram next;
    if (try_r1(cur, next) || try_r2(cur, next))
      cur = std::move(next);
    else
      return cur;
  }
}

DiagramProperties properties(const LinkDiagram& d) {
  DiagramProperties p;
  int pieces = detail::crossing_component_count(d.crossings(), d.n_edges()) +
               d.trivial_loops();
  p.connected = pieces <= 1;
  p.components = detail::strand_count(d.crossings(), d.n_edges()) + d.trivial_loops();
  p.alternating = true;
  if (d.n_crossings() > 0) {
    auto occ = detail::edge_occurrences(d.crossings(), d.n_edges());
    for (int e = 1; e <= d.n_edges() && p.alternating; ++e)
      if ((detail::slot_pos(occ[e][0]) & 1) == (detail::slot_pos(occ[e][1]) & 1))
        p.alternating = false;
  }
  p.reduced = true;
  if (d.n_crossings() > 0) {
    auto faces = detail::trace_faces(d.crossings(), d.n_edges());
    for (int c = 0; c < d.n_crossings() && p.reduced; ++c) {
      auto f = [&](int i) { return faces.face_of_slot[detail::slot(c, i)]; };
      if (f(0) == f(2) || f(1) == f(3)) p.reduced = false;
    }
  }
  return p;
}

}  // namespace qalink
