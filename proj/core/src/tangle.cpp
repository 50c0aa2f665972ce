#include "qalink/tangle.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "diagram_internal.hpp"

namespace qalink {

void validate_tangle(const Tangle& t) {
  if (t.trivial_loops < 0) throw std::invalid_argument("negative trivial loop count");
  std::vector<int> ends(t.n_edges + 1, 0);
  auto hit = [&](int e) {
    if (e < 1 || e > t.n_edges)
      throw std::invalid_argument("tangle edge id out of range");
    ++ends[e];
  };
  for (const auto& q : t.crossings)
    for (int e : q) hit(e);
  hit(t.nw);
  hit(t.ne);
  hit(t.sw);
  hit(t.se);
  for (int e = 1; e <= t.n_edges; ++e)
    if (ends[e] != 2)
      throw std::invalid_argument("tangle edge " + std::to_string(e) +
                                  " has " + std::to_string(ends[e]) + " ends");
}

Tangle horizontal_tangle() {
  Tangle t;
  t.n_edges = 2;
  t.nw = t.ne = 1;
  t.sw = t.se = 2;
  return t;
}

Tangle vertical_tangle() {
  Tangle t;
  t.n_edges = 2;
  t.nw = t.sw = 1;
  t.ne = t.se = 2;
  return t;
}

Tangle twist_h(const Tangle& t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +-1");
  Tangle r = t;
  int e = r.n_edges;
  if (sign > 0)
    r.crossings.push_back({r.ne, r.se, e + 1, e + 2});
  else
    r.crossings.push_back({e + 2, r.ne, r.se, e + 1});
  r.se = e + 1;
  r.ne = e + 2;
  r.n_edges += 2;
  return r;
}

Tangle twist_v(const Tangle& t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +-1");
  Tangle r = t;
  int e = r.n_edges;
  if (sign > 0)
    r.crossings.push_back({r.sw, e + 1, e + 2, r.se});
  else
    r.crossings.push_back({r.se, r.sw, e + 1, e + 2});
  r.sw = e + 1;
  r.se = e + 2;
  r.n_edges += 2;
  return r;
}

Tangle mirror(const Tangle& t) {
  Tangle r = t;
  for (auto& q : r.crossings) q = {q[3], q[0], q[1], q[2]};
  r.framing = -r.framing;
  return r;
}

Tangle ladder_tangle(const ContinuedFraction& terms) {
  int l = static_cast<int>(terms.size());
  Tangle t = (l % 2 == 1) ? vertical_tangle() : horizontal_tangle();
  for (int i = l; i >= 1; --i) {
    long long a = terms[i - 1];
    if (a < 0) throw std::invalid_argument("ladder term below zero");
    for (long long k = 0; k < a; ++k) t = (i % 2 == 1) ? twist_v(t, 1) : twist_h(t, 1);
  }
  return t;
}

Tangle rational_tangle(const Slope& r) {
  Slope s = make_slope(r.p, r.q);
  if (s.q == 0 || s.p == 0) return horizontal_tangle();
  if (s.p < 0) return mirror(rational_tangle(Slope{-s.p, s.q}));
  return ladder_tangle(cf_expand(s));
}

Tangle tangle_sum(const Tangle& t1, const Tangle& t2) {
  int off = t1.n_edges;
  detail::Splice sp(t1.n_edges + t2.n_edges);
  for (const auto& q : t1.crossings) sp.keep(q);
  for (const auto& q : t2.crossings)
    sp.keep({q[0] + off, q[1] + off, q[2] + off, q[3] + off});
  int h1ne = sp.loose(t1.ne), h2nw = sp.loose(t2.nw + off);
  int h1se = sp.loose(t1.se), h2sw = sp.loose(t2.sw + off);
  int h1nw = sp.loose(t1.nw), h2ne = sp.loose(t2.ne + off);
  int h1sw = sp.loose(t1.sw), h2se = sp.loose(t2.se + off);
  sp.join(h1ne, h2nw);
  sp.join(h1se, h2sw);
  sp.open(h1nw);
  sp.open(h2ne);
  sp.open(h1sw);
  sp.open(h2se);
  auto res = sp.run();
  Tangle out;
  out.crossings = std::move(res.quads);
  out.n_edges = res.n_edges;
  out.trivial_loops = t1.trivial_loops + t2.trivial_loops + res.circles;
  out.nw = res.open_edges[0];
  out.ne = res.open_edges[1];
  out.sw = res.open_edges[2];
  out.se = res.open_edges[3];
  out.framing = t1.framing + t2.framing;
  return out;
}

Tangle add_framing_twists(const Tangle& t, int k) {
  Tangle r = t;
  r.framing += k;
  return r;
}

namespace {

LinkDiagram numerator_closure(const Tangle& t) {
  detail::Splice sp(t.n_edges);
  for (const auto& q : t.crossings) sp.keep(q);
  int hnw = sp.loose(t.nw), hne = sp.loose(t.ne);
  int hsw = sp.loose(t.sw), hse = sp.loose(t.se);
  sp.join(hnw, hne);
  sp.join(hsw, hse);
  auto res = sp.run();
  return LinkDiagram(std::move(res.quads), t.trivial_loops + res.circles);
}

}  // namespace

TangleClosure closure_layout(const Tangle& t, const Slope& r) {
  Slope s = make_slope(r.p, r.q);
  auto terms = cf_expand(s);  // rejects negative slopes
  Tangle lad = ladder_tangle(terms);
  Tangle ft = t;
  ft.framing = 0;
  for (int k = std::abs(t.framing); k > 0; --k) ft = twist_v(ft, t.framing > 0 ? 1 : -1);
  Tangle sum = tangle_sum(lad, ft);
  TangleClosure out;
  out.ladder_crossings = static_cast<int>(lad.crossings.size());
  if (out.ladder_crossings > 0) out.final_ladder_crossing = 0;
  out.diagram = numerator_closure(sum);
  return out;
}

LinkDiagram closure(const Tangle& t, const Slope& r) {
  return closure_layout(t, r).diagram;
}

LinkDiagram two_bridge_diagram(const Slope& r) {
  Slope s = make_slope(r.p, r.q);
  if (s.p < 1) throw std::invalid_argument("two-bridge slope needs p >= 1");
  return closure(rational_tangle(s), Slope{0, 1});
}

LinkDiagram montesinos_diagram(int e, const std::vector<Slope>& fractions) {
  Tangle acc = horizontal_tangle();
  for (const auto& f : fractions) {
    Slope s = make_slope(f.p, f.q);
    if (s.q < 2 || s.p == 0)
      throw std::invalid_argument("montesinos fraction needs denominator >= 2");
    // summand whose tangle fraction is beta/alpha: feed slope alpha/|beta|
    acc = tangle_sum(acc, rational_tangle(Slope{s.p > 0 ? s.q : -s.q, std::llabs(s.p)}));
  }
  if (e != 0)
    acc = tangle_sum(acc, rational_tangle(Slope{e > 0 ? 1 : -1, std::abs(e)}));
  return closure(acc, Slope{1, 0});
}

std::string serialize_tangle(const Tangle& t) {
  std::ostringstream out;
  out << "TANGLE{pd=";
  bool first = true;
  for (const auto& q : t.crossings) {
    if (!first) out << ' ';
    first = false;
    out << "X(" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << ')';
  }
  for (int k = 0; k < t.trivial_loops; ++k) {
    if (!first) out << ' ';
    first = false;
    out << 'O';
  }
  out << "; open=(" << t.nw << ',' << t.ne << ',' << t.sw << ',' << t.se << ')';
  out << "; frame=" << t.framing << '}';
  return out.str();
}

}  // namespace qalink
