#include "qalink/qa.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qalink/determinant.hpp"
#include "qa_internal.hpp"

namespace qalink {

std::optional<std::string> is_qa_base(const LinkDiagram& d) {
  LinkDiagram r = reduce(d);
  DiagramProperties p = properties(r);
  if (r.n_crossings() == 0) {
    if (p.components == 1) return "unknot";
    return std::nullopt;
  }
  if (p.connected && p.alternating && p.reduced)
    return "reduced-alternating-connected";
  return std::nullopt;
}

namespace detail {

long long cached_det(CertifyContext& ctx, const LinkDiagram& d, const std::string& pd) {
  auto it = ctx.dets.find(pd);
  if (it != ctx.dets.end()) return it->second;
  Int v = determinant(d);
  if (v > Int(std::numeric_limits<long long>::max()))
    throw std::overflow_error("determinant does not fit in long long");
  long long out = static_cast<long long>(v);
  ctx.dets.emplace(pd, out);
  return out;
}

namespace {

struct Searcher {
  CertifyContext& ctx;
  long long remaining;

  std::shared_ptr<const QACertificate::Node> run(const LinkDiagram& d) {
    std::string key = canonical_pd(d);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    if (remaining <= 0) return nullptr;
    --remaining;

    std::string pd = to_pd(d);
    long long det_d = cached_det(ctx, d, pd);

    if (auto base = is_qa_base(d)) {
      auto node = std::make_shared<QACertificate::Node>();
      node->pd = std::move(pd);
      node->det = det_d;
      node->base = std::move(*base);
      ctx.memo.emplace(std::move(key), node);
      return node;
    }
    if (det_d < 2) return nullptr;  // an additive split needs two positive parts

    struct Cand {
      long long defect;
      int c;
      LinkDiagram d0, d1;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(d.n_crossings()));
    for (int c = 0; c < d.n_crossings(); ++c) {
      LinkDiagram d0 = resolve_crossing(d, c, 0);
      LinkDiagram d1 = resolve_crossing(d, c, 1);
      long long det0 = cached_det(ctx, d0, to_pd(d0));
      long long det1 = cached_det(ctx, d1, to_pd(d1));
      if (det0 < 1 || det1 < 1) continue;  // both smoothings must stay nondegenerate
      cands.push_back({std::llabs(det0 + det1 - det_d), c, std::move(d0), std::move(d1)});
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.defect < b.defect; });

    for (Cand& cand : cands) {
      if (cand.defect != 0) break;  // sorted: nothing additive remains
      auto c0 = run(cand.d0);
      if (!c0) continue;
      auto c1 = run(cand.d1);
      if (!c1) continue;
      auto node = std::make_shared<QACertificate::Node>();
      node->pd = std::move(pd);
      node->det = det_d;
      node->crossing = cand.c;
      node->children = {std::move(c0), std::move(c1)};
      ctx.memo.emplace(std::move(key), node);
      return node;
    }
    return nullptr;
  }
};

}  // namespace

std::shared_ptr<const QACertificate::Node> certify_with_context(CertifyContext& ctx,
                                                                const LinkDiagram& d,
                                                                long long budget) {
  Searcher s{ctx, budget};
  return s.run(d);
}

}  // namespace detail

std::optional<QACertificate> certify_qa(const LinkDiagram& d, int budget) {
  if (budget <= 0) throw std::invalid_argument("certify_qa: budget must be positive");
  detail::CertifyContext ctx;
  auto root = detail::certify_with_context(ctx, d, budget);
  if (!root) return std::nullopt;
  return QACertificate{std::move(root)};
}

namespace {

bool verify_node(const QACertificate::Node& n) {
  LinkDiagram d;
  try {
    d = parse_pd(n.pd);
  } catch (const std::exception&) {
    return false;
  }
  Int det = determinant_oracle(d);
  if (det != Int(n.det)) return false;

  if (n.base) {
    if (n.crossing || n.children[0] || n.children[1]) return false;
    auto kind = is_qa_base(d);
    return kind && *kind == *n.base;
  }

  if (!n.crossing || !n.children[0] || !n.children[1]) return false;
  int c = *n.crossing;
  if (c < 0 || c >= d.n_crossings()) return false;
  for (int choice = 0; choice < 2; ++choice) {
    const QACertificate::Node& child = *n.children[choice];
    if (to_pd(resolve_crossing(d, c, choice)) != child.pd) return false;
    if (child.det < 1) return false;
  }
  if (n.children[0]->det + n.children[1]->det != n.det) return false;
  return verify_node(*n.children[0]) && verify_node(*n.children[1]);
}

}  // namespace

bool verify_certificate(const QACertificate& cert) {
  if (!cert.root) return false;
  return verify_node(*cert.root);
}

namespace {

nlohmann::json node_to_json(const QACertificate::Node& n) {
  nlohmann::json j;
  j["pd"] = n.pd;
  j["det"] = n.det;
  if (n.base) {
    j["base"] = *n.base;
  } else {
    if (!n.crossing || !n.children[0] || !n.children[1])
      throw std::invalid_argument("certificate_to_json: malformed internal node");
    j["crossing"] = *n.crossing;
    j["children"] =
        nlohmann::json::array({node_to_json(*n.children[0]), node_to_json(*n.children[1])});
  }
  return j;
}

std::shared_ptr<const QACertificate::Node> node_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate node must be an object");
  auto n = std::make_shared<QACertificate::Node>();
  n->pd = j.at("pd").get<std::string>();
  n->det = j.at("det").get<long long>();
  if (j.contains("base")) {
    if (j.contains("crossing") || j.contains("children"))
      throw std::invalid_argument("leaf node cannot carry crossing or children");
    n->base = j.at("base").get<std::string>();
  } else {
    n->crossing = j.at("crossing").get<int>();
    const nlohmann::json& ch = j.at("children");
    if (!ch.is_array() || ch.size() != 2)
      throw std::invalid_argument("children must be an array of two nodes");
    n->children = {node_from_json(ch[0]), node_from_json(ch[1])};
  }
  return n;
}

}  // namespace

std::string certificate_to_json(const QACertificate& cert) {
  if (!cert.root) throw std::invalid_argument("certificate_to_json: empty certificate");
  return node_to_json(*cert.root).dump(2);
}

QACertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate_from_json: ") + e.what());
  }
  try {
    return QACertificate{node_from_json(j)};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate_from_json: ") + e.what());
  }
}

}  // namespace qalink
