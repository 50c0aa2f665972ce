#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "qalink/diagram.hpp"

namespace qalink {

// Certificate tree for membership in the quasi-alternating set: leaves are
// recognized base diagrams, internal nodes name a crossing whose two
// smoothings split the determinant additively into the children.
struct QACertificate {
  struct Node {
    std::string pd;
    long long det = 0;
    std::optional<std::string> base;  // leaf kind, when a leaf
    std::optional<int> crossing;      // resolved crossing, when internal
    std::array<std::shared_ptr<const Node>, 2> children{};  // smoothings 0, 1
  };
  std::shared_ptr<const Node> root;
};

// Base recognizer, applied to reduce(d): a crossingless one-component
// diagram is "unknot"; connected, alternating and reduced with at least one
// crossing is "reduced-alternating-connected"; anything else is not a base.
std::optional<std::string> is_qa_base(const LinkDiagram& d);

// Bounded certificate search. budget counts expanded nodes (>= 1 required).
// A returned certificate always verifies; nullopt is inconclusive — budget
// ran out or no crossing admitted both subcertificates — never a disproof.
std::optional<QACertificate> certify_qa(const LinkDiagram& d, int budget = 10000);

// Independent audit: every determinant recomputed with determinant_oracle,
// every child re-derived via resolve_crossing, every leaf kind re-tested.
bool verify_certificate(const QACertificate& cert);

std::string certificate_to_json(const QACertificate& cert);
QACertificate certificate_from_json(const std::string& text);

}  // namespace qalink
