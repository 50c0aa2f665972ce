#pragma once

#include <memory>
#include <string>
#include <unordered_map>

#include "qalink/qa.hpp"

namespace qalink::detail {

// State shared across a batch of certifications (e.g. one family sweep):
// successful subtrees keyed by canonical pd, determinants keyed by raw pd.
// Only successes are memoized — a failure under one budget may succeed
// under a larger one.
struct CertifyContext {
  std::unordered_map<std::string, std::shared_ptr<const QACertificate::Node>> memo;
  std::unordered_map<std::string, long long> dets;
};

std::shared_ptr<const QACertificate::Node> certify_with_context(CertifyContext& ctx,
                                                                const LinkDiagram& d,
                                                                long long budget);

long long cached_det(CertifyContext& ctx, const LinkDiagram& d, const std::string& pd);

}  // namespace qalink::detail
