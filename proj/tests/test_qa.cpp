#include <doctest.h>

#include <memory>
#include <stdexcept>
#include <string>

#include "qalink/determinant.hpp"
#include "qalink/qa.hpp"
#include "qalink/slopes.hpp"
#include "qalink/tangle.hpp"

using namespace qalink;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";

// The non-alternating closure used across these tests: fill 1 of the sum of
// a 2/1 and a -5/1 rational tangle (determinant 13).
LinkDiagram mixed_closure() {
  Tangle t = tangle_sum(rational_tangle(make_slope(2, 1)), rational_tangle(make_slope(-5, 1)));
  return closure(t, Slope{1, 1});
}

// Hand-built one-split certificate for the Hopf link: both smoothings of
// crossing 0 are kinked unknots.
QACertificate hopf_certificate() {
  LinkDiagram hopf = parse_pd(kHopf);
  auto leaf = [](const LinkDiagram& d) {
    auto n = std::make_shared<QACertificate::Node>();
    n->pd = to_pd(d);
    n->det = 1;
    n->base = "unknot";
    return n;
  };
  auto root = std::make_shared<QACertificate::Node>();
  root->pd = to_pd(hopf);
  root->det = 2;
  root->crossing = 0;
  root->children = {leaf(resolve_crossing(hopf, 0, 0)), leaf(resolve_crossing(hopf, 0, 1))};
  return QACertificate{root};
}
}  // namespace

TEST_CASE("base recognition") {
  CHECK(is_qa_base(parse_pd("X(1,2,2,1)")) == "unknot");
  CHECK(is_qa_base(parse_pd("O")) == "unknot");
  CHECK(is_qa_base(parse_pd(kTrefoil)) == "reduced-alternating-connected");
  CHECK(is_qa_base(parse_pd(kHopf)) == "reduced-alternating-connected");
  CHECK_FALSE(is_qa_base(parse_pd("O O")).has_value());
  CHECK_FALSE(is_qa_base(parse_pd(std::string(kTrefoil) + " O")).has_value());
  CHECK_FALSE(is_qa_base(parse_pd("X(1,4,2,3) X(2,4,1,3)")).has_value());
}

TEST_CASE("alternating diagrams certify as leaves") {
  for (const char* pd : {kTrefoil, kHopf}) {
    auto cert = certify_qa(parse_pd(pd));
    REQUIRE(cert.has_value());
    REQUIRE(cert->root != nullptr);
    CHECK(cert->root->base == "reduced-alternating-connected");
    CHECK_FALSE(cert->root->crossing.has_value());
    CHECK(verify_certificate(*cert));
  }
}

TEST_CASE("a non-alternating diagram certifies through a split") {
  LinkDiagram d = mixed_closure();
  CHECK_FALSE(is_qa_base(d).has_value());
  auto cert = certify_qa(d);
  REQUIRE(cert.has_value());
  CHECK(cert->root->det == 13);
  REQUIRE(cert->root->crossing.has_value());
  CHECK(cert->root->children[0]->det + cert->root->children[1]->det == 13);
  CHECK(verify_certificate(*cert));
}

TEST_CASE("split links are inconclusive, never certified") {
  CHECK_FALSE(certify_qa(parse_pd("O O")).has_value());
  CHECK_FALSE(certify_qa(parse_pd("X(1,4,2,3) X(2,4,1,3)")).has_value());
  CHECK_FALSE(certify_qa(parse_pd(std::string(kTrefoil) + " O")).has_value());
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(certify_qa(parse_pd(kTrefoil), 0), std::invalid_argument);
  CHECK_THROWS_AS(certify_qa(parse_pd(kTrefoil), -5), std::invalid_argument);
  // one expansion is not enough to ground the children of a split
  CHECK_FALSE(certify_qa(mixed_closure(), 1).has_value());
  CHECK(certify_qa(parse_pd(kTrefoil), 1).has_value());  // a leaf costs one
}

TEST_CASE("verify accepts a hand-built certificate certify would not emit") {
  // certify_qa answers with a leaf for the Hopf link; the split certificate
  // is nonetheless valid and must verify on its own merits.
  QACertificate cert = hopf_certificate();
  CHECK(verify_certificate(cert));
}

TEST_CASE("verify rejects tampering") {
  auto tampered = [](void (*mutate)(QACertificate::Node&)) {
    QACertificate cert = hopf_certificate();
    auto root = std::make_shared<QACertificate::Node>(*cert.root);
    mutate(*root);
    return QACertificate{root};
  };
  CHECK_FALSE(verify_certificate(QACertificate{}));  // empty
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) { n.det = 3; })));
  // both crossings carry the same split (the diagram is that symmetric), so
  // retargeting the certificate at crossing 1 is not a lie
  CHECK(verify_certificate(tampered([](QACertificate::Node& n) { n.crossing = 1; })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) { n.crossing = 2; })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) { n.children[1] = n.children[0]; })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) { n.children[0] = nullptr; })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) {
    auto child = std::make_shared<QACertificate::Node>(*n.children[0]);
    child->det = 2;  // sum no longer matches
    n.children[0] = child;
  })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) {
    auto child = std::make_shared<QACertificate::Node>(*n.children[0]);
    child->base = "reduced-alternating-connected";  // wrong kind for a kinked unknot
    n.children[0] = child;
  })));
  CHECK_FALSE(verify_certificate(tampered([](QACertificate::Node& n) {
    n.base = "unknot";  // leaf and split markers at once
  })));
}

TEST_CASE("certificate JSON round-trip") {
  QACertificate cert = hopf_certificate();
  std::string text = certificate_to_json(cert);
  QACertificate back = certificate_from_json(text);
  CHECK(verify_certificate(back));
  CHECK(certificate_to_json(back) == text);

  auto leaf_cert = certify_qa(parse_pd(kTrefoil));
  REQUIRE(leaf_cert.has_value());
  std::string leaf_text = certificate_to_json(*leaf_cert);
  CHECK(verify_certificate(certificate_from_json(leaf_text)));
  CHECK(leaf_text.find("\"base\"") != std::string::npos);
}

TEST_CASE("certificate JSON rejects malformed shapes") {
  CHECK_THROWS_AS(certificate_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(R"({"pd":"O","det":1})"), std::invalid_argument);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"pd":"O","det":1,"base":"unknot","crossing":0})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"pd":"O","det":1,"crossing":0,"children":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(certificate_to_json(QACertificate{}), std::invalid_argument);
}

TEST_CASE("deep certificates stay consistent with the determinant") {
  // fills of the mixed tangle grow the tree; every certificate must verify
  Tangle t = tangle_sum(rational_tangle(make_slope(2, 1)), rational_tangle(make_slope(-5, 1)));
  for (long long n = 1; n <= 5; ++n) {
    LinkDiagram d = closure(t, Slope{n, 1});
    auto cert = certify_qa(d);
    REQUIRE(cert.has_value());
    CHECK(cert->root->det == static_cast<long long>(determinant_oracle(d)));
    CHECK(verify_certificate(*cert));
  }
}
