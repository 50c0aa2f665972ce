#include "qalink/slopes.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qalink {

Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  long long g = std::gcd(std::llabs(p), std::llabs(q));
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;  // both signs of infinity are the one slope 1/0
  return Slope{p, q};
}

Slope parse_slope(const std::string& text) {
  auto parse_ll = [&](const char* b, const char* e) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
      throw std::invalid_argument("bad slope literal: " + text);
    return v;
  };
  const char* b = text.data();
  const char* e = b + text.size();
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_slope(parse_ll(b, e), 1);
  return make_slope(parse_ll(b, b + slash), parse_ll(b + slash + 1, e));
}

std::string to_string(const Slope& s) {
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

ContinuedFraction cf_expand(const Slope& s) {
  if (s.q == 0) return {};
  if (s.p < 0) throw std::invalid_argument("negative slope: mirror first");
  ContinuedFraction terms;
  long long p = s.p, q = s.q;
  while (q != 0) {
    terms.push_back(p / q);
    long long r = p % q;
    p = q;
    q = r;
  }
  return terms;
}

Slope cf_evaluate(const ContinuedFraction& terms) {
  // continuants: start at 1/0 over 0/1 so the empty list is infinity
  long long p1 = 1, q1 = 0, p0 = 0, q0 = 1;
  for (long long a : terms) {
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return make_slope(p1, q1);
}

std::pair<Slope, Slope> cf_resolve_last(const ContinuedFraction& terms) {
  if (terms.empty()) throw std::invalid_argument("cannot resolve the empty expansion");
  ContinuedFraction head(terms.begin(), terms.end() - 1);
  Slope r0 = cf_evaluate(head);
  head.push_back(terms.back() - 1);
  Slope r1 = cf_evaluate(head);
  return {r0, r1};
}

long long slope_distance(const Slope& a, const Slope& b) {
  return std::llabs(a.p * b.q - b.p * a.q);
}

FramedTangleInvariants make_invariants(long long d_inf, long long d_zero) {
  if (d_inf < 1 || d_zero < 1)
    throw std::invalid_argument("closure determinants must be positive");
  FramedTangleInvariants inv;
  inv.c = std::gcd(d_inf, d_zero);
  inv.n = d_inf / inv.c;
  inv.m = -d_zero / inv.c;
  inv.d_inf = d_inf;
  inv.d_zero = d_zero;
  return inv;
}

long long predicted_det(const FramedTangleInvariants& inv, const Slope& r) {
  return inv.c * std::llabs(r.p * inv.n - r.q * inv.m);
}

CableImage cable_image_slope(long long p, long long q, long long k, int sign) {
  if (q < 2) throw std::invalid_argument("cable requires q >= 2");
  if (k < 1) throw std::invalid_argument("cable requires k >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  if (std::gcd(std::llabs(p), q) != 1)
    throw std::invalid_argument("cable parameters p, q must be coprime");
  long long num = k * p * q + sign;
  return CableImage{make_slope(num, k), make_slope(num, k * q * q)};
}

std::string heil_orbifold(const std::vector<long long>& cone_points,
                          const Slope& fill, const Slope& fiber) {
  for (long long c : cone_points)
    if (c < 2) throw std::invalid_argument("cone points must be >= 2");
  long long delta = slope_distance(fill, fiber);
  if (delta == 0)
    return "connect sum of " + std::to_string(cone_points.size()) + " lens spaces";
  std::ostringstream out;
  out << "S2(";
  for (long long c : cone_points) out << c << ',';
  out << delta << ')';
  return out.str();
}

}  // namespace qalink
