#include "absarith/habiro_topology.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absarith {

P1Point P1Point::finite(u64 n) {
  if (n == 0) throw DomainError("P1Point: finite index must be >= 1");
  return {Tag::Finite, n};
}

std::string P1Point::str() const {
  switch (tag) {
    case Tag::Zero:
      return "[0]";
    case Tag::Infinity:
      return "[inf]";
    default:
      return "[" + std::to_string(n) + "]";
  }
}

u64 p1_degree(const P1Point& pt) { return pt.is_finite() ? euler_phi(pt.n) : 1; }

RootOfUnity RootOfUnity::make(i64 g, i64 h) {
  if (h <= 0) throw DomainError("RootOfUnity: denominator must be positive");
  i64 gr = g % h;
  if (gr < 0) gr += h;
  u64 d = gcd_u64(static_cast<u64>(gr), static_cast<u64>(h));
  if (gr == 0) return {0, 1};
  return {static_cast<u64>(gr) / d, static_cast<u64>(h) / d};
}

RootOfUnity RootOfUnity::operator+(const RootOfUnity& o) const {
  u64 l = lcm_u64(h, o.h);
  u64 num = (g * (l / h) + o.g * (l / o.h)) % l;
  return make(static_cast<i64>(num), static_cast<i64>(l));
}

RootOfUnity RootOfUnity::operator-(const RootOfUnity& o) const {
  u64 l = lcm_u64(h, o.h);
  u64 num = (g * (l / h) + l - o.g * (l / o.h) % l) % l;
  return make(static_cast<i64>(num), static_cast<i64>(l));
}

RootOfUnity RootOfUnity::scaled(u64 k) const {
  u64 num = (g % h) * (k % h) % h;
  return make(static_cast<i64>(num % h), static_cast<i64>(h));
}

std::string RootOfUnity::str() const { return std::to_string(g) + "/" + std::to_string(h); }

HabiroOpenDescriptor HabiroOpenDescriptor::basic(u64 m, bool zero, bool infinity) {
  if (m == 0) throw DomainError("U_m: m must be >= 1");
  HabiroOpenDescriptor d;
  d.kind = Kind::Basic;
  d.m = m;
  d.include_zero = zero;
  d.include_infinity = infinity;
  return d;
}

HabiroOpenDescriptor HabiroOpenDescriptor::cofinite(std::vector<P1Point> excluded) {
  HabiroOpenDescriptor d;
  d.kind = Kind::Cofinite;
  d.excluded = std::move(excluded);
  d.include_zero =
      std::find(d.excluded.begin(), d.excluded.end(), P1Point::zero()) == d.excluded.end();
  d.include_infinity =
      std::find(d.excluded.begin(), d.excluded.end(), P1Point::infinity()) == d.excluded.end();
  return d;
}

bool adjacent(u64 m, u64 n) {
  if (m == 0 || n == 0) throw DomainError("adjacent: arguments must be >= 1");
  if (m == n) return false;
  const u64 hi = std::max(m, n), lo = std::min(m, n);
  if (hi % lo != 0) return false;
  return prime_power_base(hi / lo).has_value();
}

bool adjacent_roots(const RootOfUnity& x, const RootOfUnity& y) {
  if (x == y) return false;
  RootOfUnity diff = x - y;
  return prime_power_base(diff.order()).has_value();
}

bool in_open(const HabiroOpenDescriptor& open, const P1Point& pt) {
  if (open.kind == HabiroOpenDescriptor::Kind::Cofinite)
    return std::find(open.excluded.begin(), open.excluded.end(), pt) == open.excluded.end();
  if (pt.tag == P1Point::Tag::Zero) return open.include_zero;
  if (pt.tag == P1Point::Tag::Infinity) return open.include_infinity;
  Factorization f = factorize(open.m);
  for (const auto& [p, e] : f.factors) {
    const u64 prime = static_cast<u64>(p);
    if (pt.n % prime != 0) continue;
    u64 pk1 = 1;
    for (u32 i = 0; i <= e; ++i) pk1 *= prime;  // p^{k+1}
    if (pt.n % pk1 != 0) return false;
  }
  return true;
}

u64 intersect_basic(u64 m, u64 n) {
  if (m == 0 || n == 0) throw DomainError("intersect_basic: arguments must be >= 1");
  return lcm_u64(m, n);
}

std::vector<P1Point> complement_of_U_p(u64 p, u64 bound) {
  if (!is_prime(p)) throw DomainError("complement_of_U_p: p must be prime");
  std::vector<P1Point> out;
  for (u64 n = p; n <= bound; n += p)
    if ((n / p) % p != 0) out.push_back(P1Point::finite(n));
  out.push_back(P1Point::zero());
  out.push_back(P1Point::infinity());
  return out;
}

u64 noncompactness_witness(const std::vector<u64>& primes) {
  if (primes.empty()) throw DomainError("noncompactness_witness: need at least one prime");
  u64 product = 1;
  for (u64 p : primes) {
    if (!is_prime(p)) throw DomainError("noncompactness_witness: inputs must be prime");
    product *= p;
  }
  const P1Point pt = P1Point::finite(product);
  for (u64 p : primes) {
    HabiroOpenDescriptor open = HabiroOpenDescriptor::basic(p, true, true);
    if (in_open(open, pt))
      throw DomainError("noncompactness_witness: witness unexpectedly covered");
  }
  // the cover property: [n] lies in U_q whenever q does not divide n
  for (u64 q : primes_up_to(50))
    if (product % q != 0 && !in_open(HabiroOpenDescriptor::basic(q), pt))
      throw DomainError("noncompactness_witness: cover property violated");
  return product;
}

std::vector<RootOfUnity> wheel_vertices(u64 N) {
  std::vector<RootOfUnity> v;
  v.reserve(N);
  for (u64 g = 0; g < N; ++g) v.push_back(RootOfUnity::make(static_cast<i64>(g), static_cast<i64>(N)));
  return v;
}

namespace {

std::vector<WheelEdge> edges_for_vertex(const std::vector<RootOfUnity>& verts, std::size_t i) {
  std::vector<WheelEdge> out;
  for (std::size_t j = i + 1; j < verts.size(); ++j) {
    RootOfUnity diff = verts[i] - verts[j];
    auto p = prime_power_base(diff.order());
    if (p) out.push_back({verts[i], verts[j], *p});
  }
  return out;
}

}  // namespace

std::vector<WheelEdge> adjacency_wheel_serial(u64 N) {
  if (N < 2) throw DomainError("adjacency_wheel: N must be >= 2");
  const auto verts = wheel_vertices(N);
  std::vector<WheelEdge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto part = edges_for_vertex(verts, i);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  return edges;
}

std::vector<WheelEdge> adjacency_wheel(u64 N) {
  if (N < 2) throw DomainError("adjacency_wheel: N must be >= 2");
  const auto verts = wheel_vertices(N);
  std::vector<std::vector<WheelEdge>> parts(verts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < verts.size(); ++i) parts[i] = edges_for_vertex(verts, i);
  std::vector<WheelEdge> edges;
  for (auto& part : parts) edges.insert(edges.end(), part.begin(), part.end());
  return edges;
}

}  // namespace absarith
