#pragma once

#include <set>
#include <vector>

#include "absarith/exact.hpp"

namespace absarith {

// Schematic point of the absolute projective line: [0], [infinity], or a
// finite point [n] standing for the orbit of primitive n-th roots of unity.
struct P1Point {
  enum class Tag { Zero, Infinity, Finite };
  Tag tag = Tag::Finite;
  u64 n = 1;

  static P1Point zero() { return {Tag::Zero, 0}; }
  static P1Point infinity() { return {Tag::Infinity, 0}; }
  static P1Point finite(u64 n);

  bool is_finite() const { return tag == Tag::Finite; }
  auto operator<=>(const P1Point&) const = default;

  std::string str() const;
};

// degree([n]) = phi(n), degree of the two boundary points is 1
u64 p1_degree(const P1Point& pt);

// e^{2 pi i g/h} stored as the reduced fraction g/h in Q/Z, 0 <= g < h.
struct RootOfUnity {
  u64 g = 0;
  u64 h = 1;

  static RootOfUnity make(i64 g, i64 h);
  u64 order() const { return h; }
  RootOfUnity operator+(const RootOfUnity& o) const;
  RootOfUnity operator-(const RootOfUnity& o) const;
  // k * (g/h) mod 1
  RootOfUnity scaled(u64 k) const;
  auto operator<=>(const RootOfUnity&) const = default;
  std::string str() const;
};

// A Habiro-open set, kept as a descriptor; opens are never materialized.
// Basic opens U_m (m = prod p_i^{k_i}) contain [n] iff p_i | n implies
// p_i^{k_i+1} | n for every i; the flags adjoin [0] and/or [infinity].
struct HabiroOpenDescriptor {
  enum class Kind { Basic, Cofinite };
  Kind kind = Kind::Basic;
  u64 m = 1;
  std::vector<P1Point> excluded;  // cofinite variant only
  bool include_zero = false;
  bool include_infinity = false;

  static HabiroOpenDescriptor basic(u64 m, bool zero = false, bool infinity = false);
  static HabiroOpenDescriptor cofinite(std::vector<P1Point> excluded);
};

// true iff max(m,n)/min(m,n) is a positive power of a single prime; the
// relation is irreflexive by convention.
bool adjacent(u64 m, u64 n);

// true iff x != y and the order of x - y in Q/Z is a prime power
bool adjacent_roots(const RootOfUnity& x, const RootOfUnity& y);

bool in_open(const HabiroOpenDescriptor& open, const P1Point& pt);

// U_m intersect U_n = U_lcm(m,n)
u64 intersect_basic(u64 m, u64 n);

// all points of the complement of U_p with finite part <= bound,
// i.e. { [pa] : p does not divide a } plus [0] and [infinity]
std::vector<P1Point> complement_of_U_p(u64 p, u64 bound);

// product p_1...p_k, with the covering-failure assertions of the
// non-compactness argument checked along the way
u64 noncompactness_witness(const std::vector<u64>& primes);

struct WheelEdge {
  RootOfUnity a;
  RootOfUnity b;
  u64 prime;  // prime of the connecting prime-power order
  auto operator<=>(const WheelEdge&) const = default;
};

// adjacency graph on mu_N: vertices g/N reduced, edges where the difference
// has prime-power order, labeled by that prime
std::vector<WheelEdge> adjacency_wheel(u64 N);
std::vector<WheelEdge> adjacency_wheel_serial(u64 N);
std::vector<RootOfUnity> wheel_vertices(u64 N);

}  // namespace absarith
