#pragma once

#include "absarith/witt.hpp"

namespace absarith {

// Element of the completed Burnside ring of the infinite cyclic group,
// b_n = multiplicity of the orbit C_n (virtual when negative); doubles as a
// necklace-algebra element under componentwise addition.
struct BurnsideVector {
  std::vector<Int> b;  // b[0] = b_1, ..., b[N-1] = b_N

  u32 precision() const { return static_cast<u32>(b.size()); }
  static BurnsideVector zero(u32 precision) { return {std::vector<Int>(precision, Int(0))}; }
  // the unit: one copy of C_1
  static BurnsideVector unit(u32 precision);
  BurnsideVector extended(u32 new_precision) const;
  bool operator==(const BurnsideVector&) const = default;
};

BurnsideVector burnside_add(const BurnsideVector& x, const BurnsideVector& y);

// necklace product: (b.c)_n = sum_{lcm(i,j)=n} gcd(i,j) b_i c_j
BurnsideVector necklace_mul(const BurnsideVector& x, const BurnsideVector& y);

// fixed points of c^n: b-hat_n = sum_{i|n} i b_i
Int burnside_ghost(const BurnsideVector& x, u32 n);

// Dress-Siebeneicher isomorphism s_t: prod (1/(1-t^n))^{b_n}
WittZ burnside_to_witt(const BurnsideVector& x);

// inverse of s_t by the recursion b_n = (ghost_n - sum_{d|n, d<n} d b_d)/n;
// divisibility failures are IntegralityErrors, never roundings
BurnsideVector witt_to_burnside(const WittZ& u);

// tau from classical Witt coordinates: prod 1/(1-q_n t^n) -> Burnside
BurnsideVector tau(const std::vector<Int>& q);

// Adams operation res_n(C_m) = gcd(n,m) C_{lcm(n,m)/n}, extended linearly
BurnsideVector burnside_res(u32 n, const BurnsideVector& x);

// induction ind_n(C_m) = C_{nm}; throws SizeError if nonzero support would
// leave the truncation window
BurnsideVector burnside_ind(u32 n, const BurnsideVector& x);

// necklace Frobenius f_n(b)_k = sum_{lcm(n,i)=nk} gcd(n,i) b_i
BurnsideVector necklace_frobenius(u32 n, const BurnsideVector& x);

// necklace Verschiebung: interleave n-1 zeros; overflow of nonzero support
// is a SizeError
BurnsideVector necklace_verschiebung(u32 n, const BurnsideVector& x);

// Moebius necklace numbers of m: b_n = (1/n) sum_{d|n} mu(n/d) m^d
std::vector<Int> necklace_numbers(const Int& m, u32 precision);

}  // namespace absarith
