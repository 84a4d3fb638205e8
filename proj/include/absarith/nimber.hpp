#pragma once

#include <map>
#include <vector>

#include "absarith/error.hpp"
#include "absarith/habiro_topology.hpp"
#include "absarith/ints.hpp"

namespace absarith {

// Finite nimbers: naturals < 2^64 with xor addition and Conway
// multiplication; those below 2^{2^k} form the field with 2^{2^k} elements.

inline u64 nim_add(u64 a, u64 b) { return a ^ b; }

// Fast multiplication by recursive splitting at Fermat 2-power blocks.
u64 nim_mul(u64 a, u64 b);

u64 nim_pow(u64 a, u64 e);
u64 nim_inverse(u64 a);

// multiplicative order inside the enclosing field
u64 nim_order(u64 a);

// minimal k with a < 2^{2^k}
u32 enclosing_field_level(u64 a);

// Ground truth built from the raw mex recursion: a full product table on
// [0, bound)^2 filled along anti-diagonals (each cell's mex set only touches
// earlier diagonals).  Products of 16-bit nimbers are recovered from the
// table by splitting at 256 and using distributivity over xor; the constants
// that splitting needs (a1*256 and 256*256) are themselves raw table cells.
class NimOracle {
 public:
  explicit NimOracle(u32 bound = 257, bool parallel = true);

  u32 bound() const { return bound_; }
  // raw mex value, a,b < bound
  u64 table(u32 a, u32 b) const;
  // oracle product for a,b < 2^16
  u64 mul(u64 a, u64 b) const;

  static const NimOracle& shared();

 private:
  u32 bound_;
  std::vector<u32> cells_;
};

// serial twin of the wavefront fill, kept for the benchmark and for testing
// the parallel schedule
std::vector<u32> mex_table_serial(u32 bound);
std::vector<u32> mex_table_parallel(u32 bound);

// g_1 = 2; for k >= 2 the smallest g with g^(2^{2^{k-1}}+1) = g_{k-1}.
// Levels <= 4 are instant; level 5 scans ~1.4e6 candidates.
u64 tower_generator(u32 k);

// a = g_k^e in the enclosing level-k field; returns e / (2^{2^k}-1) reduced
RootOfUnity nimber_to_root(u64 a);

// {a, a^2, a^4, ...} until repetition
std::vector<u64> frobenius_orbit(u64 a);

// Polynomial over F_2 as a coefficient bitmask, bit i = coefficient of x^i.
struct F2Polynomial {
  u64 bits = 0;

  int degree() const;
  bool operator==(const F2Polynomial&) const = default;
  auto operator<=>(const F2Polynomial&) const = default;
  std::string str() const;
};

bool f2_irreducible(const F2Polynomial& f);

// prod (X - alpha) over the orbit, expanded with nimber arithmetic; all
// coefficients must land in {0,1}
F2Polynomial orbit_to_polynomial(const std::vector<u64>& orbit);

// the root of unity of the smallest ordinal in the Frobenius orbit attached
// to the irreducible polynomial f != x
RootOfUnity polynomial_to_root(const F2Polynomial& f);

// orbit of f's roots inside the quadratic closure (degree must divide 2^k)
std::vector<u64> polynomial_to_orbit(const F2Polynomial& f);

// Divisor on P^1_{F_2} minus {0, infinity}: integer combination of
// irreducible polynomials != x, with the multiplication induced from the
// group algebra of the roots.
struct F2Divisor {
  std::map<F2Polynomial, i64> terms;

  void add(const F2Polynomial& f, i64 coeff);
  bool operator==(const F2Divisor&) const = default;
  std::string str() const;
};

F2Divisor divisor_mul(const F2Divisor& d, const F2Divisor& e);

// the full level-k dictionary: one row per Frobenius orbit
struct DictionaryRow {
  u64 smallest;             // orbit representative
  std::vector<u64> orbit;
  F2Polynomial poly;
  RootOfUnity root;         // for the orbit of 0 this is unused
  bool is_zero_orbit;
};
std::vector<DictionaryRow> field_dictionary(u32 level);

}  // namespace absarith
