#pragma once

#include <string>
#include <vector>

#include "absarith/cyclotomic.hpp"

namespace absarith {

// Character-table-level data for a finite group: class sizes, the power map
// class -> class of g^n, and the irreducible character values.  Everything
// the Adams operations need, with no group elements in sight.
struct CharacterTable {
  struct ConjClass {
    std::string label;
    u64 size = 1;
    u64 element_order = 1;
    // power[k] = index of the class of g^k, for 0 <= k < element_order
    std::vector<u32> power;
  };

  std::vector<ConjClass> classes;
  std::vector<std::vector<CyclotomicNumber>> chars;  // chars[i][c] = chi_i(class c)
  u64 group_order = 0;

  u32 class_count() const { return static_cast<u32>(classes.size()); }
  // class of g^n for g in class c (n reduced mod the element order)
  u32 power_class(u32 c, u64 n) const;

  // consistency: sizes sum to |G|, power map well-formed, column orthogonality
  void validate() const;

  static CharacterTable from_json(const std::string& text);
  static CharacterTable load(const std::string& path);
  // the S3 table used throughout the worked examples
  static CharacterTable s3();
  static CharacterTable cyclic(u32 n);
  static CharacterTable trivial();
};

// Integer coordinates in the irreducible basis of R(G).
struct VirtualCharacter {
  std::vector<i64> coords;
  bool operator==(const VirtualCharacter&) const = default;
  std::string str() const;
};

// Psi^n: chi -> (g -> chi(g^n)), decomposed back into the irreducible basis;
// non-integral coordinates signal inconsistent table data.
VirtualCharacter adams(u64 n, const VirtualCharacter& chi, const CharacterTable& table);

// pointwise product of two virtual characters, decomposed in the basis
VirtualCharacter character_mul(const VirtualCharacter& a, const VirtualCharacter& b,
                               const CharacterTable& table);

// Delta(R(G)) = |G|^h / prod |class|
Rat discriminant(const CharacterTable& table);

// the action of n on S = alg maps = classes: class x -> class of x^n
std::vector<u32> monoid_action(u64 n, const CharacterTable& table);

// image set n.S as a sorted list of class indices
std::vector<u32> stable_set(u64 n, const CharacterTable& table);

struct ConductorData {
  u64 r0 = 1;
  // per divisor d of r0, the stable set d.S
  std::vector<std::pair<u64, std::vector<u32>>> stable_sets;
};

// r0 = prod p^{a_p} over p | Delta, with a_p minimal such that
// p^{a_p+1}.S = p^{a_p}.S; includes the stable-set lattice
ConductorData conductor_data(const CharacterTable& table);

}  // namespace absarith
