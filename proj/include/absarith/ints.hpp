#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace absarith {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Exact arbitrary-precision integers and rationals used wherever a value can
// outgrow machine words (resultants, Witt coefficients, a^n - b^n, ...).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = m == 1 ? 0 : 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Canonical residue of a possibly negative value in [0, m).
inline u64 residue(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

inline u64 residue_big(const Int& a, u64 m) {
  Int r = a % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

inline Int pow_int(Int base, u64 exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline Rat numer_denom(const Int& n, const Int& d) { return Rat(n, d); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) {
  if (rat_den(v) == 1) return rat_num(v).str();
  return rat_num(v).str() + "/" + rat_den(v).str();
}

}  // namespace absarith
