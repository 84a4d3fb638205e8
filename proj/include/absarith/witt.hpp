#pragma once

#include <vector>

#include "absarith/error.hpp"
#include "absarith/ints.hpp"

namespace absarith {

// --- coefficient rings ------------------------------------------------------

struct ZRing {
  using Elem = Int;
  static constexpr const char* name = "Z";
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(i64 v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same(const ZRing&) const { return true; }
  // division by a positive integer, exact or IntegralityError
  Elem div_int(const Elem& a, u64 n, u32 index) const {
    if (a % n != 0)
      throw IntegralityError("non-integral Witt coefficient at index " + std::to_string(index));
    return a / n;
  }
  std::string str(const Elem& a) const { return a.str(); }
};

struct QRing {
  using Elem = Rat;
  static constexpr const char* name = "Q";
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(i64 v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same(const QRing&) const { return true; }
  Elem div_int(const Elem& a, u64 n, u32) const { return a / n; }
  std::string str(const Elem& a) const { return to_string(a); }
};

struct FpRing {
  u64 p;
  using Elem = u64;
  static constexpr const char* name = "Fp";
  explicit FpRing(u64 prime) : p(prime) {}
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(i64 v) const { return residue(v, p); }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
  Elem neg(Elem a) const { return (p - a % p) % p; }
  bool is_zero(Elem a) const { return a % p == 0; }
  bool eq(Elem a, Elem b) const { return a % p == b % p; }
  bool same(const FpRing& o) const { return p == o.p; }
  std::string str(Elem a) const { return std::to_string(a % p); }
};

// --- Witt vectors -----------------------------------------------------------

// Element of the truncated witty ring w_N(R): the power series
// 1 + a_1 t + ... + a_N t^N.  Addition is series multiplication, zero is the
// constant series 1, multiplication is fixed by Teichmuller multiplicativity.
template <class R>
class WittVector {
 public:
  WittVector(R ring, std::vector<typename R::Elem> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {}

  u32 precision() const { return static_cast<u32>(c_.size()); }
  const R& ring() const { return ring_; }
  const std::vector<typename R::Elem>& coeffs() const { return c_; }
  std::vector<typename R::Elem>& coeffs() { return c_; }

  bool operator==(const WittVector& o) const {
    if (!ring_.same(o.ring_) || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!ring_.eq(c_[i], o.c_[i])) return false;
    return true;
  }

 private:
  R ring_;
  std::vector<typename R::Elem> c_;
};

using WittZ = WittVector<ZRing>;
using WittQ = WittVector<QRing>;
using WittFp = WittVector<FpRing>;

template <class R>
using Ghost = std::vector<typename R::Elem>;

// boxed 0, the constant series 1
template <class R>
WittVector<R> witt_zero(const R& ring, u32 precision) {
  return WittVector<R>(ring, std::vector<typename R::Elem>(precision, ring.zero()));
}

// boxed 1 = 1/(1-t)
template <class R>
WittVector<R> witt_one(const R& ring, u32 precision) {
  return WittVector<R>(ring, std::vector<typename R::Elem>(precision, ring.one()));
}

// 1/(1 - a t): coefficients a, a^2, ..., a^N
template <class R>
WittVector<R> teichmuller(const R& ring, const typename R::Elem& a, u32 precision) {
  std::vector<typename R::Elem> c(precision);
  typename R::Elem acc = ring.one();
  for (u32 i = 0; i < precision; ++i) {
    acc = ring.mul(acc, a);
    c[i] = acc;
  }
  return WittVector<R>(ring, std::move(c));
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& u, const WittVector<R>& v);

template <class R>
WittVector<R> witt_neg(const WittVector<R>& u);

template <class R>
WittVector<R> witt_sub(const WittVector<R>& u, const WittVector<R>& v) {
  return witt_add(u, witt_neg(v));
}

// ghost components off the logarithmic derivative t u'/u; needs no division
template <class R>
Ghost<R> ghost(const WittVector<R>& u);

// unique u with ghost(u) = g; divisions by n are exact over Q and
// integrality-checked over Z
template <class R>
WittVector<R> ghost_inverse(const R& ring, const Ghost<R>& g);

WittZ witt_mul(const WittZ& u, const WittZ& v);
WittQ witt_mul(const WittQ& u, const WittQ& v);
// F_p multiplication through the cached universal polynomials
WittFp witt_mul(const WittFp& u, const WittFp& v);

// Frobenius Psi^n, characterized by ghost(Psi^n u)_m = ghost(u)_{nm};
// output precision floor(N/n)
WittZ frobenius(u32 n, const WittZ& u);
WittQ frobenius(u32 n, const WittQ& u);
WittFp frobenius(u32 n, const WittFp& u);

// V_n: t -> t^n, truncated to the input precision
template <class R>
WittVector<R> verschiebung(u32 n, const WittVector<R>& u);

// [n]: u(t)^n, the n-fold boxed sum
template <class R>
WittVector<R> add_multiple(u32 n, const WittVector<R>& u);

// lambda-descent data: the values Psi^1(a), ..., Psi^N(a) supplied by the
// caller; the library never guesses a lambda-structure.
struct AdamsSequence {
  std::vector<Rat> values;
};

// sigma_t(a) = exp(sum Psi^n(a) t^n / n), i.e. the ghost inverse of the
// Adams sequence; exact over Q
WittQ sigma_t(const AdamsSequence& a);
// integrality-asserting variant for integer lambda-rings
WittZ sigma_t_integral(const AdamsSequence& a);

// --- universal multiplication polynomials for F_p ---------------------------

struct WittMulTable {
  u32 precision = 0;
  // polys[n-1]: list of (sparse monomial, coefficient); variables 0..N-1 are
  // the u-coefficients, N..2N-1 the v-coefficients
  std::vector<std::vector<std::pair<std::vector<std::pair<u32, u32>>, Int>>> polys;
};

// computed once over symbolic rationals, verified integral, cached on disk
// under ABSARITH_CACHE_DIR (default ./.absarith_cache); precision <= 16
const WittMulTable& witt_mul_table(u32 precision);

std::string witt_cache_dir();

// --- conversions ------------------------------------------------------------

WittQ to_rational(const WittZ& u);
WittZ to_integral(const WittQ& u);  // IntegralityError when a denominator survives
WittFp reduce_mod_p(const WittZ& u, u64 p);
WittZ lift_to_z(const WittFp& u);

// --- generic template bodies -------------------------------------------------

template <class R>
void check_compatible(const WittVector<R>& u, const WittVector<R>& v) {
  if (!u.ring().same(v.ring())) throw DomainError("witt: coefficient ring mismatch");
  if (u.precision() != v.precision()) throw DomainError("witt: precision mismatch");
}

template <class R>
WittVector<R> witt_add(const WittVector<R>& u, const WittVector<R>& v) {
  check_compatible(u, v);
  const R& ring = u.ring();
  const u32 n = u.precision();
  std::vector<typename R::Elem> c(n, ring.zero());
  for (u32 i = 0; i < n; ++i) {
    typename R::Elem acc = ring.add(u.coeffs()[i], v.coeffs()[i]);
    for (u32 k = 0; k + 1 < i + 1; ++k)
      acc = ring.add(acc, ring.mul(u.coeffs()[k], v.coeffs()[i - 1 - k]));
    c[i] = acc;
  }
  return WittVector<R>(ring, std::move(c));
}

template <class R>
WittVector<R> witt_neg(const WittVector<R>& u) {
  // series inverse of 1 + sum a_i t^i
  const R& ring = u.ring();
  const u32 n = u.precision();
  std::vector<typename R::Elem> c(n, ring.zero());
  for (u32 i = 0; i < n; ++i) {
    typename R::Elem acc = ring.neg(u.coeffs()[i]);
    for (u32 k = 0; k < i; ++k)
      acc = ring.sub(acc, ring.mul(c[k], u.coeffs()[i - 1 - k]));
    c[i] = acc;
  }
  return WittVector<R>(ring, std::move(c));
}

template <class R>
Ghost<R> ghost(const WittVector<R>& u) {
  const R& ring = u.ring();
  const u32 n = u.precision();
  Ghost<R> g(n, ring.zero());
  for (u32 i = 1; i <= n; ++i) {
    typename R::Elem acc = ring.mul(ring.from_int(static_cast<i64>(i)), u.coeffs()[i - 1]);
    for (u32 k = 1; k < i; ++k)
      acc = ring.sub(acc, ring.mul(g[k - 1], u.coeffs()[i - k - 1]));
    g[i - 1] = acc;
  }
  return g;
}

template <class R>
WittVector<R> ghost_inverse(const R& ring, const Ghost<R>& g) {
  const u32 n = static_cast<u32>(g.size());
  std::vector<typename R::Elem> c(n, ring.zero());
  for (u32 i = 1; i <= n; ++i) {
    typename R::Elem acc = g[i - 1];  // k = i term, c_0 = 1
    for (u32 k = 1; k < i; ++k)
      acc = ring.add(acc, ring.mul(g[k - 1], c[i - k - 1]));
    c[i - 1] = ring.div_int(acc, i, i);
  }
  return WittVector<R>(ring, std::move(c));
}

template <class R>
WittVector<R> verschiebung(u32 n, const WittVector<R>& u) {
  if (n == 0) throw DomainError("verschiebung: n must be >= 1");
  const R& ring = u.ring();
  const u32 prec = u.precision();
  std::vector<typename R::Elem> c(prec, ring.zero());
  for (u32 i = 1; i * n <= prec; ++i) c[i * n - 1] = u.coeffs()[i - 1];
  return WittVector<R>(ring, std::move(c));
}

template <class R>
WittVector<R> add_multiple(u32 n, const WittVector<R>& u) {
  WittVector<R> acc = witt_zero(u.ring(), u.precision());
  for (u32 i = 0; i < n; ++i) acc = witt_add(acc, u);
  return acc;
}

}  // namespace absarith
