#pragma once

#include "absarith/exact.hpp"
#include "absarith/poly.hpp"

namespace absarith {

// Element of Z[zeta_N]: integer polynomial in zeta_N of degree < phi(N),
// reduced modulo the N-th cyclotomic polynomial.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1) {}
  CyclotomicNumber(u32 order, IntPolynomial value);
  static CyclotomicNumber integer(Int v, u32 order = 1);
  // zeta_N^k
  static CyclotomicNumber root_power(u32 order, u64 k);

  u32 order() const { return order_; }
  const IntPolynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return value_.degree() <= 0; }
  Int to_integer() const;

  CyclotomicNumber operator+(const CyclotomicNumber& o) const;
  CyclotomicNumber operator-(const CyclotomicNumber& o) const;
  CyclotomicNumber operator*(const CyclotomicNumber& o) const;
  bool operator==(const CyclotomicNumber& o) const;

  // zeta -> zeta^-1 on symbols (complex conjugation on values)
  CyclotomicNumber conjugate() const;

  // image under Z[zeta_N] -> Z[zeta_M], zeta_N -> zeta_M^{M/N}; requires N | M
  CyclotomicNumber lift(u32 new_order) const;

  std::string str() const;

 private:
  u32 order_;
  IntPolynomial value_;
};

// f(zeta_order^k), the polynomial evaluated at a root of unity
CyclotomicNumber evaluate_at_zeta(const IntPolynomial& f, u32 order, u64 k);

}  // namespace absarith
