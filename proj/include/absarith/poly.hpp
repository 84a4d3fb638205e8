#pragma once

#include <vector>

#include "absarith/error.hpp"
#include "absarith/ints.hpp"

namespace absarith {

// Dense univariate polynomial over the exact integers, coefficient index =
// degree of the term.  Leading coefficient nonzero unless the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPolynomial constant(Int v);
  static IntPolynomial monomial(Int v, std::size_t degree);
  // x^n - 1
  static IntPolynomial xn_minus_1(std::size_t n);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // quotient of an exact division; throws IntegralityError if the division
  // leaves a remainder or needs non-integer coefficients
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  // remainder after division by a monic divisor (exact over the integers)
  IntPolynomial mod_monic(const IntPolynomial& divisor) const;

  Int evaluate(const Int& x) const;
  // f(a/b) * b^deg(f), the homogenization value f(a:b)
  Int evaluate_homogeneous(const Int& a, const Int& b) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Sylvester-matrix resultant via fraction-free (Bareiss) elimination.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace absarith
