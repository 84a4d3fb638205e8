#pragma once

#include <complex>

#include "absarith/cyclotomic.hpp"
#include "absarith/habiro_topology.hpp"
#include "absarith/poly.hpp"

namespace absarith {

// Truncated element of the cyclotomic completion of Z[x], written in the
// q-factorial basis: sum_{n < N} a_n(x) [n!]_x with deg a_n <= n.  (The
// bound deg a_n <= n, with a_0 a constant, is what makes the monomials
// x^j [n!]_x, 0 <= j <= n, tile every degree exactly once.)
struct HabiroElement {
  std::vector<IntPolynomial> coeffs;  // coeffs[n] = a_n(x)

  u32 level() const { return static_cast<u32>(coeffs.size()); }
};

// [n!]_x = (x^n - 1)(x^{n-1} - 1) ... (x - 1), with [0!]_x = 1
IntPolynomial q_factorial(u32 n);

// expand sum a_n(x) [n!]_x back into a plain polynomial
IntPolynomial expand(const HabiroElement& e);

// unique factorial-basis coordinates of f at truncation level N;
// requires deg f < N(N+1)/2
HabiroElement to_factorial_basis(const IntPolynomial& f, u32 level);

// exact evaluation at the root of unity z; terms with n >= order(z) vanish
CyclotomicNumber evaluate_at_root(const HabiroElement& e, const RootOfUnity& z);

// sum_{n < N} (-1)^n [n!]_x
HabiroElement kontsevich_element(u32 level);

struct ZagierSum {
  std::complex<double> value;
  double tail_bound;  // geometric majorant of the dropped tail
  u64 terms_used;
};

// -(1/2) sum_{n>=1} n chi(n) x^{(n^2-1)/24} with chi the quadratic character
// of conductor 12; adaptive truncation, |x| < 1 required.
ZagierSum zagier_rhs(std::complex<double> x, u64 max_terms = 0);

}  // namespace absarith
