#include "absarith/habiro_ring.hpp"

#include <cmath>

namespace absarith {

IntPolynomial q_factorial(u32 n) {
  IntPolynomial f = IntPolynomial::constant(1);
  for (u32 k = 1; k <= n; ++k) f = f * IntPolynomial::xn_minus_1(k);
  return f;
}

IntPolynomial expand(const HabiroElement& e) {
  IntPolynomial sum;
  IntPolynomial fact = IntPolynomial::constant(1);
  for (u32 n = 0; n < e.level(); ++n) {
    if (n > 0) fact = fact * IntPolynomial::xn_minus_1(n);
    sum = sum + e.coeffs[n] * fact;
  }
  return sum;
}

HabiroElement to_factorial_basis(const IntPolynomial& f, u32 level) {
  if (level == 0) throw DomainError("to_factorial_basis: level must be >= 1");
  const u64 capacity = static_cast<u64>(level) * (level + 1) / 2;
  if (f.degree() >= static_cast<int>(capacity))
    throw SizeError("to_factorial_basis: degree too large for this level");

  HabiroElement e;
  e.coeffs.assign(level, IntPolynomial());

  // precompute [n!]_x
  std::vector<IntPolynomial> facts(level);
  facts[0] = IntPolynomial::constant(1);
  for (u32 n = 1; n < level; ++n) facts[n] = facts[n - 1] * IntPolynomial::xn_minus_1(n);

  // The monomials x^j [n!]_x (0 <= j <= n) have degree n(n+1)/2 + j, so every
  // degree below the capacity is hit exactly once; eliminate from the top.
  IntPolynomial rem = f;
  while (!rem.is_zero()) {
    const u64 d = static_cast<u64>(rem.degree());
    u32 n = 0;
    while (static_cast<u64>(n + 1) * (n + 2) / 2 <= d) ++n;
    const u64 base = static_cast<u64>(n) * (n + 1) / 2;
    const u64 j = d - base;  // 0 <= j <= n by the tiling
    Int lead = rem.coeffs().back();
    IntPolynomial term = IntPolynomial::monomial(lead, static_cast<std::size_t>(j));
    e.coeffs[n] = e.coeffs[n] + term;
    rem = rem - term * facts[n];
  }
  return e;
}

CyclotomicNumber evaluate_at_root(const HabiroElement& e, const RootOfUnity& z) {
  const u64 order64 = z.order();
  if (order64 > 1'000'000) throw SizeError("evaluate_at_root: order too large");
  const u32 order = static_cast<u32>(order64);
  CyclotomicNumber sum = CyclotomicNumber::integer(0, order);
  CyclotomicNumber fact = CyclotomicNumber::integer(1, order);
  const u32 cutoff = std::min<u64>(e.level(), order);  // [n!]_z = 0 for n >= order
  for (u32 n = 0; n < cutoff; ++n) {
    if (n > 0) {
      // multiply by (z^n - 1)
      CyclotomicNumber zn = CyclotomicNumber::root_power(order, static_cast<u64>(n) * z.g % order);
      fact = fact * (zn - CyclotomicNumber::integer(1, order));
    }
    if (!e.coeffs[n].is_zero())
      sum = sum + evaluate_at_zeta(e.coeffs[n], order, z.g) * fact;
  }
  return sum;
}

HabiroElement kontsevich_element(u32 level) {
  if (level == 0) throw DomainError("kontsevich_element: level must be >= 1");
  HabiroElement e;
  e.coeffs.reserve(level);
  for (u32 n = 0; n < level; ++n)
    e.coeffs.push_back(IntPolynomial::constant(n % 2 == 0 ? 1 : -1));
  return e;
}

namespace {

int chi12(u64 n) {
  switch (n % 12) {
    case 1:
    case 11:
      return 1;
    case 5:
    case 7:
      return -1;
    default:
      return 0;
  }
}

}  // namespace

ZagierSum zagier_rhs(std::complex<double> x, u64 max_terms) {
  const double r = std::abs(x);
  if (r >= 1.0) throw DomainError("zagier_rhs: |x| must be < 1");
  if (max_terms == 0) max_terms = 2'000'000;

  std::complex<double> sum = 0.0;
  double scale = 1.0;
  u64 used = 0;
  u64 n = 1;
  double last_magnitude = 0.0;
  for (; n <= max_terms; ++n) {
    const int chi = chi12(n);
    if (chi == 0) continue;
    const double expo = static_cast<double>((n * n - 1) / 24);
    const std::complex<double> power = expo == 0.0 ? 1.0 : std::pow(x, expo);
    const std::complex<double> term = static_cast<double>(n) * static_cast<double>(chi) * power;
    sum += term;
    ++used;
    last_magnitude = static_cast<double>(n) * std::pow(r, expo);
    scale = std::max(scale, std::abs(sum));
    if (last_magnitude < 1e-16 * scale && n > 12) break;
  }
  // tail majorant: terms n' > n have magnitude <= n' r^{(n'^2-1)/24},
  // dominated by a geometric series with ratio r^{(n/12)} < 1
  double ratio = std::pow(r, static_cast<double>(n) / 12.0);
  double tail = ratio < 1.0 ? last_magnitude * ratio / (1.0 - ratio) : 1e300;
  return {-0.5 * sum, 0.5 * tail, used};
}

}  // namespace absarith
