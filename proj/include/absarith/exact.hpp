#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "absarith/error.hpp"
#include "absarith/ints.hpp"
#include "absarith/poly.hpp"

namespace absarith {

// Prime-power decomposition, pairs (p, e) sorted ascending by p.  The empty
// list is the factorization of 1.
struct Factorization {
  std::vector<std::pair<Int, u32>> factors;

  Int value() const;
  Int radical() const;
  bool contains(const Int& p) const;
  u32 exponent_of(const Int& p) const;
};

// Leftmost k digits of a profinite integer in the factorial number system,
// digits[i-1] = c_i with 0 <= c_i <= i.
struct FactorialDigits {
  std::vector<u32> digits;

  Int value() const;  // sum c_i * i!
};

// Deterministic Miller-Rabin below 2^64; fixed-base Miller-Rabin above.
bool is_prime(u64 n);
bool is_prime(const Int& n);

// Ascending primes <= bound (shared sieve, grown on demand, thread-safe).
const std::vector<u32>& primes_up_to(u32 bound);

struct FactorBudget {
  // Pollard-rho iterations allowed per composite before giving up.
  u64 rho_iterations = 1u << 22;
};

// Trial division to 10^6, then Pollard rho with Miller-Rabin certificates.
// Throws BudgetError naming the unfactored part when the budget runs out.
Factorization factorize(const Int& n, const FactorBudget& budget = {});
Factorization factorize(u64 n, const FactorBudget& budget = {});

// Partial factorization: never throws on budget exhaustion; instead reports
// the composite cofactor it could not split.
struct PartialFactorization {
  Factorization factored;
  std::optional<Int> unfactored;  // composite remainder, if any
  bool complete() const { return !unfactored.has_value(); }
};
PartialFactorization factorize_partial(const Int& n, const FactorBudget& budget = {});

u64 euler_phi(u64 n);
Int euler_phi(const Factorization& f);

// Smallest n >= 1 with a^n = 1 mod m; requires gcd(a, m) = 1.
u64 multiplicative_order(i64 a, u64 m);
u64 multiplicative_order_u(u64 a, u64 m);

// n-th cyclotomic polynomial by the Moebius quotient, cached by n.
const IntPolynomial& cyclotomic_poly(u32 n);

struct ComaximalityResult {
  bool comaximal;
  u64 prime;  // meaningful only when !comaximal
};

// Phi_m and Phi_n are comaximal iff max(m,n)/min(m,n) is not a prime power;
// otherwise they intersect exactly over that prime.
ComaximalityResult cyclotomic_comaximal(u64 m, u64 n);

// First k factorial-base digits of n (as a profinite integer); negative n is
// represented by its canonical residue mod (k+1)!.
FactorialDigits factorial_digits(const Int& n, u32 k);

// true iff q = p^a for a prime p and a >= 1; reports p.
std::optional<u64> prime_power_base(u64 q);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

}  // namespace absarith
