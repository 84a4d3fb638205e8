#include "absarith/exact.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <atomic>
#include <memory>
#include <numeric>

namespace absarith {

namespace {

constexpr u32 kTrialBound = 1'000'000;

u64 gcd_i(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool miller_rabin_u64(u64 n, u64 base) {
  if (base % n == 0) return true;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = powmod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

Int powmod_big(Int base, Int exp, const Int& m) {
  Int r = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

bool miller_rabin_big(const Int& n, const Int& base) {
  if (base % n == 0) return true;
  Int d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  Int x = powmod_big(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-cycle Pollard rho; returns a nontrivial factor or nullopt on budget.
std::optional<u64> pollard_rho_u64(u64 n, u64 max_iters) {
  if ((n & 1) == 0) return 2;
  u64 iters = 0;
  for (u64 c = 1; c < 64; ++c) {
    auto step = [&](u64 v) {
      v = mulmod(v, v, n) + c;
      return v >= n ? v - n : v;
    };
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const u64 batch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_i(q, n);
        iters += lim;
        if (iters > max_iters) return std::nullopt;
      }
      r <<= 1;
    }
    if (g == n) {
      // backtrack one step at a time from the last snapshot
      g = 1;
      while (g == 1) {
        ys = step(ys);
        g = gcd_i(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

std::optional<Int> pollard_rho_big(const Int& n, u64 max_iters) {
  if ((n & 1) == 0) return Int(2);
  for (u64 seed = 1; seed < 64; ++seed) {
    Int x = seed + 2, y = x, c = seed;
    Int d = 1;
    u64 iters = 0;
    while (d == 1) {
      if (iters++ > max_iters) return std::nullopt;
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
  return std::nullopt;
}

void push_factor(std::vector<std::pair<Int, u32>>& out, const Int& p, u32 e) {
  for (auto& [q, f] : out)
    if (q == p) {
      f += e;
      return;
    }
  out.emplace_back(p, e);
}

// Recursively split a composite known to be > trial bound squared.
bool split_big(Int n, std::vector<std::pair<Int, u32>>& out, u64 budget,
               std::optional<Int>& leftover) {
  if (n == 1) return true;
  if (is_prime(n)) {
    push_factor(out, n, 1);
    return true;
  }
  std::optional<Int> d;
  if (n < Int(std::numeric_limits<u64>::max())) {
    auto d64 = pollard_rho_u64(static_cast<u64>(n), budget);
    if (d64) d = Int(*d64);
  } else {
    d = pollard_rho_big(n, budget);
  }
  if (!d) {
    leftover = n;
    return false;
  }
  bool ok = split_big(*d, out, budget, leftover);
  ok = split_big(n / *d, out, budget, leftover) && ok;
  return ok;
}

PartialFactorization factorize_impl(Int n, const FactorBudget& budget) {
  if (n <= 0) throw DomainError("factorize: argument must be >= 1");
  PartialFactorization result;
  auto& out = result.factored.factors;
  const auto& primes = primes_up_to(kTrialBound);
  if (n <= std::numeric_limits<u64>::max()) {
    u64 m = static_cast<u64>(n);
    for (u32 p : primes) {
      if (static_cast<u64>(p) * p > m) break;
      if (m % p == 0) {
        u32 e = 0;
        do {
          m /= p;
          ++e;
        } while (m % p == 0);
        out.emplace_back(Int(p), e);
      }
    }
    n = m;
  } else {
    // strip small factors cheaply, then let rho handle the rest
    for (u32 p : primes) {
      if (p > 10000) break;
      if (n % p == 0) {
        u32 e = 0;
        do {
          n /= p;
          ++e;
        } while (n % p == 0);
        out.emplace_back(Int(p), e);
      }
    }
  }
  if (n > 1) {
    std::optional<Int> leftover;
    std::vector<std::pair<Int, u32>> tail;
    split_big(n, tail, budget.rho_iterations, leftover);
    std::sort(tail.begin(), tail.end());
    for (auto& [p, e] : tail) out.emplace_back(p, e);
    result.unfactored = leftover;
  }
  return result;
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) v *= pow_int(p, e);
  return v;
}

Int Factorization::radical() const {
  Int v = 1;
  for (const auto& [p, e] : factors) v *= p;
  return v;
}

bool Factorization::contains(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return true;
  return false;
}

u32 Factorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Int FactorialDigits::value() const {
  Int v = 0;
  Int fact = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    fact *= static_cast<u32>(i + 1);
    v += Int(digits[i]) * fact;
  }
  return v;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  if (n < 41ull * 41ull) return true;
  // deterministic for all 64-bit inputs with this base set
  for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
    if (!miller_rabin_u64(n, base)) return false;
  return true;
}

bool is_prime(const Int& n) {
  if (n < Int(std::numeric_limits<u64>::max())) return is_prime(static_cast<u64>(n));
  static const u32 kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                               41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (u32 p : kBases)
    if (n % p == 0) return false;
  for (u32 base : kBases)
    if (!miller_rabin_big(n, base)) return false;
  return true;
}

const std::vector<u32>& primes_up_to(u32 bound) {
  // lock-free read path; growth swaps in a fresh table and retires the old
  // one so outstanding references stay valid
  static std::mutex mu;
  static std::atomic<u32> sieved_to{0};
  static std::atomic<const std::vector<u32>*> table{nullptr};
  static std::vector<std::unique_ptr<std::vector<u32>>> retired;

  if (bound <= sieved_to.load(std::memory_order_acquire))
    return *table.load(std::memory_order_acquire);

  std::scoped_lock lock(mu);
  if (bound > sieved_to.load(std::memory_order_acquire)) {
    const u32 new_bound = std::max(bound, std::max(sieved_to.load() * 2, kTrialBound));
    std::vector<bool> composite(new_bound + 1, false);
    auto primes = std::make_unique<std::vector<u32>>();
    for (u32 i = 2; i <= new_bound; ++i) {
      if (!composite[i]) {
        primes->push_back(i);
        for (u64 j = static_cast<u64>(i) * i; j <= new_bound; j += i) composite[j] = true;
      }
    }
    retired.push_back(std::move(primes));
    table.store(retired.back().get(), std::memory_order_release);
    sieved_to.store(new_bound, std::memory_order_release);
  }
  return *table.load(std::memory_order_acquire);
}

Factorization factorize(const Int& n, const FactorBudget& budget) {
  PartialFactorization r = factorize_impl(n, budget);
  if (!r.complete())
    throw BudgetError("factorize: unfactored part " + r.unfactored->str());
  return std::move(r.factored);
}

Factorization factorize(u64 n, const FactorBudget& budget) { return factorize(Int(n), budget); }

PartialFactorization factorize_partial(const Int& n, const FactorBudget& budget) {
  return factorize_impl(n, budget);
}

u64 euler_phi(u64 n) {
  if (n == 0) throw DomainError("euler_phi: argument must be >= 1");
  u64 result = n;
  u64 m = n;
  for (u32 p : primes_up_to(kTrialBound)) {
    if (static_cast<u64>(p) * p > m) break;
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    if (is_prime(m)) {
      result -= result / m;
    } else {
      Factorization f = factorize(m);
      for (const auto& [p, e] : f.factors) result -= result / static_cast<u64>(p);
    }
  }
  return result;
}

Int euler_phi(const Factorization& f) {
  Int v = 1;
  for (const auto& [p, e] : f.factors) v *= pow_int(p, e - 1) * (p - 1);
  return v;
}

u64 multiplicative_order_u(u64 a, u64 m) {
  if (m < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
  a %= m;
  if (gcd_i(a, m) != 1) throw DomainError("multiplicative_order: arguments not coprime");
  u64 order = euler_phi(m);
  Factorization f = factorize(order);
  for (const auto& [p, e] : f.factors) {
    const u64 q = static_cast<u64>(p);
    for (u32 i = 0; i < e; ++i) {
      if (powmod(a, order / q, m) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

u64 multiplicative_order(i64 a, u64 m) { return multiplicative_order_u(residue(a, m), m); }

const IntPolynomial& cyclotomic_poly(u32 n) {
  if (n == 0) throw DomainError("cyclotomic_poly: n must be >= 1");
  static std::mutex mu;
  static std::map<u32, IntPolynomial> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Moebius formula: Phi_n = prod_{d|n} (x^{n/d} - 1)^{mu(d)}
  Factorization f = factorize(static_cast<u64>(n));
  std::vector<u32> squarefree_divisors{1};
  std::vector<int> mobius{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t count = squarefree_divisors.size();
    for (std::size_t i = 0; i < count; ++i) {
      squarefree_divisors.push_back(squarefree_divisors[i] * static_cast<u32>(p));
      mobius.push_back(-mobius[i]);
    }
  }
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < squarefree_divisors.size(); ++i) {
    IntPolynomial factor = IntPolynomial::xn_minus_1(n / squarefree_divisors[i]);
    if (mobius[i] == 1)
      num = num * factor;
    else
      den = den * factor;
  }
  return cache.emplace(n, num.divide_exact(den)).first->second;
}

std::optional<u64> prime_power_base(u64 q) {
  if (q < 2) return std::nullopt;
  for (u32 p : primes_up_to(kTrialBound)) {
    if (static_cast<u64>(p) * p > q) break;
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      if (q == 1) return p;
      return std::nullopt;
    }
  }
  if (is_prime(q)) return q;
  Factorization f = factorize(q);
  if (f.factors.size() == 1) return static_cast<u64>(f.factors[0].first);
  return std::nullopt;
}

ComaximalityResult cyclotomic_comaximal(u64 m, u64 n) {
  if (m == n) throw DomainError("cyclotomic_comaximal: indices must differ");
  if (m == 0 || n == 0) throw DomainError("cyclotomic_comaximal: indices must be >= 1");
  const u64 hi = std::max(m, n), lo = std::min(m, n);
  if (hi % lo != 0) return {true, 0};
  auto p = prime_power_base(hi / lo);
  if (p) return {false, *p};
  return {true, 0};
}

FactorialDigits factorial_digits(const Int& n, u32 k) {
  if (k == 0) throw DomainError("factorial_digits: digit count must be >= 1");
  Int modulus = 1;
  for (u32 i = 2; i <= k + 1; ++i) modulus *= i;
  Int r = n % modulus;
  if (r < 0) r += modulus;
  FactorialDigits d;
  d.digits.resize(k);
  for (u32 i = 1; i <= k; ++i) {
    d.digits[i - 1] = static_cast<u32>(r % (i + 1));
    r /= (i + 1);
  }
  return d;
}

u64 gcd_u64(u64 a, u64 b) { return gcd_i(a, b); }
u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_i(a, b) * b;
}

}  // namespace absarith
