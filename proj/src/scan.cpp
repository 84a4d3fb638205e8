#include "absarith/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absarith {

namespace {

u64 order_at(const Int& a, const Int& b, u64 p) {
  if (a % p == 0 || b % p == 0) return 0;
  u64 ar = residue_big(a, p);
  u64 br = residue_big(b, p);
  return multiplicative_order_u(mulmod(ar, powmod(br, p - 2, p), p), p);
}

}  // namespace

std::vector<std::pair<u64, P1Point>> graph_scan_serial(const RationalMap& q, u64 bound) {
  std::vector<std::pair<u64, P1Point>> out;
  if (bound < 2) return out;
  const auto& primes = primes_up_to(static_cast<u32>(bound));
  for (u32 p : primes) {
    if (p > bound) break;
    out.emplace_back(p, evaluate(q, SpecZPoint::prime(p)));
  }
  return out;
}

std::vector<std::pair<u64, P1Point>> graph_scan(const RationalMap& q, u64 bound) {
  std::vector<std::pair<u64, P1Point>> out;
  if (bound < 2) return out;
  const auto& primes = primes_up_to(static_cast<u32>(bound));
  std::size_t count = 0;
  while (count < primes.size() && primes[count] <= bound) ++count;
  out.resize(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::size_t i = 0; i < count; ++i) {
    const u64 p = primes[i];
    out[i] = {p, evaluate(q, SpecZPoint::prime(p))};
  }
  return out;
}

std::vector<std::pair<u64, u64>> order_scan_serial(const Int& a, const Int& b, u64 bound) {
  std::vector<std::pair<u64, u64>> out;
  const auto& primes = primes_up_to(static_cast<u32>(bound));
  for (u32 p : primes) {
    if (p > bound) break;
    out.emplace_back(p, order_at(a, b, p));
  }
  return out;
}

std::vector<std::pair<u64, u64>> order_scan(const Int& a, const Int& b, u64 bound) {
  const auto& primes = primes_up_to(static_cast<u32>(bound));
  std::size_t count = 0;
  while (count < primes.size() && primes[count] <= bound) ++count;
  std::vector<std::pair<u64, u64>> out(count);
#pragma omp parallel for schedule(dynamic, 512)
  for (std::size_t i = 0; i < count; ++i) {
    const u64 p = primes[i];
    out[i] = {p, order_at(a, b, p)};
  }
  return out;
}

}  // namespace absarith
