#include "absarith/burnside.hpp"

#include "absarith/exact.hpp"

namespace absarith {

namespace {

void check_same_precision(const BurnsideVector& x, const BurnsideVector& y) {
  if (x.precision() != y.precision()) throw DomainError("burnside: precision mismatch");
}

int mobius(u32 n) {
  int result = 1;
  for (const auto& [p, e] : factorize(static_cast<u64>(n)).factors) {
    if (e > 1) return 0;
    result = -result;
  }
  return result;
}

}  // namespace

BurnsideVector BurnsideVector::unit(u32 precision) {
  if (precision == 0) throw DomainError("BurnsideVector: precision must be >= 1");
  BurnsideVector e = zero(precision);
  e.b[0] = 1;
  return e;
}

BurnsideVector BurnsideVector::extended(u32 new_precision) const {
  if (new_precision < precision())
    throw DomainError("BurnsideVector: extension cannot shrink");
  BurnsideVector out = *this;
  out.b.resize(new_precision, Int(0));
  return out;
}

BurnsideVector burnside_add(const BurnsideVector& x, const BurnsideVector& y) {
  check_same_precision(x, y);
  BurnsideVector r = x;
  for (u32 i = 0; i < y.precision(); ++i) r.b[i] += y.b[i];
  return r;
}

BurnsideVector necklace_mul(const BurnsideVector& x, const BurnsideVector& y) {
  check_same_precision(x, y);
  const u32 n = x.precision();
  BurnsideVector r = BurnsideVector::zero(n);
  for (u32 i = 1; i <= n; ++i) {
    if (x.b[i - 1] == 0) continue;
    for (u32 j = 1; j <= n; ++j) {
      if (y.b[j - 1] == 0) continue;
      const u64 l = lcm_u64(i, j);
      if (l > n) continue;
      r.b[l - 1] += Int(gcd_u64(i, j)) * x.b[i - 1] * y.b[j - 1];
    }
  }
  return r;
}

Int burnside_ghost(const BurnsideVector& x, u32 n) {
  if (n == 0 || n > x.precision()) throw DomainError("burnside_ghost: index out of range");
  Int acc = 0;
  for (u32 i = 1; i <= n; ++i)
    if (n % i == 0) acc += Int(i) * x.b[i - 1];
  return acc;
}

WittZ burnside_to_witt(const BurnsideVector& x) {
  const u32 n = x.precision();
  // multiply out prod (1 - t^i)^{-b_i} on truncated integer series, each
  // factor expanded binomially so virtual (negative) and huge multiplicities
  // cost the same
  std::vector<Int> series(n + 1, Int(0));
  series[0] = 1;
  for (u32 i = 1; i <= n; ++i) {
    const Int& e = x.b[i - 1];
    if (e == 0) continue;
    const u32 kmax = n / i;
    std::vector<Int> factor(kmax + 1);
    factor[0] = 1;
    for (u32 k = 1; k <= kmax; ++k) {
      if (e > 0) {
        // (1-t^i)^{-e}: C(e+k-1, k)
        factor[k] = factor[k - 1] * (e + k - 1) / k;
      } else {
        // (1-t^i)^{|e|}: (-1)^k C(|e|, k)
        factor[k] = -factor[k - 1] * (-e - (k - 1)) / k;
      }
    }
    std::vector<Int> next(n + 1, Int(0));
    for (u32 d = 0; d <= n; ++d) {
      if (series[d] == 0) continue;
      for (u32 k = 0; k <= kmax && d + i * k <= n; ++k) {
        if (factor[k] == 0) continue;
        next[d + i * k] += series[d] * factor[k];
      }
    }
    series = std::move(next);
  }
  return WittZ(ZRing{}, std::vector<Int>(series.begin() + 1, series.end()));
}

BurnsideVector witt_to_burnside(const WittZ& u) {
  const u32 n = u.precision();
  Ghost<ZRing> g = ghost(u);
  BurnsideVector x = BurnsideVector::zero(n);
  for (u32 m = 1; m <= n; ++m) {
    Int acc = g[m - 1];
    for (u32 d = 1; d < m; ++d)
      if (m % d == 0) acc -= Int(d) * x.b[d - 1];
    if (acc % m != 0)
      throw IntegralityError("witt_to_burnside: divisibility fails at index " +
                             std::to_string(m));
    x.b[m - 1] = acc / m;
  }
  return x;
}

BurnsideVector tau(const std::vector<Int>& q) {
  const u32 n = static_cast<u32>(q.size());
  // prod 1/(1 - q_n t^n) as a truncated integer series
  std::vector<Int> series(n + 1, Int(0));
  series[0] = 1;
  for (u32 i = 1; i <= n; ++i) {
    if (q[i - 1] == 0) continue;
    // divide by (1 - q_i t^i)
    for (u32 d = i; d <= n; ++d) series[d] += q[i - 1] * series[d - i];
  }
  return witt_to_burnside(WittZ(ZRing{}, std::vector<Int>(series.begin() + 1, series.end())));
}

BurnsideVector burnside_res(u32 n, const BurnsideVector& x) {
  if (n == 0) throw DomainError("burnside_res: n must be >= 1");
  BurnsideVector r = BurnsideVector::zero(x.precision());
  for (u32 m = 1; m <= x.precision(); ++m) {
    if (x.b[m - 1] == 0) continue;
    const u64 g = gcd_u64(n, m);
    const u64 k = m / g;  // lcm(n,m)/n
    r.b[k - 1] += Int(g) * x.b[m - 1];
  }
  return r;
}

BurnsideVector burnside_ind(u32 n, const BurnsideVector& x) {
  if (n == 0) throw DomainError("burnside_ind: n must be >= 1");
  BurnsideVector r = BurnsideVector::zero(x.precision());
  for (u32 m = 1; m <= x.precision(); ++m) {
    if (x.b[m - 1] == 0) continue;
    const u64 target = static_cast<u64>(n) * m;
    if (target > x.precision())
      throw SizeError("burnside_ind: support leaves the truncation window");
    r.b[target - 1] += x.b[m - 1];
  }
  return r;
}

BurnsideVector necklace_frobenius(u32 n, const BurnsideVector& x) {
  if (n == 0) throw DomainError("necklace_frobenius: n must be >= 1");
  BurnsideVector r = BurnsideVector::zero(x.precision());
  for (u32 i = 1; i <= x.precision(); ++i) {
    if (x.b[i - 1] == 0) continue;
    const u64 l = lcm_u64(n, i);
    if (l % n != 0) continue;
    const u64 k = l / n;
    if (k > x.precision())
      throw SizeError("necklace_frobenius: support leaves the truncation window");
    r.b[k - 1] += Int(gcd_u64(n, i)) * x.b[i - 1];
  }
  return r;
}

BurnsideVector necklace_verschiebung(u32 n, const BurnsideVector& x) {
  if (n == 0) throw DomainError("necklace_verschiebung: n must be >= 1");
  BurnsideVector r = BurnsideVector::zero(x.precision());
  for (u32 k = 1; k <= x.precision(); ++k) {
    if (x.b[k - 1] == 0) continue;
    const u64 target = static_cast<u64>(n) * k;
    if (target > x.precision())
      throw SizeError("necklace_verschiebung: support leaves the truncation window");
    r.b[target - 1] = x.b[k - 1];
  }
  return r;
}

std::vector<Int> necklace_numbers(const Int& m, u32 precision) {
  std::vector<Int> out(precision);
  for (u32 n = 1; n <= precision; ++n) {
    Int acc = 0;
    for (u32 d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int mu = mobius(n / d);
      if (mu == 0) continue;
      acc += Int(mu) * pow_int(m, d);
    }
    if (acc % n != 0) throw IntegralityError("necklace_numbers: divisibility failed");
    out[n - 1] = acc / n;
  }
  return out;
}

}  // namespace absarith
