#include "absarith/nimber.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absarith {

namespace {

// 2^{2^k}, the k-th Fermat 2-power (field size at level k)
constexpr u64 fermat_power(u32 k) { return 1ull << (1u << k); }

u64 nim_mul_rec(u64 a, u64 b, u32 level) {
  if (a < 2 || b < 2) return a * b;
  if (level == 0) return a & b;
  const u32 half_bits = 1u << (level - 1);
  const u64 half = 1ull << half_bits;
  const u64 mask = half - 1;
  const u64 a1 = a >> half_bits, a0 = a & mask;
  const u64 b1 = b >> half_bits, b0 = b & mask;
  const u64 lo = nim_mul_rec(a0, b0, level - 1);
  const u64 cross = nim_mul_rec(a0 ^ a1, b0 ^ b1, level - 1);  // Karatsuba
  const u64 hh = nim_mul_rec(a1, b1, level - 1);
  // F^2 = F ^ F/2 at Fermat powers: the hh F^2 term folds into both halves
  const u64 folded = nim_mul_rec(hh, half >> 1, level - 1);
  return ((cross ^ lo) << half_bits) ^ lo ^ folded;
}

const std::array<unsigned char, 256 * 256>& base_cells() {
  static const auto table = [] {
    auto cells = std::make_unique<std::array<unsigned char, 256 * 256>>();
    for (u32 a = 0; a < 256; ++a)
      for (u32 b = 0; b < 256; ++b)
        (*cells)[(a << 8) | b] = static_cast<unsigned char>(nim_mul_rec(a, b, 3));
    return cells;
  }();
  return *table;
}

u64 nim_mul_leveled(u64 a, u64 b, u32 level) {
  if (a < 2 || b < 2) return a * b;
  if (level <= 3) return base_cells()[(a << 8) | b];
  const u32 half_bits = 1u << (level - 1);
  const u64 half = 1ull << half_bits;
  const u64 mask = half - 1;
  const u64 a1 = a >> half_bits, a0 = a & mask;
  const u64 b1 = b >> half_bits, b0 = b & mask;
  const u64 lo = nim_mul_leveled(a0, b0, level - 1);
  const u64 cross = nim_mul_leveled(a0 ^ a1, b0 ^ b1, level - 1);
  const u64 hh = nim_mul_leveled(a1, b1, level - 1);
  const u64 folded = nim_mul_leveled(hh, half >> 1, level - 1);
  return ((cross ^ lo) << half_bits) ^ lo ^ folded;
}

}  // namespace

u64 nim_mul(u64 a, u64 b) {
  const u32 level = std::max({enclosing_field_level(a), enclosing_field_level(b), 3u});
  return nim_mul_leveled(a, b, level);
}

u64 nim_pow(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = nim_mul(r, a);
    a = nim_mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 nim_inverse(u64 a) {
  if (a == 0) throw DomainError("nim_inverse: zero has no inverse");
  const u32 k = enclosing_field_level(a);
  // multiplicative group order 2^{2^k} - 1; inverse = a^(order - 1)
  const u64 exp = k >= 6 ? ~0ull - 1 : fermat_power(k) - 2;
  return nim_pow(a, exp);
}

u32 enclosing_field_level(u64 a) {
  u32 k = 0;
  while (k < 6 && a >= fermat_power(k)) ++k;
  return k;
}

u64 nim_order(u64 a) {
  if (a == 0) throw DomainError("nim_order: zero has no multiplicative order");
  const u32 k = enclosing_field_level(a);
  const u64 group = k >= 6 ? ~0ull : fermat_power(k) - 1;  // 2^{2^k} - 1
  u64 order = group;
  for (const auto& [p, e] : factorize(group).factors) {
    const u64 q = static_cast<u64>(p);
    for (u32 i = 0; i < e; ++i) {
      if (nim_pow(a, order / q) == 1)
        order /= q;
      else
        break;
    }
  }
  return order;
}

// --- mex oracle ---------------------------------------------------------------

namespace {

// one cell of the raw recursion: mex over { i*b ^ a*j ^ i*j : i < a, j < b }
u32 mex_cell(const std::vector<u32>& cells, u32 bound, u32 a, u32 b,
             std::vector<u32>& stamp, u32 tick) {
  const u32* row_a = cells.data() + static_cast<std::size_t>(a) * bound;
  for (u32 i = 0; i < a; ++i) {
    const u32* row_i = cells.data() + static_cast<std::size_t>(i) * bound;
    const u32 ib = row_i[b];
    for (u32 j = 0; j < b; ++j) {
      const u32 v = ib ^ row_a[j] ^ row_i[j];
      stamp[v] = tick;
    }
  }
  u32 mex = 0;
  while (stamp[mex] == tick) ++mex;
  return mex;
}

constexpr u32 kStampSize = 1u << 18;

}  // namespace

std::vector<u32> mex_table_serial(u32 bound) {
  if (bound > 2048) throw SizeError("mex table: bound too large");
  std::vector<u32> cells(static_cast<std::size_t>(bound) * bound, 0);
  std::vector<u32> stamp(kStampSize, 0);
  u32 tick = 0;
  for (u32 a = 0; a < bound; ++a)
    for (u32 b = 0; b < bound; ++b)
      cells[static_cast<std::size_t>(a) * bound + b] =
          mex_cell(cells, bound, a, b, stamp, ++tick);
  return cells;
}

std::vector<u32> mex_table_parallel(u32 bound) {
  if (bound > 2048) throw SizeError("mex table: bound too large");
  std::vector<u32> cells(static_cast<std::size_t>(bound) * bound, 0);
  // cells of one anti-diagonal depend only on strictly earlier diagonals
  for (u32 s = 0; s <= 2 * (bound - 1); ++s) {
    const u32 a_lo = s >= bound ? s - bound + 1 : 0;
    const u32 a_hi = std::min(s, bound - 1);
#pragma omp parallel
    {
      // per-thread scratch persists across diagonals; the tick never resets,
      // so stale stamps cannot collide
      static thread_local std::vector<u32> stamp;
      static thread_local u32 tick = 0;
      if (stamp.size() != kStampSize) stamp.assign(kStampSize, 0);
#pragma omp for schedule(dynamic, 4)
      for (u32 a = a_lo; a <= a_hi; ++a) {
        const u32 b = s - a;
        cells[static_cast<std::size_t>(a) * bound + b] =
            mex_cell(cells, bound, a, b, stamp, ++tick);
      }
    }
  }
  return cells;
}

NimOracle::NimOracle(u32 bound, bool parallel) : bound_(bound) {
  if (bound < 257)
    throw DomainError("NimOracle: bound must cover the 16-bit splitting constants (>= 257)");
  cells_ = parallel ? mex_table_parallel(bound) : mex_table_serial(bound);
  // The 16-bit extension writes a = a1*256 ^ a0; that identity holds in the
  // table itself (products with 256 are ordinary), checked here once.
  for (u32 a1 = 0; a1 < 256; ++a1)
    if (table(a1, 256) != static_cast<u64>(a1) * 256)
      throw IntegralityError("NimOracle: mex table breaks the 16-bit splitting");
}

u64 NimOracle::table(u32 a, u32 b) const {
  if (a >= bound_ || b >= bound_) throw SizeError("NimOracle: cell outside table bound");
  return cells_[static_cast<std::size_t>(a) * bound_ + b];
}

u64 NimOracle::mul(u64 a, u64 b) const {
  if (a >= 65536 || b >= 65536) throw SizeError("NimOracle: oracle scale is 2^16");
  if (a < 256 && b < 256) return table(static_cast<u32>(a), static_cast<u32>(b));
  // split at y = 256 and expand by distributivity over xor; every product of
  // parts and y^2 itself are raw mex cells
  const u32 a1 = static_cast<u32>(a >> 8), a0 = static_cast<u32>(a & 255);
  const u32 b1 = static_cast<u32>(b >> 8), b0 = static_cast<u32>(b & 255);
  const u64 y2 = table(256, 256);
  const u32 y2_hi = static_cast<u32>(y2 >> 8), y2_lo = static_cast<u32>(y2 & 255);
  const u32 hh = static_cast<u32>(table(a1, b1));
  const u64 hi = table(a1, b0) ^ table(a0, b1) ^ table(hh, y2_hi);
  const u64 lo = table(a0, b0) ^ table(hh, y2_lo);
  return (hi << 8) ^ lo;
}

const NimOracle& NimOracle::shared() {
  static const NimOracle oracle(257, true);
  return oracle;
}

// --- tower generators and discrete logarithms ---------------------------------

namespace {

std::vector<u64> field_order_prime_factors(u32 k) {
  // 2^{2^k} - 1 = prod_{i<k} (2^{2^i} + 1), all Fermat primes for k <= 5
  std::vector<u64> out{3};
  for (u32 i = 1; i < k; ++i) out.push_back(fermat_power(i) + 1);
  return out;
}

bool generates_level(u64 g, u32 k) {
  const u64 order = fermat_power(k) - 1;
  for (u64 q : field_order_prime_factors(k))
    if (nim_pow(g, order / q) == 1) return false;
  return nim_pow(g, order) == 1;
}

u64 search_generator(u32 k, u64 target) {
  // smallest g with g^(2^{2^{k-1}}+1) = previous generator that also
  // generates the level-k group (elements of the smaller field can satisfy
  // the power identity without generating, e.g. 3^5 = 2)
  const u64 s = fermat_power(k - 1) + 1;
  const u64 limit = fermat_power(k);
  const u64 chunk = 1u << 16;
  for (u64 lo = 2; lo < limit; lo += chunk) {
    const u64 hi = std::min(lo + chunk, limit);
    u64 found = ~0ull;
#pragma omp parallel for schedule(dynamic, 1024) reduction(min : found)
    for (u64 g = lo; g < hi; ++g)
      if (nim_pow(g, s) == target && generates_level(g, k)) found = std::min(found, g);
    if (found != ~0ull) return found;
  }
  throw DomainError("tower_generator: no generator found");
}

}  // namespace

u64 tower_generator(u32 k) {
  if (k == 0 || k > 5) throw BudgetError("tower_generator: level outside search budget");
  static std::mutex mu;
  static std::map<u32, u64> cache{{1, 2}};
  std::scoped_lock lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  for (u32 level = 2; level <= k; ++level) {
    if (cache.count(level)) continue;
    cache[level] = search_generator(level, cache[level - 1]);
  }
  return cache[k];
}

namespace {

struct DlogTable {
  u64 baby_count;
  u64 giant_step;  // g^{-baby_count}
  std::unordered_map<u64, u32> baby;
};

const DlogTable& dlog_table(u32 k) {
  static std::mutex mu;
  static std::map<u32, DlogTable> tables;
  std::scoped_lock lock(mu);
  auto it = tables.find(k);
  if (it != tables.end()) return it->second;
  const u64 order = fermat_power(k) - 1;
  const u64 g = tower_generator(k);
  DlogTable t;
  t.baby_count = 1;
  while (t.baby_count * t.baby_count < order) ++t.baby_count;
  t.baby.reserve(t.baby_count * 2);
  u64 x = 1;
  for (u64 j = 0; j < t.baby_count; ++j) {
    t.baby.emplace(x, static_cast<u32>(j));
    x = nim_mul(x, g);
  }
  t.giant_step = nim_inverse(nim_pow(g, t.baby_count));
  return tables.emplace(k, std::move(t)).first->second;
}

u64 discrete_log(u64 a, u32 k) {
  const DlogTable& t = dlog_table(k);
  const u64 order = fermat_power(k) - 1;
  u64 x = a;
  for (u64 i = 0; i * t.baby_count <= order; ++i) {
    auto it = t.baby.find(x);
    if (it != t.baby.end()) return (i * t.baby_count + it->second) % order;
    x = nim_mul(x, t.giant_step);
  }
  throw DomainError("discrete_log: element not in the generated group");
}

}  // namespace

RootOfUnity nimber_to_root(u64 a) {
  if (a == 0) throw DomainError("nimber_to_root: zero is not a root of unity");
  if (a == 1) return RootOfUnity::make(0, 1);
  const u32 k = enclosing_field_level(a);
  const u64 order = fermat_power(k) - 1;
  const u64 e = discrete_log(a, k);
  return RootOfUnity::make(static_cast<i64>(e), static_cast<i64>(order));
}

std::vector<u64> frobenius_orbit(u64 a) {
  std::vector<u64> orbit{a};
  u64 x = nim_mul(a, a);
  while (x != a) {
    orbit.push_back(x);
    x = nim_mul(x, x);
  }
  return orbit;
}

// --- polynomials over F_2 -----------------------------------------------------

int F2Polynomial::degree() const {
  return bits == 0 ? -1 : static_cast<int>(std::bit_width(bits)) - 1;
}

std::string F2Polynomial::str() const {
  if (bits == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!(bits >> i & 1)) continue;
    if (!first) os << "+";
    if (i == 0) os << "1";
    else if (i == 1) os << "x";
    else os << "x^" << i;
    first = false;
  }
  return os.str();
}

namespace {

u64 f2_mod(u64 a, u64 m) {
  const int dm = static_cast<int>(std::bit_width(m)) - 1;
  while (true) {
    const int da = static_cast<int>(std::bit_width(a)) - 1;
    if (da < dm) return a;
    a ^= m << (da - dm);
  }
}

}  // namespace

bool f2_irreducible(const F2Polynomial& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d > 32) throw SizeError("f2_irreducible: degree above trial-division range");
  if ((f.bits & 1) == 0) return f.bits == 2;  // divisible by x
  if (d == 1) return true;
  for (u64 g = 2; ; ++g) {
    const int dg = static_cast<int>(std::bit_width(g)) - 1;
    if (2 * dg > d) break;
    if (f2_mod(f.bits, g) == 0) return false;
  }
  return true;
}

F2Polynomial orbit_to_polynomial(const std::vector<u64>& orbit) {
  if (orbit.empty()) throw DomainError("orbit_to_polynomial: empty orbit");
  // closure under squaring
  for (u64 a : orbit) {
    const u64 sq = nim_mul(a, a);
    if (std::find(orbit.begin(), orbit.end(), sq) == orbit.end())
      throw DomainError("orbit_to_polynomial: set not closed under squaring");
  }
  // expand prod (X ^ alpha) with nimber coefficient arithmetic
  std::vector<u64> coeffs{1};
  for (u64 alpha : orbit) {
    std::vector<u64> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= nim_mul(coeffs[i], alpha);
    }
    coeffs = std::move(next);
  }
  F2Polynomial f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1)
      throw IntegralityError("orbit_to_polynomial: coefficient outside F_2");
    f.bits |= coeffs[i] << i;
  }
  return f;
}

std::vector<u64> polynomial_to_orbit(const F2Polynomial& f) {
  if (!f2_irreducible(f)) throw DomainError("polynomial_to_root: polynomial is reducible");
  if (f.bits == 2) throw DomainError("polynomial_to_root: x corresponds to 0, not a root of unity");
  const int d = f.degree();
  if (d == 1) return {1};  // x + 1
  if ((d & (d - 1)) != 0)
    throw DomainError("polynomial_to_root: degree is not a 2-power, roots lie outside the quadratic closure");
  const u32 j = static_cast<u32>(std::countr_zero(static_cast<u32>(d)));
  if (j > 4) throw BudgetError("polynomial_to_root: search budget is level 4");
  // roots have orbit size exactly d = 2^j: scan the level-j field above the
  // level-(j-1) subfield
  for (u64 alpha = fermat_power(j - 1); alpha < fermat_power(j); ++alpha) {
    std::vector<u64> orbit = frobenius_orbit(alpha);
    if (*std::min_element(orbit.begin(), orbit.end()) != alpha) continue;
    if (orbit_to_polynomial(orbit) == f) return orbit;
  }
  throw DomainError("polynomial_to_root: no orbit matches (input not irreducible?)");
}

RootOfUnity polynomial_to_root(const F2Polynomial& f) {
  std::vector<u64> orbit = polynomial_to_orbit(f);
  return nimber_to_root(*std::min_element(orbit.begin(), orbit.end()));
}

void F2Divisor::add(const F2Polynomial& f, i64 coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(f, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::string F2Divisor::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    i64 a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "[" << f.str() << "]";
    first = false;
  }
  return os.str();
}

F2Divisor divisor_mul(const F2Divisor& d, const F2Divisor& e) {
  F2Divisor out;
  for (const auto& [f, cf] : d.terms) {
    std::vector<u64> orbit_f = polynomial_to_orbit(f);
    for (const auto& [g, cg] : e.terms) {
      std::vector<u64> orbit_g = polynomial_to_orbit(g);
      // multiset of pairwise root products, regrouped into orbits
      std::map<u64, i64> counts;
      for (u64 alpha : orbit_f)
        for (u64 beta : orbit_g) counts[nim_mul(alpha, beta)] += 1;
      while (!counts.empty()) {
        const u64 rep = counts.begin()->first;
        const i64 mult = counts.begin()->second;
        std::vector<u64> orbit = frobenius_orbit(rep);
        for (u64 member : orbit) {
          auto it = counts.find(member);
          if (it == counts.end() || it->second != mult)
            throw IntegralityError("divisor_mul: product multiset is not Frobenius-stable");
          counts.erase(it);
        }
        out.add(orbit_to_polynomial(orbit), mult * cf * cg);
      }
    }
  }
  return out;
}

std::vector<DictionaryRow> field_dictionary(u32 level) {
  if (level > 4) throw BudgetError("field_dictionary: levels above 4 are not tabulated");
  std::vector<DictionaryRow> rows;
  std::vector<bool> seen(fermat_power(level), false);
  for (u64 a = 0; a < fermat_power(level); ++a) {
    if (seen[a]) continue;
    DictionaryRow row;
    row.orbit = frobenius_orbit(a);
    for (u64 x : row.orbit) seen[x] = true;
    row.smallest = *std::min_element(row.orbit.begin(), row.orbit.end());
    row.is_zero_orbit = a == 0;
    if (row.is_zero_orbit) {
      row.poly = F2Polynomial{2};  // x
      row.root = RootOfUnity::make(0, 1);
    } else {
      row.poly = orbit_to_polynomial(row.orbit);
      row.root = nimber_to_root(row.smallest);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace absarith
