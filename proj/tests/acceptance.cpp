// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails.  --long additionally runs the level-5 tower-generator search.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "absarith/adams.hpp"
#include "absarith/big_picture.hpp"
#include "absarith/burnside.hpp"
#include "absarith/habiro_ring.hpp"
#include "absarith/nimber.hpp"
#include "absarith/scan.hpp"

using namespace absarith;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  const char* description;
  std::function<bool(std::string&)> check;
  double time_limit_s = 0.0;  // 0 = no limit
};

bool expect(bool ok, std::string& why, const std::string& message) {
  if (!ok && why.empty()) why = message;
  return ok;
}

// --- 1 -------------------------------------------------------------------

bool smirnov_fibers(std::string& why) {
  RationalMap q = RationalMap::parse("2");
  bool ok = true;
  ok &= expect(fiber(q, P1Point::finite(6)).points.empty(), why, "fiber over [6] not empty");
  for (u64 n = 2; n <= 40; ++n) {
    if (n == 6) continue;
    ok &= expect(!fiber(q, P1Point::finite(n)).points.empty(), why,
                 "fiber over [" + std::to_string(n) + "] empty");
  }
  FiberResult f11 = fiber(q, P1Point::finite(11));
  ok &= expect(f11.points.size() == 2 && f11.points[0].p == 23 && f11.points[1].p == 89, why,
               "fiber over [11] is not {23, 89}");

  // brute-force oracle: order of 2 at every prime below 10^6
  std::map<u64, std::set<Int>> oracle;
  for (const auto& [p, order] : order_scan(2, 1, 1000000))
    if (order >= 1 && order <= 30) oracle[order].insert(Int(p));
  for (u64 n = 1; n <= 30; ++n) {
    FiberResult fr = fiber(q, P1Point::finite(n));
    ok &= expect(fr.complete, why, "fiber incomplete at n=" + std::to_string(n));
    std::set<Int> mine;
    for (const SpecZPoint& pt : fr.points)
      if (pt.tag == SpecZPoint::Tag::Prime) mine.insert(pt.p);
    ok &= expect(mine == oracle[n], why, "fiber table mismatch at n=" + std::to_string(n));
  }
  return ok;
}

// --- 2 -------------------------------------------------------------------

bool zsigmondy_gate(std::string& why) {
  bool ok = true;
  for (i64 a = 2; a <= 30; ++a) {
    for (i64 b = 1; b < a; ++b) {
      if (gcd_u64(static_cast<u64>(a), static_cast<u64>(b)) != 1) continue;
      RationalMap q = RationalMap::make(a, b);
      for (u64 n = 2; n <= 20; ++n) {
        const bool empty = fiber_empty(q, n);
        const bool predicted = zsigmondy_exception(a, b, n);
        ok &= expect(empty == predicted, why,
                     "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                         " n=" + std::to_string(n));
      }
    }
  }
  return ok;
}

// --- 3 -------------------------------------------------------------------

bool divisor_degree_zero(std::string& why) {
  std::mt19937_64 rng(101);
  int done = 0;
  while (done < 1000) {
    i64 a = static_cast<i64>(rng() % 1000000) + 2;
    i64 b = static_cast<i64>(rng() % 1000000) + 1;
    if (rng() & 1) a = -a;
    const u64 g = gcd_u64(static_cast<u64>(a < 0 ? -a : a), static_cast<u64>(b));
    if (static_cast<u64>(a < 0 ? -a : a) == g && static_cast<u64>(b) == g) continue;
    if (!expect(degree_of(divisor_of(RationalMap::make(a, b))).is_zero(), why,
                "nonzero degree at " + std::to_string(a) + "/" + std::to_string(b)))
      return false;
    ++done;
  }
  return true;
}

// --- 4 -------------------------------------------------------------------

bool defect_closed_forms(std::string& why) {
  std::mt19937_64 rng(103);
  int done = 0;
  bool ok = true;
  while (done < 100) {
    i64 a = static_cast<i64>(rng() % 20000) + 2;
    i64 b = 1 + static_cast<i64>(rng() % static_cast<u64>(a - 1));
    if (gcd_u64(static_cast<u64>(a), static_cast<u64>(b)) != 1) continue;
    RationalMap q = RationalMap::make(a, b);
    const double log_a = std::log(static_cast<double>(a));
    const double d0 = fiber_defect(q, P1Point::zero()).to_double();
    const double e0 = log_nonradical_part(a).to_double() / log_a;
    ok &= expect(std::abs(d0 - e0) <= 1e-12 * std::max(1.0, std::abs(e0)), why,
                 "defect[0] off at q=" + q.str());
    const double d1 = fiber_defect(q, P1Point::finite(1)).to_double();
    const double e1 = log_nonradical_part(a - b).to_double() / log_a;
    ok &= expect(std::abs(d1 - e1) <= 1e-12 * std::max(1.0, std::abs(e1)), why,
                 "defect[1] off at q=" + q.str());
    ++done;
  }
  return ok;
}

// --- 5 -------------------------------------------------------------------

WittZ random_witt(std::mt19937_64& rng, u32 n) {
  std::vector<Int> c;
  for (u32 i = 0; i < n; ++i) c.emplace_back(static_cast<i64>(rng() % 19) - 9);
  return WittZ(ZRing{}, std::move(c));
}

bool witt_axioms(std::string& why) {
  ZRing z;
  std::mt19937_64 rng(107);
  bool ok = true;
  for (int trial = 0; trial < 6; ++trial) {
    WittZ a = random_witt(rng, 16), b = random_witt(rng, 16), c = random_witt(rng, 16);
    ok &= expect(witt_add(a, b) == witt_add(b, a), why, "addition not commutative");
    ok &= expect(witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)), why,
                 "addition not associative");
    ok &= expect(witt_mul(a, b) == witt_mul(b, a), why, "product not commutative");
    ok &= expect(witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)), why,
                 "product not associative");
    ok &= expect(witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c)), why,
                 "distributivity fails");
    ok &= expect(witt_mul(a, witt_one(z, 16)) == a, why, "unit fails");
    // ghost homomorphism
    Ghost<ZRing> ga = ghost(a), gb = ghost(b);
    Ghost<ZRing> gs = ghost(witt_add(a, b)), gp = ghost(witt_mul(a, b));
    for (u32 i = 0; i < 16; ++i) {
      ok &= expect(gs[i] == ga[i] + gb[i], why, "ghost not additive");
      ok &= expect(gp[i] == ga[i] * gb[i], why, "ghost not multiplicative");
    }
  }
  // Teichmuller multiplicativity
  ok &= expect(witt_mul(teichmuller(z, Int(6), 16), teichmuller(z, Int(-5), 16)) ==
                   teichmuller(z, Int(-30), 16),
               why, "Teichmuller rule fails");
  // Psi^n o V_n = [n], commuting Frobenii
  WittZ u = random_witt(rng, 16);
  for (u32 n = 2; n <= 4; ++n) {
    WittZ lhs = frobenius(n, verschiebung(n, u));
    WittZ rhs = add_multiple(n, u);
    std::vector<Int> cut(rhs.coeffs().begin(), rhs.coeffs().begin() + lhs.precision());
    ok &= expect(lhs.coeffs() == cut, why, "Psi^n o V_n != [n]");
  }
  for (u32 n = 2; n <= 3; ++n)
    for (u32 m = 2; m <= 3; ++m) {
      WittZ ab = frobenius(n, frobenius(m, u));
      WittZ nm = frobenius(n * m, u);
      std::vector<Int> cut(ab.coeffs().begin(), ab.coeffs().begin() + nm.precision());
      ok &= expect(cut == nm.coeffs(), why, "Frobenii do not compose");
    }
  // p-divisibility in the ring: Psi^p(u) - u^p = [p] w with w integral
  for (u32 p : {2, 3, 5, 7}) {
    WittZ v = random_witt(rng, 16);
    WittZ psi = frobenius(p, v);
    WittZ pow = v;
    for (u32 k = 1; k < p; ++k) pow = witt_mul(pow, v);
    std::vector<Int> cut(pow.coeffs().begin(), pow.coeffs().begin() + psi.precision());
    WittZ diff = witt_sub(psi, WittZ(z, cut));
    Ghost<ZRing> g = ghost(diff);
    bool divisible = true;
    for (Int& value : g) {
      divisible = divisible && value % p == 0;
      if (divisible) value /= p;
    }
    ok &= expect(divisible, why, "ghost of Psi^p(u) - u^p not divisible by p");
    if (divisible) {
      WittZ w = ghost_inverse(z, g);
      ok &= expect(add_multiple(p, w) == diff, why, "difference is not [p]-divisible");
    }
  }
  return ok;
}

// --- 6 -------------------------------------------------------------------

bool dress_siebeneicher(std::string& why) {
  std::mt19937_64 rng(109);
  bool ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    BurnsideVector b = BurnsideVector::zero(24), c = BurnsideVector::zero(24);
    for (u32 i = 0; i < 24; ++i) {
      b.b[i] = static_cast<i64>(rng() % 7) - 3;
      c.b[i] = static_cast<i64>(rng() % 7) - 3;
    }
    WittZ sb = burnside_to_witt(b), sc = burnside_to_witt(c);
    Ghost<ZRing> g = ghost(sb);
    for (u32 n = 1; n <= 24; ++n)
      ok &= expect(burnside_ghost(b, n) == g[n - 1], why, "burnside ghost mismatch");
    ok &= expect(burnside_to_witt(necklace_mul(b, c)) == witt_mul(sb, sc), why,
                 "s_t is not multiplicative");
    for (u32 n : {2u, 3u}) {
      WittZ lhs = burnside_to_witt(burnside_res(n, b));
      WittZ rhs = frobenius(n, sb);
      std::vector<Int> cut(lhs.coeffs().begin(), lhs.coeffs().begin() + rhs.precision());
      ok &= expect(cut == rhs.coeffs(), why, "s_t o res_n != Psi^n o s_t");
      BurnsideVector small = BurnsideVector::zero(24);
      for (u32 i = 0; i < 24 / n; ++i) small.b[i] = static_cast<i64>(rng() % 5) - 2;
      ok &= expect(burnside_to_witt(burnside_ind(n, small)) ==
                       verschiebung(n, burnside_to_witt(small)),
                   why, "s_t o ind_n != V_n o s_t");
    }
  }
  for (i64 m : {2, 3, 5}) {
    std::vector<Int> q(24, Int(0));
    q[0] = m;
    ok &= expect(tau(q).b == necklace_numbers(m, 24), why,
                 "tau(m,0,...) is not the necklace numbers of " + std::to_string(m));
  }
  return ok;
}

// --- 7 -------------------------------------------------------------------

bool smirnov_via_witt(std::string& why) {
  std::mt19937_64 rng(113);
  bool ok = true;
  int done = 0;
  while (done < 50) {
    i64 a = static_cast<i64>(rng() % 200) + 2;
    i64 b = 1 + static_cast<i64>(rng() % 37);
    if (gcd_u64(static_cast<u64>(a), static_cast<u64>(b)) != 1) continue;
    if (a == b || b == 0 || a == 1) continue;
    const u64 p = std::vector<u64>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                   43, 47, 53, 59}[rng() % 15];
    if (a % static_cast<i64>(p) == 0 || b % static_cast<i64>(p) == 0) continue;
    RationalMap q = RationalMap::make(a, b);
    // order of teich(a b^-1) under the F_p Witt product
    FpRing fp(p);
    const u64 c = mulmod(residue(a, p), powmod(residue(b, p), p - 2, p), p);
    WittFp t = teichmuller(fp, c, 6);
    WittFp acc = t;
    u64 witt_order = 1;
    while (!(acc == witt_one(fp, 6))) {
      acc = witt_mul(acc, t);
      ++witt_order;
      if (witt_order > p) break;
    }
    const u64 mult_order = multiplicative_order(static_cast<i64>(c), p);
    P1Point image = evaluate(q, SpecZPoint::prime(Int(p)));
    ok &= expect(witt_order == mult_order, why, "Witt order differs from multiplicative order");
    ok &= expect(image.is_finite() && image.n == mult_order, why,
                 "Smirnov image differs from the order");
    ++done;
  }
  return ok;
}

// --- 8 -------------------------------------------------------------------

bool habiro_laws(std::string& why) {
  bool ok = true;
  // precomputed prime factorizations up to 10^4 for fast membership
  const u32 max_point = 10000;
  std::vector<u32> spf(max_point + 1, 0);
  for (u32 i = 2; i <= max_point; ++i)
    if (spf[i] == 0)
      for (u32 j = i; j <= max_point; j += i)
        if (spf[j] == 0) spf[j] = i;
  auto factors_of = [&](u32 value) {
    std::vector<std::pair<u32, u32>> out;
    while (value > 1) {
      u32 p = spf[value], e = 0;
      while (value % p == 0) {
        value /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  };
  auto member = [&](const std::vector<std::pair<u32, u32>>& mf, u32 t) {
    for (const auto& [p, k] : mf) {
      if (t % p != 0) continue;
      u64 need = 1;
      for (u32 i = 0; i <= k; ++i) need *= p;
      if (t % need != 0) return false;
    }
    return true;
  };
  for (u32 m = 1; m <= 100 && ok; ++m) {
    auto mf = factors_of(m);
    for (u32 n = m; n <= 100 && ok; ++n) {
      auto nf = factors_of(n);
      const u32 l = static_cast<u32>(lcm_u64(m, n));
      if (l != intersect_basic(m, n)) {
        ok = expect(false, why, "intersect_basic is not the lcm");
        break;
      }
      auto lf = factors_of(l);
      for (u32 t = 1; t <= max_point; ++t) {
        if (member(lf, t) != (member(mf, t) && member(nf, t))) {
          ok = expect(false, why,
                      "membership law fails at m=" + std::to_string(m) +
                          " n=" + std::to_string(n) + " t=" + std::to_string(t));
          break;
        }
      }
    }
  }
  // non-compactness witness over every subset of the first six primes
  const u64 first6[] = {2, 3, 5, 7, 11, 13};
  for (u32 mask = 1; mask < 64; ++mask) {
    std::vector<u64> subset;
    for (u32 i = 0; i < 6; ++i)
      if (mask >> i & 1) subset.push_back(first6[i]);
    u64 witness = noncompactness_witness(subset);
    for (u64 p : subset)
      ok &= expect(
          !in_open(HabiroOpenDescriptor::basic(p, true, true), P1Point::finite(witness)), why,
          "witness covered by U_" + std::to_string(p));
  }
  return ok;
}

// --- 9 -------------------------------------------------------------------

bool big_picture_geometry(std::string& why) {
  bool ok = true;
  std::mt19937_64 rng(127);
  for (u64 h = 1; h <= 12; ++h) {
    for (u64 g = 0; g < h; ++g) {
      if (gcd_u64(g, h) != 1 && !(g == 0 && h == 1)) continue;
      Rat m(1 + static_cast<i64>(rng() % 9), 1 + static_cast<i64>(rng() % 9));
      Int d = hyperdistance(Lattice::make(m, 0, 1),
                            Lattice::make(m, static_cast<i64>(g), static_cast<i64>(h)));
      ok &= expect(d == Int(h * h), why, "mu_n placement fails at h=" + std::to_string(h));
    }
  }
  auto random_lattice = [&rng] {
    return Lattice::make(Rat(1 + static_cast<i64>(rng() % 10), 1 + static_cast<i64>(rng() % 10)),
                         static_cast<i64>(rng() % 7), 1 + static_cast<i64>(rng() % 7));
  };
  for (u64 p : {2ull, 3ull, 5ull}) {
    for (int i = 0; i < 5; ++i) {
      Lattice l = random_lattice();
      ok &= expect(neighbors(l, p).size() == p + 1, why, "neighbor count is not p+1");
      ok &= expect(sphere(l, p * p).size() == p * p + p, why, "sphere count is not p^2+p");
    }
  }
  for (u64 p : {2ull, 3ull}) {
    for (u32 a = 1; a <= 3; ++a) {
      LatticeSum v = LatticeSum::single(random_lattice());
      u64 pa = 1;
      for (u32 j = 0; j < a; ++j) pa *= p;
      LatticeSum lhs = hecke(p, hecke(pa, v));
      LatticeSum rhs = hecke(pa / p, v).scaled(static_cast<i64>(a == 1 ? p + 1 : p));
      rhs += hecke(pa * p, v);
      ok &= expect(lhs == rhs, why,
                   "Hecke relation fails at p=" + std::to_string(p) + " a=" + std::to_string(a));
    }
  }
  for (int i = 0; i < 500; ++i) {
    Lattice a = random_lattice(), b = random_lattice(), c = random_lattice();
    ok &= expect(hyperdistance(a, b) == hyperdistance(b, a), why, "hyperdistance asymmetric");
    ok &= expect(hyperdistance(a, c) <= hyperdistance(a, b) * hyperdistance(b, c), why,
                 "triangle inequality fails");
  }
  return ok;
}

// --- 10 ------------------------------------------------------------------

bool nimbers(std::string& why, bool long_run) {
  bool ok = true;
  const NimOracle& oracle = NimOracle::shared();
  for (u32 a = 0; a < 256 && ok; ++a)
    for (u32 b = 0; b < 256; ++b)
      if (nim_mul(a, b) != oracle.table(a, b)) {
        ok = expect(false, why, "fast multiply differs from mex below 256");
        break;
      }
  std::mt19937_64 rng(131);
  for (int i = 0; i < 10000; ++i) {
    u64 a = rng() % 65536, b = rng() % 65536;
    if (nim_mul(a, b) != oracle.mul(a, b)) {
      ok = expect(false, why, "fast multiply differs from the oracle on 16-bit pairs");
      break;
    }
  }
  ok &= expect(tower_generator(1) == 2 && tower_generator(2) == 4 && tower_generator(3) == 32 &&
                   tower_generator(4) == 1051,
               why, "tower generators are not (2, 4, 32, 1051)");
  if (long_run)
    ok &= expect(tower_generator(5) == 1361923, why, "level-5 generator is not 1361923");
  auto rows = field_dictionary(2);
  ok &= expect(rows.size() == 6, why, "F16 does not split into 6 orbits");
  if (rows.size() == 6) {
    ok &= expect(rows[0].orbit == std::vector<u64>{0}, why, "orbit {0} missing");
    ok &= expect(rows[1].orbit == std::vector<u64>{1}, why, "orbit {1} missing");
    ok &= expect(rows[2].orbit == std::vector<u64>{2, 3}, why, "orbit {2,3} missing");
    ok &= expect(rows[3].orbit == std::vector<u64>{4, 6, 5, 7}, why, "orbit {4,6,5,7} missing");
    ok &= expect(rows[3].poly == F2Polynomial{0b10011}, why, "{4,6,5,7} is not x^4+x+1");
  }
  ok &= expect(nimber_to_root(4) == RootOfUnity::make(1, 15), why, "4 is not e^{2 pi i/15}");
  ok &= expect(nimber_to_root(8) == RootOfUnity::make(2, 5), why, "8 is not e^{12 pi i/15}");
  return ok;
}

// --- 11 ------------------------------------------------------------------

bool adams_s3(std::string& why) {
  CharacterTable t = CharacterTable::s3();
  auto basis = [](u32 i) {
    VirtualCharacter v;
    v.coords = {0, 0, 0};
    v.coords[i] = 1;
    return v;
  };
  bool ok = true;
  ok &= expect(adams(2, basis(2), t).coords == std::vector<i64>{1, -1, 1}, why,
               "Psi^2(chi3) != chi1 + chi3 - chi2");
  ok &= expect(adams(3, basis(2), t).coords == std::vector<i64>{1, 1, 0}, why,
               "Psi^3(chi3) != chi1 + chi2");
  ok &= expect(adams(2, basis(1), t).coords == std::vector<i64>{1, 0, 0}, why,
               "Psi^2(chi2) != chi1");
  ok &= expect(discriminant(t) == Rat(36), why, "discriminant != 36");
  ok &= expect(stable_set(2, t) == std::vector<u32>{0, 2}, why, "2.S != {[1],[3]}");
  ok &= expect(stable_set(3, t) == std::vector<u32>{0, 1}, why, "3.S != {[1],[2]}");
  ok &= expect(stable_set(6, t) == std::vector<u32>{0}, why, "6.S != {[1]}");
  ok &= expect(conductor_data(t).r0 == 6, why, "r0 != 6");
  return ok;
}

// --- 12 ------------------------------------------------------------------

bool kontsevich_zagier(std::string& why) {
  bool ok = true;
  HabiroElement k = kontsevich_element(8);
  ok &= expect(evaluate_at_root(k, RootOfUnity::make(0, 1)).to_integer() == 1, why,
               "LHS at order 1 != 1");
  ok &= expect(evaluate_at_root(k, RootOfUnity::make(1, 2)).to_integer() == 3, why,
               "LHS at order 2 != 3");
  for (int sign : {1, -1}) {
    const double target = sign == 1 ? 1.0 : 3.0;
    double previous = 1e300;
    for (double r : {0.9, 0.99, 0.999}) {
      const double gap = std::abs(zagier_rhs(r * sign).value - target);
      ok &= expect(gap < previous, why, "radial gap not strictly decreasing");
      previous = gap;
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_run = true;

  std::vector<Criterion> criteria = {
      {1, "Smirnov fibers of q=2 against the prime-scan oracle", smirnov_fibers, 30.0},
      {2, "Zsigmondy gate over a <= 30, n <= 20", zsigmondy_gate},
      {3, "divisor degree exactly zero for 1000 random q", divisor_degree_zero},
      {4, "fiber-defect closed forms at [0] and [1]", defect_closed_forms},
      {5, "Witt ring axioms and lambda relations at N=16", witt_axioms, 10.0},
      {6, "Dress-Siebeneicher dictionary at N=24", dress_siebeneicher},
      {7, "Smirnov map through the Witt lambda-morphism", smirnov_via_witt},
      {8, "Habiro opens: intersection law and non-compactness", habiro_laws},
      {9, "big picture: placements, counts, Hecke, metric", big_picture_geometry},
      {10, long_run ? "nimbers: oracle agreement, towers (with level 5), F16 dictionary"
                    : "nimbers: oracle agreement, towers, F16 dictionary",
       [long_run](std::string& why) { return nimbers(why, long_run); }},
      {11, "Adams operations on R(S3)", adams_s3},
      {12, "Kontsevich-Zagier radial limits", kontsevich_zagier, 5.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.check(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
      ok = false;
      why = "exceeded the " + std::to_string(c.time_limit_s) + " s budget";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.description, elapsed, why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
