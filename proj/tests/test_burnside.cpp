#include "doctest.h"

#include <random>

#include "absarith/burnside.hpp"

using namespace absarith;

namespace {

BurnsideVector random_burnside(std::mt19937_64& rng, u32 precision, i64 span = 5) {
  BurnsideVector b = BurnsideVector::zero(precision);
  for (u32 i = 0; i < precision; ++i)
    b.b[i] = static_cast<i64>(rng() % (2 * span + 1)) - span;
  return b;
}

BurnsideVector from_list(std::vector<i64> values) {
  BurnsideVector b = BurnsideVector::zero(static_cast<u32>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) b.b[i] = values[i];
  return b;
}

}  // namespace

TEST_CASE("necklace multiplication") {
  std::mt19937_64 rng(3);
  BurnsideVector b = random_burnside(rng, 8);
  CHECK(necklace_mul(b, BurnsideVector::unit(8)) == b);
  CHECK(necklace_mul(from_list({0, 1, 0, 0}), from_list({0, 1, 0, 0})) ==
        from_list({0, 2, 0, 0}));
  CHECK(necklace_mul(from_list({0, 1, 0, 0, 0, 0}), from_list({0, 0, 1, 0, 0, 0})) ==
        from_list({0, 0, 0, 0, 0, 1}));
}

TEST_CASE("burnside ghost") {
  BurnsideVector e = BurnsideVector::unit(6);
  for (u32 n = 1; n <= 6; ++n) CHECK(burnside_ghost(e, n) == 1);
  BurnsideVector c2 = from_list({0, 1, 0, 0, 0, 0});
  for (u32 n = 1; n <= 6; ++n) CHECK(burnside_ghost(c2, n) == (n % 2 == 0 ? 2 : 0));
  // congruence set 2^(C): necklace numbers of 2 have ghost 2^n
  BurnsideVector m2{necklace_numbers(2, 10)};
  for (u32 n = 1; n <= 10; ++n) CHECK(burnside_ghost(m2, n) == pow_int(2, n));
}

TEST_CASE("dress-siebeneicher s_t") {
  CHECK(burnside_to_witt(BurnsideVector::unit(6)) == witt_one(ZRing{}, 6));
  CHECK(burnside_to_witt(from_list({0, 1, 0, 0, 0, 0})) ==
        verschiebung(2, witt_one(ZRing{}, 6)));
  // necklace numbers of 2 map to teich(2)
  BurnsideVector m2{necklace_numbers(2, 12)};
  CHECK(burnside_to_witt(m2) == teichmuller(ZRing{}, Int(2), 12));
}

TEST_CASE("witt_to_burnside inverts s_t") {
  CHECK(witt_to_burnside(witt_one(ZRing{}, 8)) == BurnsideVector::unit(8));
  CHECK(witt_to_burnside(teichmuller(ZRing{}, Int(2), 10)).b == necklace_numbers(2, 10));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    BurnsideVector b = random_burnside(rng, 12);
    CHECK(witt_to_burnside(burnside_to_witt(b)) == b);
  }
}

TEST_CASE("tau") {
  std::vector<Int> q(10, Int(0));
  CHECK(tau(q) == BurnsideVector::zero(10));
  q[0] = 2;
  CHECK(tau(q).b == necklace_numbers(2, 10));
  std::vector<Int> q2(10, Int(0));
  q2[1] = 1;
  BurnsideVector e2 = BurnsideVector::zero(10);
  e2.b[1] = 1;
  CHECK(tau(q2) == e2);
}

TEST_CASE("res and ind on orbits") {
  BurnsideVector c2 = from_list({0, 1, 0, 0, 0, 0});
  BurnsideVector c3 = from_list({0, 0, 1, 0, 0, 0});
  BurnsideVector c4 = from_list({0, 0, 0, 1, 0, 0});
  CHECK(burnside_res(2, c2) == from_list({2, 0, 0, 0, 0, 0}));
  CHECK(burnside_res(2, c3) == c3);
  CHECK(burnside_res(2, c4) == from_list({0, 2, 0, 0, 0, 0}));
  CHECK(burnside_ind(1, c3) == c3);
  CHECK(burnside_ind(2, c3) == from_list({0, 0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(burnside_ind(3, c4), SizeError);
  // phi_{C^m}(ind_n b) = n phi_{C^{m/n}}(b) when n | m, else 0
  std::mt19937_64 rng(11);
  BurnsideVector b = random_burnside(rng, 4).extended(12);
  BurnsideVector ind3 = burnside_ind(3, b);
  for (u32 m = 1; m <= 12; ++m) {
    if (m % 3 == 0)
      CHECK(burnside_ghost(ind3, m) == Int(3) * burnside_ghost(b, m / 3));
    else
      CHECK(burnside_ghost(ind3, m) == 0);
  }
}

TEST_CASE("necklace frobenius and verschiebung") {
  CHECK(necklace_verschiebung(2, from_list({1, 2, 3, 0, 0, 0})) ==
        from_list({0, 1, 0, 2, 0, 3}));
  BurnsideVector e2 = from_list({0, 1, 0, 0, 0, 0});
  CHECK(necklace_frobenius(2, e2) == from_list({2, 0, 0, 0, 0, 0}));
  // f_n o v_n multiplies entries by n
  std::mt19937_64 rng(13);
  BurnsideVector b = random_burnside(rng, 4).extended(12);
  BurnsideVector fv = necklace_frobenius(3, necklace_verschiebung(3, b));
  for (u32 i = 0; i < 12; ++i) CHECK(fv.b[i] == Int(3) * b.b[i]);
  // f_n matches res_n through the orbit interpretation
  for (u32 n = 2; n <= 4; ++n) CHECK(necklace_frobenius(n, b) == burnside_res(n, b));
}

TEST_CASE("dress-siebeneicher compatibility at N = 24") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    BurnsideVector b = random_burnside(rng, 24, 3);
    BurnsideVector c = random_burnside(rng, 24, 3);
    WittZ sb = burnside_to_witt(b);
    WittZ sc = burnside_to_witt(c);
    // ghost compatibility
    Ghost<ZRing> g = ghost(sb);
    for (u32 n = 1; n <= 24; ++n) CHECK(burnside_ghost(b, n) == g[n - 1]);
    // products
    CHECK(burnside_to_witt(necklace_mul(b, c)) == witt_mul(sb, sc));
    // res_n and ind_n intertwine with Psi^n and V_n
    for (u32 n : {2u, 3u}) {
      WittZ lhs = burnside_to_witt(burnside_res(n, b));
      WittZ rhs = frobenius(n, sb);
      std::vector<Int> lhs_cut(lhs.coeffs().begin(), lhs.coeffs().begin() + rhs.precision());
      CHECK(lhs_cut == rhs.coeffs());
      BurnsideVector small = random_burnside(rng, 24 / n, 3).extended(24);
      CHECK(burnside_to_witt(burnside_ind(n, small)) ==
            verschiebung(n, burnside_to_witt(small)));
    }
  }
}

TEST_CASE("tau of (m,0,0,...) gives the necklace numbers") {
  for (i64 m : {2, 3, 5}) {
    std::vector<Int> q(24, Int(0));
    q[0] = m;
    CHECK(tau(q).b == necklace_numbers(m, 24));
  }
}

TEST_CASE("virtual multiplicities") {
  // negative entries are genuine virtual orbits: s_t((-1,0,...)) = 1 - t
  BurnsideVector neg = from_list({-1, 0, 0});
  CHECK(burnside_to_witt(neg).coeffs() == std::vector<Int>{-1, 0, 0});
  CHECK(witt_to_burnside(burnside_to_witt(neg)) == neg);
}
