#include "doctest.h"

#include <algorithm>

#include "absarith/adams.hpp"

using namespace absarith;

namespace {

VirtualCharacter basis(u32 i, u32 h) {
  VirtualCharacter chi;
  chi.coords.assign(h, 0);
  chi.coords[i] = 1;
  return chi;
}

}  // namespace

TEST_CASE("s3 fixture matches the built-in table") {
  CharacterTable from_file = CharacterTable::load(std::string(ABSARITH_FIXTURE_DIR) + "/s3.json");
  CharacterTable builtin = CharacterTable::s3();
  CHECK(from_file.group_order == builtin.group_order);
  REQUIRE(from_file.class_count() == builtin.class_count());
  for (u32 c = 0; c < 3; ++c) {
    CHECK(from_file.classes[c].size == builtin.classes[c].size);
    for (u32 i = 0; i < 3; ++i) CHECK(from_file.chars[i][c] == builtin.chars[i][c]);
  }
}

TEST_CASE("adams operations on R(S3)") {
  CharacterTable t = CharacterTable::s3();
  // Psi^2(chi3) = chi1 + chi3 - chi2
  CHECK(adams(2, basis(2, 3), t).coords == std::vector<i64>{1, -1, 1});
  // Psi^3(chi3) = chi1 + chi2
  CHECK(adams(3, basis(2, 3), t).coords == std::vector<i64>{1, 1, 0});
  // Psi^2(chi2) = chi1
  CHECK(adams(2, basis(1, 3), t).coords == std::vector<i64>{1, 0, 0});
  // Psi^n(chi1)= chi1
  for (u64 n = 1; n <= 12; ++n)
    CHECK(adams(n, basis(0, 3), t).coords == std::vector<i64>{1, 0, 0});
}

TEST_CASE("adams composition law") {
  for (const CharacterTable& t :
       {CharacterTable::s3(), CharacterTable::cyclic(4), CharacterTable::cyclic(6)}) {
    for (u64 n = 1; n <= 6; ++n) {
      for (u64 m = 1; m <= 6; ++m) {
        for (u32 i = 0; i < t.class_count(); ++i) {
          VirtualCharacter chi = basis(i, t.class_count());
          CHECK(adams(n, adams(m, chi, t), t) == adams(n * m, chi, t));
        }
      }
    }
  }
}

TEST_CASE("adams is a ring endomorphism") {
  CharacterTable t = CharacterTable::s3();
  for (u64 n = 2; n <= 6; ++n) {
    for (u32 i = 0; i < 3; ++i) {
      for (u32 j = 0; j < 3; ++j) {
        VirtualCharacter prod = character_mul(basis(i, 3), basis(j, 3), t);
        VirtualCharacter lhs = adams(n, prod, t);
        VirtualCharacter rhs =
            character_mul(adams(n, basis(i, 3), t), adams(n, basis(j, 3), t), t);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("psi_p permutes irreducibles when p does not divide the order") {
  CharacterTable t = CharacterTable::s3();
  for (u64 p : {5ull, 7ull}) {
    std::vector<bool> hit(3, false);
    for (u32 i = 0; i < 3; ++i) {
      VirtualCharacter image = adams(p, basis(i, 3), t);
      u32 nonzero = 0, where = 0;
      for (u32 j = 0; j < 3; ++j) {
        if (image.coords[j] != 0) {
          ++nonzero;
          where = j;
          CHECK(image.coords[j] == 1);
        }
      }
      CHECK(nonzero == 1);
      hit[where] = true;
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(CharacterTable::s3()) == Rat(36));
  CHECK(discriminant(CharacterTable::trivial()) == Rat(1));
  CHECK(discriminant(CharacterTable::cyclic(2)) == Rat(4));
  CHECK(discriminant(CharacterTable::cyclic(3)) == Rat(27));
}

TEST_CASE("monoid action and stable sets on S3") {
  CharacterTable t = CharacterTable::s3();
  CHECK(stable_set(1, t) == std::vector<u32>{0, 1, 2});
  CHECK(stable_set(2, t) == std::vector<u32>{0, 2});
  CHECK(stable_set(4, t) == std::vector<u32>{0, 2});
  CHECK(stable_set(3, t) == std::vector<u32>{0, 1});
  CHECK(stable_set(9, t) == std::vector<u32>{0, 1});
  CHECK(stable_set(6, t) == std::vector<u32>{0});
  CHECK(stable_set(12, t) == std::vector<u32>{0});
  CHECK(stable_set(18, t) == std::vector<u32>{0});
}

TEST_CASE("conductor data") {
  ConductorData s3 = conductor_data(CharacterTable::s3());
  CHECK(s3.r0 == 6);
  CHECK(s3.stable_sets.size() == 4);  // 1, 2, 3, 6
  ConductorData triv = conductor_data(CharacterTable::trivial());
  CHECK(triv.r0 == 1);
  ConductorData c3 = conductor_data(CharacterTable::cyclic(3));
  CHECK(c3.r0 == 3);
}

TEST_CASE("n.S = gcd(n, r0).S for all n up to 36") {
  CharacterTable t = CharacterTable::s3();
  for (u64 n = 1; n <= 36; ++n)
    CHECK(stable_set(n, t) == stable_set(gcd_u64(n, 6), t));
}

TEST_CASE("table validation rejects inconsistent data") {
  CharacterTable t = CharacterTable::s3();
  t.chars[2][1] = CyclotomicNumber::integer(1);  // break orthogonality
  CHECK_THROWS_AS(t.validate(), DomainError);
}

TEST_CASE("cyclotomic character values decompose exactly") {
  CharacterTable c5 = CharacterTable::cyclic(5);
  // Psi^2 permutes the characters of C5: chi_i -> chi_{2i mod 5}
  for (u32 i = 0; i < 5; ++i) {
    VirtualCharacter image = adams(2, basis(i, 5), c5);
    std::vector<i64> expect(5, 0);
    expect[(2 * i) % 5] = 1;
    CHECK(image.coords == expect);
  }
}
