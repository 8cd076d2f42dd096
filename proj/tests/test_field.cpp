#include "doctest.h"
#include "liecoh/field.hpp"

#include <random>
#include <stdexcept>

using liecoh::Field;

TEST_CASE("prime validation") {
  CHECK_NOTHROW(Field(3));
  CHECK_NOTHROW(Field(7));
  CHECK_NOTHROW(Field(2147483647));  // largest prime below 2^31
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  CHECK_THROWS_AS(Field(6), std::invalid_argument);
  CHECK_THROWS_AS(Field(2147483646), std::invalid_argument);
  CHECK_THROWS_AS(Field(7, 0), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  Field F(7);
  auto a = F.from_int(3), b = F.from_int(5);
  CHECK(F.eq(F.add(a, b), F.one()));
  CHECK(F.eq(F.mul(a, b), F.one()));
  CHECK(F.eq(F.inv(a), b));
  CHECK(F.eq(F.pow(a, 6), F.one()));
  CHECK(F.eq(F.from_int(-1), F.from_int(6)));
  CHECK(F.eq(F.sub(F.zero(), a), F.from_int(4)));
  CHECK(F.is_zero(F.add(a, F.from_int(4))));
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("arithmetic near the word-size bound") {
  Field F(2147483647);
  auto m1 = F.from_int(-1);
  // (p-1)^2 = 1 mod p exercises the widened multiply.
  CHECK(F.eq(F.mul(m1, m1), F.one()));
  CHECK(F.eq(F.mul(F.inv(m1), m1), F.one()));
  CHECK(F.eq(F.pow(F.from_int(3), 2147483646), F.one()));
}

TEST_CASE("modulus of F_49 is the canonical irreducible x^2+1") {
  Field F(7, 2);
  // Minimal digit string: x^2 + 0*x + 1 (since -1 is a non-square mod 7).
  CHECK(F.modulus() == std::vector<uint32_t>{1, 0, 1});
  // x * x = -1
  auto x = F.from_coeffs({0, 1});
  CHECK(F.eq(F.mul(x, x), F.from_int(-1)));
}

TEST_CASE("modulus of F_9 is x^2+1") {
  Field F(3, 2);
  CHECK(F.modulus() == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("modulus of F_8 is x^3+x+1") {
  Field F(2, 3);
  CHECK(F.modulus() == std::vector<uint32_t>{1, 1, 0, 1});
}

TEST_CASE("extension field arithmetic and inverses") {
  Field F(7, 2);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = F.from_coeffs({uint32_t(rng() % 7), uint32_t(rng() % 7)});
    if (F.is_zero(a)) continue;
    CHECK(F.eq(F.mul(a, F.inv(a)), F.one()));
  }
}

TEST_CASE("Frobenius is additive and equals pow by p") {
  Field F(7, 2);
  std::mt19937 rng(20240711);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = F.from_coeffs({uint32_t(rng() % 7), uint32_t(rng() % 7)});
    auto b = F.from_coeffs({uint32_t(rng() % 7), uint32_t(rng() % 7)});
    CHECK(F.eq(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b))));
    CHECK(F.eq(F.frobenius(a), F.pow(a, 7)));
  }
}

TEST_CASE("roots of unity") {
  SUBCASE("order 8 inside F_49") {
    Field F(7, 2);
    auto w = F.unity_root(8, 1);
    CHECK(F.eq(F.pow(w, 8), F.one()));
    CHECK_FALSE(F.eq(F.pow(w, 4), F.one()));
    // The generator convention is deterministic: same call, same value.
    CHECK(F.eq(w, F.unity_root(8, 1)));
    CHECK(F.eq(F.unity_root(8, 3), F.pow(w, 3)));
    CHECK(F.eq(F.unity_root(8, 0), F.one()));
  }
  SUBCASE("order must divide the unit group order") {
    Field F(7, 2);
    CHECK_THROWS_AS(F.unity_root(5, 1), std::invalid_argument);
  }
  SUBCASE("prime field roots") {
    Field F(7);
    auto w = F.unity_root(6, 1);
    CHECK(F.eq(F.pow(w, 6), F.one()));
    CHECK_FALSE(F.eq(F.pow(w, 3), F.one()));
    CHECK_FALSE(F.eq(F.pow(w, 2), F.one()));
  }
}

TEST_CASE("field size guard: p^r - 1 must fit in 64 bits") {
  CHECK_THROWS_AS(Field(2147483647, 3), std::invalid_argument);
}

TEST_CASE("integer reciprocals for fixture coefficients") {
  Field F(7);
  // 1/2 = 4, 1/3 = 5 mod 7
  CHECK(F.eq(F.inv(F.from_int(2)), F.from_int(4)));
  CHECK(F.eq(F.inv(F.from_int(3)), F.from_int(5)));
}
