#include "doctest.h"
#include "liecoh/ppoly.hpp"

#include <stdexcept>

using liecoh::PPoly;

TEST_CASE("parse and evaluate degree polynomials") {
  CHECK(PPoly::parse("0").eval(7) == 0);
  CHECK(PPoly::parse("-6").eval(7) == -6);
  CHECK(PPoly::parse("1+p").eval(7) == 8);
  CHECK(PPoly::parse("p").eval(11) == 11);
  CHECK(PPoly::parse("p^3").eval(7) == 343);
  CHECK(PPoly::parse("2p^2-2p").eval(7) == 84);
  CHECK(PPoly::parse("2p^2-2").eval(7) == 96);
  CHECK(PPoly::parse("2p^2-2p-2").eval(7) == 82);
  CHECK(PPoly::parse("2p^2+2p-4").eval(11) == 260);
  CHECK(PPoly::parse(" 2p + 2 ").eval(7) == 16);
  CHECK(PPoly::parse("12p^2").eval(2) == 48);
}

TEST_CASE("coefficient default is 1, exponent default is 1") {
  CHECK(PPoly::parse("p^2").eval(5) == 25);
  CHECK(PPoly::parse("-p").eval(5) == -5);
  CHECK(PPoly::parse("3p").eval(5) == 15);
}

TEST_CASE("like terms combine") {
  CHECK(PPoly::parse("p+p").eval(7) == 14);
  CHECK(PPoly::parse("p^2-p^2").eval(7) == 0);
}

TEST_CASE("canonical printing round-trips") {
  for (const char* s : {"0", "-6", "1+p", "2p^2-2p", "p^3", "2p^2-2p-2"}) {
    PPoly q = PPoly::parse(s);
    CHECK(PPoly::parse(q.str()).eval(13) == q.eval(13));
  }
  CHECK(PPoly::parse("2p^2-2p").str() == "2p^2-2p");
  CHECK(PPoly::parse("0").str() == "0");
  CHECK(PPoly::parse("1+p").str() == "p+1");
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(PPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PPoly::parse("2q"), std::invalid_argument);
  CHECK_THROWS_AS(PPoly::parse("p^"), std::invalid_argument);
  CHECK_THROWS_AS(PPoly::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(PPoly::parse("2p^2^3"), std::invalid_argument);
}
