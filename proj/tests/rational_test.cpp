// Copyright 2026 The ortega authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ortega/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ortega;

TEST_CASE("rational canonical construction") {
  CHECK(Rational(112, 529) == Rational::parse("112/529"));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(112, 357) == Rational(16, 51));  // reduces by 7
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic and ordering") {
  Rational a(7, 23), b(7, 22);
  CHECK(a < b);
  CHECK(a + b == Rational(7 * 22 + 7 * 23, 23 * 22));
  CHECK(b - a == Rational(7, 506));
  CHECK(a * b == Rational(49, 506));
  CHECK(a / b == Rational(22, 23));
  CHECK(-a == Rational(-7, 23));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
}

TEST_CASE("mediant lies strictly between") {
  CHECK(mediant(Rational(7, 23), Rational(7, 22)) == Rational(14, 45));
  CHECK(mediant(Rational(0), Rational(1)) == Rational(1, 2));
  // raw mediant 112/357 reduces to 16/51
  CHECK(mediant(Rational(21, 67), Rational(91, 290)) == Rational(16, 51));
  CHECK(mediant(Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(mediant(Rational(-1, 2), Rational(1, 2)), Error);
}

TEST_CASE("raw mediant keeps component sums") {
  RawFraction a(44, 61), b(99, 137);
  RawFraction m = mediant_raw(a, b);
  CHECK(m.num == 143);
  CHECK(m.den == 198);
  RawFraction r48 = mediant_raw(RawFraction(44, 61), RawFraction(2035, 2821));
  CHECK(r48.num == 2079);
  CHECK(r48.den == 2882);
  RawFraction z = mediant_raw(RawFraction(0, 1), RawFraction(0, 1));
  CHECK(z.num == 0);
  CHECK(z.den == 2);  // unreduced by design
}

TEST_CASE("square_compare is the exact sign of x^2 - n") {
  Radicand n128{Rational(128)};
  CHECK(square_compare(Rational(577, 51), n128) == SideOfRoot::Above);
  CHECK(square_compare(Rational(260, 23), n128) == SideOfRoot::Below);
  CHECK(square_compare(Rational(3), Radicand{Rational(9)}) == SideOfRoot::Exact);
  // rational radicand: 11+2/7 is above sqrt(1400/11)
  CHECK(square_compare(Rational(79, 7), Radicand::parse("127+3/11")) ==
        SideOfRoot::Above);
}

TEST_CASE("remainder and upper_error conventions") {
  Radicand n128{Rational(128)};
  CHECK(remainder(Rational::parse("11+7/23"), n128) == Rational(112, 529));
  CHECK(remainder(Rational::parse("97+191/194"), Radicand{Rational(9600)}) ==
        Rational(-36481, 37636));
  CHECK(remainder(Rational(2), Radicand{Rational(4)}) == Rational(0));

  CHECK(upper_error(Rational::parse("11+7/22"), n128) == Rational(49, 484));
  CHECK(upper_error(Rational::parse("27+1/2"), Radicand{Rational(756)}) ==
        Rational(1, 4));
  CHECK(upper_error(Rational(2), Radicand{Rational(4)}) == Rational(0));
}

TEST_CASE("to_mixed splits whole and fractional part") {
  MixedParts m = to_mixed(Rational(577, 51));
  CHECK(m.whole == 11);
  CHECK(m.frac == Rational(16, 51));
  m = to_mixed(Rational(1, 2));
  CHECK(m.whole == 0);
  CHECK(m.frac == Rational(1, 2));
  m = to_mixed(Rational(9));
  CHECK(m.whole == 9);
  CHECK(m.frac.is_zero());
  CHECK_THROWS_AS(to_mixed(Rational(-1, 2)), Error);
}

TEST_CASE("radicand parsing computes floor root and remainder") {
  Radicand a = Radicand::parse("128");
  CHECK(a.floor_root() == 11);
  CHECK(a.floor_remainder() == Rational(7));

  Radicand b = Radicand::parse("127+3/11");
  CHECK(b.value() == Rational(1400, 11));
  CHECK(b.floor_root() == 11);

  Radicand c = Radicand::parse("5+1/3");
  CHECK(c.value() == Rational(16, 3));
  CHECK(c.floor_root() == 2);

  CHECK(Radicand::parse(" 9600 ").floor_root() == 97);
  CHECK_THROWS_AS(Radicand::parse("12x"), ParseError);
  CHECK_THROWS_AS(Radicand::parse("-4"), ParseError);
  CHECK_THROWS_AS(Radicand::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Radicand::parse(""), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    Rational::parse("3+4/");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  try {
    Rational::parse("3+1/0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("fraction text forms round-trip as written") {
  for (const char* text : {"9", "0", "112/529", "-1/2601", "44+2079/2882",
                           "24+35/49", "184/11", "1/1", "0/2", "-36481/37636",
                           "11+16/51", "2+13/42"}) {
    CHECK(RawFraction::parse(text).str() == text);
  }
  // canonical printing picks the natural form
  CHECK(Rational(577, 51).str() == "11+16/51");
  CHECK(Rational(-1, 2601).str() == "-1/2601");
  CHECK(Rational(9).str() == "9");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-7, 2).str() == "-3+1/2");
  CHECK(Rational::parse("-3+1/2") == Rational(-7, 2));
}

TEST_CASE("exact root detection") {
  CHECK(Radicand{Rational(9)}.exact_root() == Rational(3));
  CHECK(Radicand::parse("16/9").exact_root() == Rational(4, 3));
  CHECK(!Radicand{Rational(128)}.exact_root());
  CHECK(Radicand{Rational(9)}.is_integer_square());
  CHECK(!Radicand::parse("16/9").is_integer_square());
}

TEST_CASE("isqrt_floor") {
  CHECK(isqrt_floor(BigInt(0)) == 0);
  CHECK(isqrt_floor(BigInt(143)) == 11);
  CHECK(isqrt_floor(BigInt(144)) == 12);
  BigInt big("6463015797837456");  // 80392884^2
  CHECK(isqrt_floor(big) == 80392884);
  CHECK(isqrt_floor(big - 1) == 80392883);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), Error);
}
