// Copyright 2026 The rfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <numeric>
#include <random>

#include "rfg/error.hpp"
#include "rfg/rational.hpp"

using rfg::Rational;

TEST_CASE("parse accepts integers and fractions in any terms") {
  CHECK(Rational::parse("3/6")->str() == "1/2");
  CHECK(Rational::parse("-4/2")->str() == "-2");
  CHECK(Rational::parse("7")->str() == "7");
  CHECK(Rational::parse("0/5")->str() == "0");
  CHECK(*Rational::parse("12345678901234567890/1") > Rational(1L << 62));
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "1/-2", " 1"}) {
    CAPTURE(bad);
    CHECK_FALSE(Rational::parse(bad).has_value());
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), rfg::Error);
  CHECK_THROWS_AS(Rational(1, 0), rfg::Error);
}

TEST_CASE("arithmetic agrees with cross-multiplication on small fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  for (int i = 0; i < 2000; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    // (a/b) op (c/d) written as p/q and compared by cross-multiplication.
    auto same = [](const Rational& r, long p, long q) {
      return r.numerator() * q == r.denominator() * p;
    };
    CHECK(same(x + y, a * d + c * b, b * d));
    CHECK(same(x - y, a * d - c * b, b * d));
    CHECK(same(x * y, a * c, b * d));
    if (c != 0) CHECK(same(x / y, a * d, b * c));
    CHECK((x < y) == (a * d < c * b));
    CHECK((x == y) == (a * d == c * b));
    CHECK(std::gcd(x.numerator().get_si(), x.denominator().get_si()) == 1);
    CHECK(x.denominator() > 0);
  }
}

TEST_CASE("str round-trips through parse") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational x(num(rng), den(rng));
    CHECK(*Rational::parse(x.str()) == x);
  }
}
