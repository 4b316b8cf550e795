// Copyright 2026 The pcf Authors
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

#include <doctest.h>

#include <random>

#include "pcf/exactnum.hpp"

using namespace pcf;

TEST_CASE("isqrt basics and exactness") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(49) == 7);
  // floor sqrt of a non-square, checked by direct multiplication
  Int n(1536796800);
  Int r = isqrt(n);
  CHECK(r == 39201);
  CHECK(r * r <= n);
  CHECK((r + 1) * (r + 1) > n);
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bracket property for all n <= 1e6") {
  for (long n = 0; n <= 1000000; ++n) {
    Int r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("squarefree_split") {
  auto s1 = squarefree_split(1);
  CHECK(s1.delta == 1);
  CHECK(s1.k == 1);
  auto s2 = squarefree_split(Int(1536796800));
  CHECK(s2.delta == 2);
  CHECK(s2.k == 27720);
  auto s3 = squarefree_split(252);
  CHECK(s3.delta == 7);
  CHECK(s3.k == 6);
  CHECK_THROWS_AS(squarefree_split(0), std::domain_error);
}

TEST_CASE("squarefree_split round trip with square-divisor check") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(1, 2000000);
  for (int i = 0; i < 300; ++i) {
    Int n(dist(rng));
    auto s = squarefree_split(n);
    REQUIRE(s.delta * s.k * s.k == n);
    for (long p = 2; p <= 1000; ++p) {
      REQUIRE(s.delta % (Int(p) * p) != 0);
    }
  }
}

TEST_CASE("surd normalization") {
  QuadraticSurd a(2, 1, 8, 2);  // (2 + sqrt(8))/2 = 1 + sqrt(2)
  CHECK(a == QuadraticSurd(1, 1, 2, 1));
  QuadraticSurd b(5, 3, 7, 8);
  CHECK(b.p() == 5);
  CHECK(b.q() == 3);
  CHECK(b.d() == 7);
  CHECK(b.r() == 8);
  QuadraticSurd c(4, 0, 7, 2);  // rational collapse
  CHECK(c.is_rational());
  CHECK(c == QuadraticSurd::from_int(2));
  CHECK_THROWS_AS(QuadraticSurd(1, 1, 2, 0), std::domain_error);
}

TEST_CASE("surd arithmetic examples") {
  QuadraticSurd one_plus(1, 1, 2, 1), one_minus(1, -1, 2, 1);
  CHECK(one_plus + one_minus == QuadraticSurd::from_int(2));

  QuadraticSurd golden(1, 1, 5, 2), conj(-1, 1, 5, 2);
  CHECK(golden * conj == QuadraticSurd::from_int(1));  // (sqrt5+1)(sqrt5-1)/4

  QuadraticSurd x(5, 3, 7, 8);
  CHECK(x - QuadraticSurd::from_int(1) == QuadraticSurd(-3, 3, 7, 8));

  CHECK_THROWS_AS(QuadraticSurd(0, 1, 2, 1) + QuadraticSurd(0, 1, 3, 1),
                  std::domain_error);
  CHECK_THROWS_AS(x / QuadraticSurd::from_int(0), std::domain_error);
}

TEST_CASE("surd floor") {
  CHECK(QuadraticSurd(2, 1, 7, 1).floor() == 4);
  CHECK(QuadraticSurd(1, 1, 5, 2).floor() == 1);
  CHECK(QuadraticSurd(0, -1, 2, 1).floor() == -2);
  CHECK(QuadraticSurd::from_rational(7, 2).floor() == 3);
  CHECK(QuadraticSurd::from_rational(-7, 2).floor() == -4);
}

TEST_CASE("trace and norm") {
  QuadraticSurd x(3, 1, 10, 1);
  CHECK(x.trace() == Rational(6, 1));
  CHECK(x.norm() == Rational(-1, 1));
  QuadraticSurd five = QuadraticSurd::from_int(5);
  CHECK(five.trace() == Rational(10, 1));
  CHECK(five.norm() == Rational(25, 1));
  QuadraticSurd y(5, 3, 7, 8);
  CHECK(y.trace() == Rational(5, 4));
  CHECK(y.norm() == Rational(-19, 32));
}

TEST_CASE("field axioms on random surds") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> co(-10000, 10000);
  std::uniform_int_distribution<long> rr(1, 10000);
  std::uniform_int_distribution<long> dd(2, 100);
  Int d = 0;
  auto random_surd = [&]() {
    return QuadraticSurd(co(rng), co(rng), d, rr(rng));
  };
  for (int i = 0; i < 200; ++i) {
    d = dd(rng);
    QuadraticSurd a = random_surd(), b = random_surd(), c = random_surd();
    // associativity and distributivity
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // conjugation is a ring morphism
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    if (!b.is_zero()) {
      CHECK(a / b * b == a);
    }
  }
}

TEST_CASE("floor bracketing property on random surds") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> co(-10000, 10000);
  std::uniform_int_distribution<long> rr(1, 10000);
  std::uniform_int_distribution<long> dd(2, 100);
  for (int i = 0; i < 500; ++i) {
    QuadraticSurd x(co(rng), co(rng), dd(rng), rr(rng));
    Int f = x.floor();
    QuadraticSurd diff = x - QuadraticSurd::from_int(f);
    CHECK(diff.sign() >= 0);
    CHECK((diff - QuadraticSurd::from_int(1)).sign() < 0);
  }
}

TEST_CASE("probable prime and factoring sanity") {
  CHECK(is_probable_prime(Int("1000000007")));
  CHECK_FALSE(is_probable_prime(Int("1000000007") * 97));
  auto fs = factor_integer(Int(2) * 3 * 3 * 5 * 7 * 7 * 7);
  REQUIRE(fs.size() == 4);
  CHECK(fs[0] == std::make_pair(Int(2), 1));
  CHECK(fs[1] == std::make_pair(Int(3), 2));
  CHECK(fs[2] == std::make_pair(Int(5), 1));
  CHECK(fs[3] == std::make_pair(Int(7), 3));
}

TEST_CASE("surd rendering") {
  CHECK(QuadraticSurd(3, 1, 10, 1).str() == "3 + \xE2\x88\x9A10");
  CHECK(QuadraticSurd(5, 3, 7, 8).str() == "(5 + 3\xE2\x88\x9A7)/8");
  CHECK(QuadraticSurd::from_int(2).str() == "2");
}
