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

#include "pcf/matmonoid.hpp"

using namespace pcf;

namespace {

CFWord random_word(std::mt19937_64& rng, int max_digit, int max_len, int min_len = 1) {
  std::uniform_int_distribution<int> digit(1, max_digit);
  std::uniform_int_distribution<int> len(min_len, max_len);
  CFWord w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.digits.push_back(digit(rng));
  return w;
}

}  // namespace

TEST_CASE("word_to_matrix paper values") {
  CHECK(word_to_matrix(CFWord{1, 1, 1, 4}) == Mat2(2, 9, 3, 14));
  CHECK(word_to_matrix(CFWord{}) == Mat2::identity());
  CHECK(word_to_matrix(CFWord{1, 1, 1, 1, 1, 1, 1, 2, 1, 2}) ==
        Mat2(47, 128, 76, 207));
  // zeros fold via m(x,0,y) = m(x+y)
  CHECK(word_to_matrix(CFWord{2, 0, 1}) == word_to_matrix(CFWord{3}));
}

TEST_CASE("positivity criteria") {
  CHECK(is_positive(Mat2(2, 9, 3, 14)));
  CHECK_FALSE(is_positive(Mat2::identity()));
  CHECK(is_positive(Mat2(0, 1, 1, 5)));
  CHECK_THROWS_AS(is_positive(Mat2(1, 2, 3, 4)), std::domain_error);
}

TEST_CASE("criteria (2) and (4) agree on random unimodular matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coin(0, 3);
  int checked = 0;
  for (int i = 0; i < 100000; ++i) {
    Mat2 m;
    switch (coin(rng)) {
      case 0:
        m = word_to_matrix(random_word(rng, 6, 6));
        break;
      case 1: {  // transposed / inverted monoid elements and S0 twists
        Mat2 g = word_to_matrix(random_word(rng, 6, 5));
        m = s0_matrix() * g;
        break;
      }
      case 2: {
        Mat2 g = word_to_matrix(random_word(rng, 6, 5));
        m = Mat2(g.a, -g.b, -g.c, g.d);
        break;
      }
      default: {
        Mat2 g = word_to_matrix(random_word(rng, 6, 5));
        m = g.dagger();
        break;
      }
    }
    Int det = m.det();
    if (det != 1 && det != -1) continue;
    ++checked;
    bool crit2 = 0 <= m.a && m.a <= m.b && m.b <= m.d && m.a <= m.c &&
                 m.c <= m.d && !m.is_identity();
    REQUIRE(crit2 == is_positive_alt(m));
  }
  CHECK(checked > 50000);
}

TEST_CASE("factorize inverts word_to_matrix") {
  CHECK(factorize(Mat2(2, 9, 3, 14)) == CFWord{1, 1, 1, 4});
  for (int k = 1; k <= 9; ++k) {
    CHECK(factorize(Mat2::generator(k)) == CFWord{k});
  }
  CHECK(factorize(Mat2(47, 128, 76, 207)) == CFWord{1, 1, 1, 1, 1, 1, 1, 2, 1, 2});
  CHECK(factorize(Mat2::identity()) == CFWord{});
  CHECK_THROWS_AS(factorize(Mat2(0, -1, 1, 0)), std::domain_error);
}

TEST_CASE("round trip on random long words") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    CFWord w = random_word(rng, 9, 40, 10);
    REQUIRE(factorize(word_to_matrix(w)) == w);
  }
}

TEST_CASE("discriminant and field") {
  auto f1 = discr_and_field(Mat2(2, 9, 3, 14));
  CHECK(f1.discr == 252);
  CHECK(f1.field == 7);
  CHECK(f1.cofactor == 6);
  auto f2 = discr_and_field(
      word_to_matrix(CFWord{2, 2, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1}));
  CHECK(f2.discr == Int(1536796800));
  CHECK(f2.field == 2);
  CHECK(f2.cofactor == 27720);
  CHECK_THROWS_AS(discr_and_field(Mat2::identity()), std::domain_error);
}

TEST_CASE("discriminant divides discriminant of powers with square quotient") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Mat2 m = word_to_matrix(random_word(rng, 5, 5));
    Int base = discriminant(m);
    for (unsigned n = 1; n <= 5; ++n) {
      Int dn = discriminant(m.pow(n));
      REQUIRE(dn % base == 0);
      REQUIRE(is_perfect_square(dn / base));
    }
  }
}

TEST_CASE("eigen characterization of positive matrices") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = word_to_matrix(random_word(rng, 6, 6));
    // root x > 1 of b X^2 + (a-d) X - c with conjugate in (-1, 0)
    QuadraticSurd x(m.d - m.a, 1, discriminant(m), 2 * m.b);
    REQUIRE(x.compare_int(1) > 0);
    QuadraticSurd xb = x.conjugate();
    REQUIRE(xb.sign() < 0);
    REQUIRE((xb + QuadraticSurd::from_int(1)).sign() > 0);
  }
}

TEST_CASE("dagger and the determinant sum identity") {
  CHECK(Mat2::generator(3).dagger() == Mat2(3, -1, -1, 0));
  CHECK(det_sum_identity(word_to_matrix(CFWord{1, 2}), word_to_matrix(CFWord{2, 1})));
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> co(-50, 50);
  for (int i = 0; i < 10000; ++i) {
    Mat2 p(co(rng), co(rng), co(rng), co(rng));
    Mat2 q(co(rng), co(rng), co(rng), co(rng));
    REQUIRE(det_sum_identity(p, q));
    REQUIRE(p.dagger().dagger() == p);
    REQUIRE(p + p.dagger() == Mat2::identity() * p.trace());
  }
}

TEST_CASE("S0 lemmas: symmetric trace and Sdet") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> co(-100, 100);
  const Mat2 S0 = s0_matrix();
  for (int i = 0; i < 1000; ++i) {
    Int a = co(rng), b = co(rng), d = co(rng);
    Mat2 sym(a, b, b, d);
    REQUIRE((S0 * sym).trace() == 0);
    Mat2 c(co(rng), co(rng), co(rng), co(rng));
    REQUIRE(c * S0 * c.transposed() == S0 * c.det());
  }
}

TEST_CASE("rank1_factor paper examples") {
  auto f1 = rank1_factor(Mat2(2, 4, 4, 8));
  CHECK(f1.e == 2);
  CHECK(f1.p_word == CFWord{2});
  CHECK(f1.q_word == CFWord{2});

  auto f2 = rank1_factor(Mat2::diag(0, 5));
  CHECK(f2.e == 5);
  CHECK(f2.P == Mat2::identity());
  CHECK(f2.Q == Mat2::identity());

  auto f3 = rank1_factor(Mat2(4, 8, 6, 12));
  CHECK(f3.e == 2);
  CHECK(f3.p_word == CFWord{1, 2});
  CHECK(f3.q_word == CFWord{2});

  CHECK_THROWS_AS(rank1_factor(Mat2(1, 2, 3, 4)), std::domain_error);
  CHECK_THROWS_AS(rank1_factor(Mat2(0, 0, 0, 0)), std::domain_error);
  CHECK_THROWS_AS(rank1_factor(Mat2(2, 1, 4, 2)), std::domain_error);
}

TEST_CASE("rank1_factor reassembles exactly on random rank-1 inputs") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> co(0, 30);
  std::uniform_int_distribution<long> ee(1, 5);
  int done = 0;
  while (done < 300) {
    Int x = co(rng), y = co(rng), z = co(rng), t = co(rng), e = ee(rng);
    Mat2 h(x * z * e, x * t * e, y * z * e, y * t * e);
    if (h == Mat2(0, 0, 0, 0)) continue;
    if (!(0 <= h.a && h.a <= h.b && h.b <= h.d && h.a <= h.c && h.c <= h.d)) {
      continue;
    }
    ++done;
    auto f = rank1_factor(h);
    REQUIRE(f.P * Mat2::diag(0, f.e) * f.Q == h);
    Int g = boost::multiprecision::gcd(
        boost::multiprecision::gcd(h.a, h.b),
        boost::multiprecision::gcd(h.c, h.d));
    REQUIRE(f.e == g);
    // canonical boundary: P does not end with m(1), Q does not start with it
    if (f.p_word.size() > 1) REQUIRE(f.p_word.digits.back() != 1);
    if (f.q_word.size() > 1) REQUIRE(f.q_word.digits.front() != 1);
  }
}

TEST_CASE("sym_rank1_decomp spec examples") {
  auto d1 = sym_rank1_decomp(word_to_matrix(CFWord{2, 4}));  // (1 4; 2 9)
  CHECK(d1.F == Mat2::identity());
  CHECK(d1.n == 3);
  CHECK(d1.k == 1);
  CHECK_FALSE(d1.transposed);

  auto d2 = sym_rank1_decomp(word_to_matrix(CFWord{3, 1, 1, 4}));  // (2 9; 7 32)
  CHECK(d2.F == Mat2::identity());
  CHECK(d2.n == 4);
  CHECK(d2.k == 2);

  // rank(B + tB) = 2 must be rejected: m(1,1,1,1) = (2 3; 3 5)
  CHECK_THROWS_AS(sym_rank1_decomp(word_to_matrix(CFWord{1, 1, 1, 1})),
                  std::domain_error);
}

TEST_CASE("sym_rank1_decomp reconstructs the input") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> nn(2, 6), kk(1, 4);
  for (int i = 0; i < 200; ++i) {
    CFWord fw = random_word(rng, 4, 3, 0);
    Mat2 f = word_to_matrix(fw);
    Int n = nn(rng), k = kk(rng);
    Mat2 core = word_to_matrix(normalize(CFWord{n - 1, 1, k - 1, n}));
    Mat2 b = f * core * f.transposed();
    auto d = sym_rank1_decomp(b);
    Mat2 rebuilt =
        d.F * word_to_matrix(normalize(CFWord{d.n - 1, 1, d.k - 1, d.n})) *
        d.F.transposed();
    REQUIRE((d.transposed ? b.transposed() : b) == rebuilt);
  }
}

TEST_CASE("compute_H on the explicit example pair") {
  Mat2 B = word_to_matrix(CFWord{2, 1, 1, 1});
  Mat2 C = word_to_matrix(CFWord{1, 1, 1, 1, 2, 1});
  ScaledH h = compute_H(B, C);
  CHECK(h.s == 1);
  CHECK(h.H0 * h.r == Mat2(4, 8, 6, 12));
  CHECK(h.lambda == -2);
}

TEST_CASE("compute_H scaled regime reports the irrational scale") {
  // k = 1 and l = 2 blocks: kl = 2, so H = sqrt(2) H0.
  Mat2 B = word_to_matrix(CFWord{2, 4});        // k = 1, m = 3
  Mat2 C = word_to_matrix(CFWord{1, 1, 1, 2});  // l = 2, n = 2
  ScaledH h = compute_H(B, C);
  CHECK(h.s == 2);
  CHECK(h.r == 1);
}

TEST_CASE("compute_H trace identity on random A") {
  Mat2 B = word_to_matrix(CFWord{2, 1, 1, 1});
  Mat2 C = word_to_matrix(CFWord{1, 1, 1, 1, 2, 1});
  ScaledH h = compute_H(B, C);
  REQUIRE(h.s == 1);
  Mat2 H = h.H0 * h.r;
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> co(-40, 40);
  for (int i = 0; i < 1000; ++i) {
    Mat2 a(co(rng), co(rng), co(rng), co(rng));
    Int tha = (H * a).trace();
    Int lhs = (B * a * C * a.transposed()).trace();
    REQUIRE(lhs == tha * tha + h.lambda * a.det());
    // discriminant factorization from the same identity
    Int discr = discriminant(B * a * C * a.transposed());
    REQUIRE(discr == tha * tha * (tha * tha + 2 * h.lambda * a.det()));
  }
}

TEST_CASE("find_S spec examples") {
  CHECK(find_S(Mat2::generator(2)) == s0_matrix());
  CHECK(find_S(word_to_matrix(CFWord{1, 2, 1, 3})) ==
        s0_matrix() * Mat2::generator(3));
  CHECK_THROWS_AS(find_S(word_to_matrix(CFWord{1, 2, 3})), std::domain_error);
}

TEST_CASE("find_S postconditions on palindromic splits") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    CFWord left = random_word(rng, 4, 2, 0);
    CFWord right = random_word(rng, 4, 2, 0);
    CFWord lw = left + left.reversed();           // even palindrome
    CFWord rw = right + CFWord{3} + right.reversed();  // odd palindrome
    CFWord w = lw + rw;
    Mat2 a = word_to_matrix(w);
    if (a.is_identity()) continue;
    Mat2 s = find_S(a);
    REQUIRE(s.trace() == 0);
    REQUIRE((s * a).trace() == 0);
    Int det = s.det();
    REQUIRE((det == 1 || det == -1));
    if (a.det() == 1) REQUIRE(det == -1);
  }
}

TEST_CASE("h_from_s gate and trace ladder") {
  // Det(S0) = 1 != -Det(m(2)^2) = -1: the gate must reject.
  CHECK_THROWS_AS(h_from_s(s0_matrix(), Mat2::generator(2), 2),
                  std::domain_error);

  // A = m(3) m(2) (M = m(3) symmetric), S = S0 m(2), b = 2.
  Mat2 a = word_to_matrix(CFWord{3, 2});
  Mat2 s = s0_matrix() * Mat2::generator(2);
  Mat2 h = h_from_s(s, a, 2);
  CHECK(h.det() == 0);
  for (unsigned n = 0; n <= 4; ++n) {
    REQUIRE((h * a.pow(n)).trace() == a.pow(n + 2).trace());
  }
}
