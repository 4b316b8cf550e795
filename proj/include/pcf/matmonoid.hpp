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

#ifndef PCF_MATMONOID_HPP
#define PCF_MATMONOID_HPP

#include <string>

#include "pcf/cfcore.hpp"
#include "pcf/exactnum.hpp"

namespace pcf {

/// 2x2 integer matrix, row-major (a b; c d). Plain value type: membership
/// in the positive monoid or GL2(Z) is checked by predicates, not encoded
/// in the type, since many operations cross in and out on purpose.
struct Mat2 {
  Int a, b, c, d;

  Mat2() : a(0), b(0), c(0), d(0) {}
  Mat2(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return Mat2(1, 0, 0, 1); }
  /// Generator m(i) = (0 1; 1 i).
  static Mat2 generator(const Int& i) { return Mat2(0, 1, 1, i); }
  static Mat2 diag(const Int& x, const Int& y) { return Mat2(x, 0, 0, y); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
  }
  Mat2 operator+(const Mat2& o) const {
    return Mat2(a + o.a, b + o.b, c + o.c, d + o.d);
  }
  Mat2 operator-(const Mat2& o) const {
    return Mat2(a - o.a, b - o.b, c - o.c, d - o.d);
  }
  Mat2 operator*(const Int& s) const { return Mat2(a * s, b * s, c * s, d * s); }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  Mat2 transposed() const { return Mat2(a, c, b, d); }
  /// P^dagger with P + P^dagger = Tr(P) I.
  Mat2 dagger() const { return Mat2(d, -b, -c, a); }
  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_symmetric() const { return b == c; }
  Mat2 pow(unsigned n) const;

  std::string str() const;  // "(a b; c d)"
};

/// S0 = (0 -1; 1 0): Tr(S0 P) = 0 characterizes symmetric P.
inline Mat2 s0_matrix() { return Mat2(0, -1, 1, 0); }

/// Product of generators m(a1)...m(an); zeros fold via m(x,0,y) = m(x+y)
/// automatically. The empty word gives the identity.
Mat2 word_to_matrix(const CFWord& word);

/// Positivity criterion 0 <= a <= b <= d, a <= c <= d for matrices of
/// determinant +-1 (the identity is excluded). Domain error when |det| != 1.
bool is_positive(const Mat2& m);

/// The alternate criterion |b - c| < d - a with nonnegative entries;
/// equivalent to is_positive on GL2(Z), kept for cross-checks.
bool is_positive_alt(const Mat2& m);

/// Unique factorization of a monoid element into generator indices, by
/// peeling the last generator with i = min(floor(b/a), floor(d/c)),
/// convention floor(b/0) = infinity. The identity gives the empty word.
CFWord factorize(const Mat2& m);

Int discriminant(const Mat2& m);  // (d-a)^2 + 4bc = Tr^2 - 4 Det

struct FieldInfo {
  Int discr;
  Int field;     // squarefree part
  Int cofactor;  // discr = field * cofactor^2
};

/// Discriminant plus its squarefree split. Errors when discr <= 0
/// (not real-hyperbolic).
FieldInfo discr_and_field(const Mat2& m);

/// Exact check of Det(P+Q) = Det(P) + Det(Q) + Tr(P Q^dagger).
bool det_sum_identity(const Mat2& p, const Mat2& q);

/// H = P diag(0, e) Q with P, Q in the monoid and e = gcd of the entries.
/// Canonical: P does not end with m(1) and Q does not begin with m(1)
/// whenever the rewrite m(n)m(1) = m(n+1) (against the diagonal) applies.
struct Rank1Factorization {
  Mat2 P;
  Int e;
  Mat2 Q;
  CFWord p_word;
  CFWord q_word;
};

/// Requires det H = 0, H != 0, and 0 <= a <= b <= d, a <= c <= d.
Rank1Factorization rank1_factor(const Mat2& h);

/// Witness for B (or its transpose) = F m(n-1, 1, k-1, n) tF; the core
/// block is (k, kn+1; kn-1, kn^2).
struct SymRank1 {
  Mat2 F;
  Int n;  // n >= 2
  Int k;  // k >= 1
  bool transposed;  // true when the decomposition applies to tB
};

/// Requires B positive with B + tB of rank 1 (equivalently Det(B) = 1 and
/// |b - c| = 2).
SymRank1 sym_rank1_decomp(const Mat2& b);

/// H = r*sqrt(s)*H0 with H0 integral of rank 1.
struct ScaledH {
  Mat2 H0;
  Int s;       // squarefree
  Int r;       // cofactor: the true scale is r*sqrt(s)
  int lambda;  // the +-2 in Tr(B A C tA) = Tr^2(H A) + lambda Det(A)
};

/// From decompositions of B and C (via sym_rank1_decomp), the matrix H with
/// Tr(B A C tA) = Tr^2(H A) + lambda Det(A) for every A. When kl is not a
/// perfect square the result is reported scaled, not rejected, so the
/// Wilson-type regime reuses this path.
ScaledH compute_H(const Mat2& b, const Mat2& c);

/// An S in GL2(Z) with Tr(S) = 0 and Tr(S A) = 0, and Det(S) = -1 whenever
/// Det(A) = 1. Uses the closed form S = S0 N when A's word splits into two
/// palindromes (A = M N with M, N symmetric), else the Pell-parametrized
/// witness (1, 0; (d-a)/b, -1) when b | (d-a). Errors otherwise.
Mat2 find_S(const Mat2& a);

/// H = S + A^b, of rank 1, with Tr(H A^n) = Tr(A^{n+b}) for all n. The
/// preconditions Det(S) = -Det(A^b), Tr(S) = 0, Tr(S A) = 0 are enforced.
Mat2 h_from_s(const Mat2& s, const Mat2& a, unsigned b);

}  // namespace pcf

#endif  // PCF_MATMONOID_HPP
