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

#ifndef PCF_FAMILIES_HPP
#define PCF_FAMILIES_HPP

#include <string>
#include <vector>

#include "pcf/cfcore.hpp"
#include "pcf/matmonoid.hpp"

namespace pcf {

enum class Provenance { MN, SuitesIjM, SuiteSym, Suite12s, Wilson, Zaremba };

std::string provenance_name(Provenance p);

/// An n-indexed family of periodic words B . A^n . C' . (tA)^n (C' is C or
/// tC per transpose_C), certified to stay in Q[sqrt(field)].
struct FamilySpec {
  CFWord B_word;
  CFWord C_word;
  CFWord A_word;
  bool transpose_C = false;
  Int field = 0;
  Int max_digit_bound = 0;
  Provenance provenance = Provenance::MN;
};

/// The B A^n C tA^n construction from two symmetric monoid matrices, at
/// least one of determinant -1 (reduced internally to Det(M) = -1 by
/// transposing, as the proof does). Certifies field constancy and
/// non-triviality for n = 0..4 before returning; constructor error with the
/// offending n otherwise.
FamilySpec mn_construct(const Mat2& m, const Mat2& n);

/// Same, seeded by a quasi-palindromic word (a0, a1, ..., a2, a1):
/// M = m(a0), N = m(palindrome part).
FamilySpec mn_from_seed(const CFWord& seed);

/// The normalized periodic word of the n-th family member.
CFWord family_word(const FamilySpec& spec, unsigned n);

struct CertifiedWord {
  CFWord word;  // normalized
  Int field;
};

enum class IjmTemplate { PlainPowers, WithJ, WithPattern };

/// The three template families per parity of i; the pattern argument is
/// used only by WithPattern and must be a palindrome.
CertifiedWord suites_ijM(const Int& i, const Int& j, const CFWord& pattern,
                         unsigned n, IjmTemplate variant);

/// [2,1,1,1, (S,1,1,2,1,1)^n, S,1,2,1,1,1,1,S, (1,1,2,1,1,S)^n] in the
/// field of m(S,1,1,2,1,1). The pattern must be a palindrome (may be empty).
CertifiedWord suite_sym(const CFWord& pattern, unsigned n);

struct Suite12sResult {
  Int s;
  CFWord word;
  Int field;
};

/// Three-digit families {1, 2, s} in Q[sqrt(delta)]: s = 3 y^2 delta - 1
/// for (x, y) the minimal solution of x^2 - 9 delta y^2 = 1.
Suite12sResult suite_12s(const Int& delta, unsigned n);

enum class WilsonVariant { Original, SmallDigits };

/// Wilson-type sequences in Q[sqrt(s(s+4))].
CertifiedWord wilson_family(const Int& s, unsigned n, WilsonVariant variant);

/// A certified periodic word built from the expansion of the rational a/c,
/// for a Pell +-1 pair (b, c) of delta.
struct ZarembaInstance {
  Int a, b, c, delta;
  CFWord word;          // normalized periodic word
  QuadraticSurd surd;   // (c - a + b sqrt(delta))/c
  Mat2 product;         // the closed-form matrix (2ac+s, 2c^2; ...)
  int sign;             // the +-1 in the closed form (= -(c^2 - delta b^2))
};

/// Requires c^2 - delta b^2 = +-1, gcd(a, c) = 1, 0 < a < c. Builds both
/// template words, selects the one whose field matches, and cross-checks
/// the closed-form matrix and the eigenvector (1; x).
ZarembaInstance zaremba_to_periodic(const Int& a, const Int& b, const Int& c,
                                    const Int& delta);

struct CertifyRow {
  unsigned n = 0;
  CFWord word;
  std::size_t length = 0;
  Int discr = 0;
  Int field = 0;
  Int cofactor = 0;
  bool field_ok = false;
  bool digits_ok = false;
};

struct CertifyReport {
  bool ok = false;
  std::vector<CertifyRow> rows;
  std::string failure;  // empty when ok
};

/// Non-throwing batch verification: word, matrix, discriminant and field
/// for n = 0..n_max, with field-constancy and digit-bound checks.
CertifyReport certify_family(const FamilySpec& spec, unsigned n_max,
                             unsigned threads = 1);

}  // namespace pcf

#endif  // PCF_FAMILIES_HPP
