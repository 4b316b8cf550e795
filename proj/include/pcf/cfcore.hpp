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

#ifndef PCF_CFCORE_HPP
#define PCF_CFCORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pcf/exactnum.hpp"

namespace pcf {

/// A finite sequence of partial quotients. Digits are >= 0 before
/// normalization, >= 1 after; a leading 0 is allowed in the
/// rational-expansion role (values in [0,1)).
struct CFWord {
  std::vector<Int> digits;

  CFWord() = default;
  CFWord(std::initializer_list<Int> init) : digits(init) {}
  explicit CFWord(std::vector<Int> d) : digits(std::move(d)) {}

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  bool operator==(const CFWord& o) const { return digits == o.digits; }
  bool operator!=(const CFWord& o) const { return !(*this == o); }

  Int max_digit() const;
  bool is_palindrome() const;
  bool has_zero() const;
  CFWord reversed() const;
  CFWord repeated(unsigned n) const;
  /// Concatenation.
  CFWord operator+(const CFWord& o) const;

  std::string str() const;  // "a1,a2,..."
};

/// Preperiod + period of a quadratic surd's continued fraction. The period
/// is primitive (the smallest one).
struct CFExpansion {
  CFWord preperiod;
  CFWord period;

  bool purely_periodic() const { return preperiod.empty(); }
  /// "[a0; a1, a2]" when period is empty, "[pre | overline(period)]" else.
  std::string str() const;
};

enum class TerminalVariant { LastAtLeast2, LastEquals1 };

/// Euclidean expansion of num/den >= 0 (coprime). A leading 0 appears when
/// num < den. The variant picks between [..., an] with an >= 2 and the
/// equivalent [..., an - 1, 1].
CFWord expand_rational(const Int& num, const Int& den,
                       TerminalVariant variant = TerminalVariant::LastAtLeast2);

/// Value of a finite word [a0; a1, ...] as an exact rational.
Rational eval_finite(const CFWord& word);

/// Periodic expansion of a quadratic irrational by iterating
/// x -> 1/(x - floor(x)) with exact arithmetic; the period closes at the
/// first repeated surd state and is therefore primitive.
CFExpansion expand_surd(const QuadraticSurd& x);

/// The purely periodic real > 1 whose period is `word`: the root x > 1 of
/// b X^2 + (a - d) X - c for (a b; c d) the word's matrix.
QuadraticSurd eval_periodic(const CFWord& word);

/// Zero elimination for periodic words, cyclic semantics: every triple
/// (x, 0, y) collapses to (x + y), with boundary zeros resolved by rotating
/// the word first. Domain error when the word normalizes away entirely or a
/// two-element cyclic word with a zero remains (degenerate, non-hyperbolic).
CFWord normalize(const CFWord& word);

/// Lexicographically smallest rotation — the canonical representative of a
/// purely periodic word whenever a unique one is needed.
CFWord canonical_rotation(const CFWord& word);

bool rotations_equal(const CFWord& a, const CFWord& b);

struct QuasiPalindromeResult {
  bool quasi_palindromic = false;
  /// Rotation of the period with shape (a0, a1, ..., a2, a1), when true.
  CFWord witness;
};

/// True iff Tr(x) is an integer equal to floor(x) and x > 1; the witness is
/// the rotation of the (purely periodic) expansion exhibiting the
/// one-digit-then-palindrome shape.
QuasiPalindromeResult is_quasi_palindromic(const QuadraticSurd& x);

/// Expansion of sqrt(delta) + floor(sqrt(delta)), purely periodic with all
/// digits <= 2*floor(sqrt(delta)). Domain error on perfect squares.
CFExpansion sqrt_plus_floor(const Int& delta);

}  // namespace pcf

#endif  // PCF_CFCORE_HPP
