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

#include "pcf/cfcore.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pcf/matmonoid.hpp"

namespace pcf {

using boost::multiprecision::gcd;

Int CFWord::max_digit() const {
  Int m = 0;
  for (const Int& d : digits) m = std::max(m, d);
  return m;
}

bool CFWord::is_palindrome() const {
  for (std::size_t i = 0, j = digits.size(); i < j; ++i, --j) {
    if (digits[i] != digits[j - 1]) return false;
  }
  return true;
}

bool CFWord::has_zero() const {
  return std::find(digits.begin(), digits.end(), Int(0)) != digits.end();
}

CFWord CFWord::reversed() const {
  CFWord w = *this;
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

CFWord CFWord::repeated(unsigned n) const {
  CFWord w;
  w.digits.reserve(digits.size() * n);
  for (unsigned i = 0; i < n; ++i) {
    w.digits.insert(w.digits.end(), digits.begin(), digits.end());
  }
  return w;
}

CFWord CFWord::operator+(const CFWord& o) const {
  CFWord w = *this;
  w.digits.insert(w.digits.end(), o.digits.begin(), o.digits.end());
  return w;
}

std::string CFWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) os << ",";
    os << digits[i];
  }
  return os.str();
}

std::string CFExpansion::str() const {
  std::ostringstream os;
  if (period.empty()) {
    os << "[";
    for (std::size_t i = 0; i < preperiod.size(); ++i) {
      os << preperiod.digits[i] << (i == 0 ? "; " : (i + 1 < preperiod.size() ? ", " : ""));
    }
    os << "]";
    return os.str();
  }
  os << "[";
  if (!preperiod.empty()) os << preperiod.str() << " | ";
  os << "overline(" << period.str() << ")]";
  return os.str();
}

CFWord expand_rational(const Int& num, const Int& den, TerminalVariant variant) {
  if (den < 1) throw std::domain_error("expand_rational: denominator must be >= 1");
  if (num < 0) throw std::domain_error("expand_rational: numerator must be >= 0");
  if (gcd(num, den) != 1) {
    throw std::domain_error("expand_rational: inputs must be coprime");
  }
  CFWord word;
  Int n = num, d = den;
  while (d != 0) {
    word.digits.push_back(n / d);
    Int r = n % d;
    n = d;
    d = r;
  }
  if (variant == TerminalVariant::LastEquals1 && word.digits.back() >= 1) {
    // Euclid ends with a digit >= 2 except for single-digit words, so the
    // split below never leaves an interior zero.
    word.digits.back() -= 1;
    word.digits.push_back(1);
  }
  return word;
}

Rational eval_finite(const CFWord& word) {
  if (word.empty()) throw std::domain_error("eval_finite: empty word");
  // Convergent recurrence p_k = a_k p_{k-1} + p_{k-2}.
  Int p_prev = 1, p_cur = word.digits[0];
  Int q_prev = 0, q_cur = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    Int p_next = word.digits[i] * p_cur + p_prev;
    Int q_next = word.digits[i] * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
  }
  return Rational(p_cur, q_cur);
}

CFExpansion expand_surd(const QuadraticSurd& x) {
  if (x.is_rational()) {
    throw std::domain_error("expand_surd: rational input, use expand_rational");
  }
  std::map<QuadraticSurd, std::size_t> seen;
  std::vector<Int> digits;
  QuadraticSurd cur = x;
  constexpr std::size_t kMaxSteps = 10'000'000;
  while (digits.size() < kMaxSteps) {
    auto [it, inserted] = seen.emplace(cur, digits.size());
    if (!inserted) {
      std::size_t start = it->second;
      CFExpansion exp;
      exp.preperiod.digits.assign(digits.begin(), digits.begin() + start);
      exp.period.digits.assign(digits.begin() + start, digits.end());
      return exp;
    }
    Int a = cur.floor();
    digits.push_back(a);
    cur = QuadraticSurd::from_int(1) / (cur - QuadraticSurd::from_int(a));
  }
  throw std::runtime_error("expand_surd: iteration cap exceeded");
}

QuadraticSurd eval_periodic(const CFWord& word) {
  if (word.empty()) throw std::domain_error("eval_periodic: empty word");
  for (const Int& d : word.digits) {
    if (d < 1) throw std::domain_error("eval_periodic: digits must be >= 1");
  }
  Mat2 m = word_to_matrix(word);
  // x is the root > 1 of b X^2 + (a - d) X - c.
  Int discr = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  return QuadraticSurd(m.d - m.a, 1, discr, 2 * m.b);
}

CFWord normalize(const CFWord& word) {
  if (word.empty()) throw std::domain_error("normalize: empty word");
  for (const Int& d : word.digits) {
    if (d < 0) throw std::domain_error("normalize: negative digit");
  }
  std::vector<Int> w = word.digits;
  while (true) {
    std::size_t n = w.size();
    auto it = std::find(w.begin(), w.end(), Int(0));
    if (it == w.end()) break;
    if (n == 1) throw std::domain_error("normalize: word normalizes to empty");
    if (n == 2) {
      throw std::domain_error("normalize: degenerate two-digit cyclic word");
    }
    // Cyclic merge (prev, 0, next) -> prev + next; emit the survivors in
    // cyclic order starting after `next`.
    std::size_t t = static_cast<std::size_t>(it - w.begin());
    std::size_t prev = (t + n - 1) % n;
    std::size_t next = (t + 1) % n;
    std::vector<Int> out;
    out.reserve(n - 2);
    for (std::size_t i = (next + 1) % n; i != prev; i = (i + 1) % n) {
      out.push_back(w[i]);
    }
    out.push_back(w[prev] + w[next]);
    w = std::move(out);
  }
  return CFWord(std::move(w));
}

CFWord canonical_rotation(const CFWord& word) {
  if (word.empty()) return word;
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      const Int& a = word.digits[(cand + i) % n];
      const Int& b = word.digits[(best + i) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  CFWord out;
  out.digits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.digits.push_back(word.digits[(best + i) % n]);
  return out;
}

bool rotations_equal(const CFWord& a, const CFWord& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

QuasiPalindromeResult is_quasi_palindromic(const QuadraticSurd& x) {
  if (x.is_rational()) {
    throw std::domain_error("is_quasi_palindromic: rational input");
  }
  QuasiPalindromeResult res;
  Rational tr = x.trace();
  if (!tr.is_integer()) return res;
  if (x.compare_int(1) <= 0) return res;
  if (tr.num != x.floor()) return res;
  res.quasi_palindromic = true;

  CFExpansion exp = expand_surd(x);
  if (!exp.purely_periodic()) {
    throw std::logic_error(
        "is_quasi_palindromic: trace condition held but expansion is not "
        "purely periodic");
  }
  const std::size_t n = exp.period.size();
  for (std::size_t rot = 0; rot < n; ++rot) {
    CFWord cand;
    cand.digits.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      cand.digits.push_back(exp.period.digits[(rot + i) % n]);
    }
    CFWord tail;
    tail.digits.assign(cand.digits.begin() + 1, cand.digits.end());
    if (tail.is_palindrome()) {
      res.witness = cand;
      return res;
    }
  }
  throw std::logic_error(
      "is_quasi_palindromic: no quasi-palindromic rotation found for a real "
      "satisfying the trace criterion");
}

CFExpansion sqrt_plus_floor(const Int& delta) {
  if (delta < 2 || is_perfect_square(delta)) {
    throw std::domain_error("sqrt_plus_floor: delta must be a non-square >= 2");
  }
  QuadraticSurd x = QuadraticSurd::sqrt_plus(delta, isqrt(delta));
  CFExpansion exp = expand_surd(x);
  if (!exp.purely_periodic()) {
    throw std::logic_error("sqrt_plus_floor: expansion not purely periodic");
  }
  return exp;
}

}  // namespace pcf
