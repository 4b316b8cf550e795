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

#ifndef PCF_EXACTNUM_HPP
#define PCF_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

using Int = boost::multiprecision::cpp_int;

/// Raised when the factoring budget runs out. Carries the partial
/// factorization gathered so far; never a wrong answer.
class FactoringError : public std::runtime_error {
 public:
  FactoringError(std::string what, std::vector<std::pair<Int, int>> partial,
                 Int unfactored)
      : std::runtime_error(std::move(what)),
        partial_factors(std::move(partial)),
        unfactored_part(std::move(unfactored)) {}

  std::vector<std::pair<Int, int>> partial_factors;
  Int unfactored_part;
};

struct FactorConfig {
  Int trial_bound = 100000;            // trial division up to this bound
  std::uint64_t rho_iteration_cap = 50'000'000;  // total Pollard-rho budget
};

/// Exact floor square root. Domain error on negative input.
Int isqrt(const Int& n);

/// Exact floor cube root of a nonnegative integer.
Int icbrt(const Int& n);

Int floor_div(const Int& num, const Int& den);

bool is_perfect_square(const Int& n);

/// Deterministic Miller-Rabin below 3.3e24, strong witness set above.
bool is_probable_prime(const Int& n);

/// Full factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<Int, int>> factor_integer(const Int& n,
                                                const FactorConfig& cfg = {});

struct SquarefreeSplit {
  Int n;      // input
  Int delta;  // squarefree part
  Int k;      // cofactor: n = delta * k^2
};

/// n = delta * k^2 with delta squarefree. Domain error on n < 1.
SquarefreeSplit squarefree_split(const Int& n, const FactorConfig& cfg = {});

/// Reduced rational with positive denominator.
struct Rational {
  Int num;
  Int den;

  Rational() : num(0), den(1) {}
  Rational(Int n, Int d);

  bool is_integer() const { return den == 1; }
  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  std::string str() const;
};

/// Canonical element (p + q*sqrt(d)) / r of a real quadratic field.
///
/// Invariants after construction: r > 0, gcd(p, q, r) = 1, d squarefree,
/// and rationals are stored with q = 0, d = 0 (no separate rational type).
class QuadraticSurd {
 public:
  QuadraticSurd() : p_(0), q_(0), d_(0), r_(1) {}
  QuadraticSurd(Int p, Int q, Int d, Int r);

  static QuadraticSurd from_rational(Int num, Int den);
  static QuadraticSurd from_int(Int n) { return from_rational(std::move(n), 1); }
  /// sqrt(d) + add, for d >= 0.
  static QuadraticSurd sqrt_plus(Int d, Int add = 0);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& d() const { return d_; }
  const Int& r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  /// -1, 0 or +1, decided by integer comparisons only.
  int sign() const;

  QuadraticSurd conjugate() const;
  Rational trace() const;  // 2p/r
  Rational norm() const;   // (p^2 - q^2 d) / r^2
  Int floor() const;

  QuadraticSurd operator+(const QuadraticSurd& o) const;
  QuadraticSurd operator-(const QuadraticSurd& o) const;
  QuadraticSurd operator*(const QuadraticSurd& o) const;
  QuadraticSurd operator/(const QuadraticSurd& o) const;
  QuadraticSurd operator-() const;

  bool operator==(const QuadraticSurd& o) const {
    return p_ == o.p_ && q_ == o.q_ && d_ == o.d_ && r_ == o.r_;
  }
  bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }
  /// Structural order on the canonical form; usable as a map key.
  bool operator<(const QuadraticSurd& o) const;

  /// sign(*this - o), exact.
  int compare(const QuadraticSurd& o) const;
  int compare_int(const Int& k) const;

  std::string str() const;
  /// Debug/display only; never used in logic.
  double approx() const;

 private:
  struct canonical_tag {};
  QuadraticSurd(canonical_tag, Int p, Int q, Int d, Int r);
  void reduce();  // gcd + sign; assumes d already squarefree-canonical

  Int p_, q_, d_, r_;
};

}  // namespace pcf

#endif  // PCF_EXACTNUM_HPP
