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

#include "pcf/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace pcf {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

Int icbrt(const Int& n) {
  if (n < 0) throw std::domain_error("icbrt: negative input");
  if (n == 0) return 0;
  // Newton iteration from a high initial guess.
  Int x = Int(1) << (msb(n) / 3 + 1);
  while (true) {
    Int y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > n) --x;
  while ((x + 1) * (x + 1) * (x + 1) <= n) ++x;
  return x;
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  return s * s == n;
}

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

Int powmod(Int base, Int exp, const Int& m) {
  Int result = 1;
  base %= m;
  while (exp > 0) {
    if (bit_test(exp, 0)) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while (bit_test(d, 0) == false) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for n < 3.3e24; beyond that it is a
  // strong probabilistic test, ample for desk-scale discriminants.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

namespace {

Int pollard_rho(const Int& n, std::uint64_t& budget) {
  // Brent's cycle variant with batched gcds.
  for (std::uint64_t seed = 1;; ++seed) {
    Int x = Int(2) + Int(seed);
    Int y = x;
    Int c = Int(1) + Int(seed % 97);
    Int d = 1;
    Int saved_x = x, saved_y = y;
    int batch = 0;
    Int acc = 1;
    while (d == 1) {
      if (budget == 0) return 0;
      --budget;
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      Int diff = x >= y ? x - y : y - x;
      if (diff == 0) break;  // cycle without factor; retry with new seed
      acc = mulmod(acc, diff, n);
      if (++batch == 64) {
        d = gcd(acc, n);
        if (d == n) {
          // Overshot: replay one step at a time from the saved point.
          x = saved_x;
          y = saved_y;
          d = 1;
          do {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            Int dd = x >= y ? x - y : y - x;
            d = gcd(dd == 0 ? Int(n) : dd, n);
          } while (d == 1);
          break;
        }
        batch = 0;
        acc = 1;
        saved_x = x;
        saved_y = y;
      }
    }
    if (d > 1 && d < n) return d;
  }
}

void factor_rec(Int n, std::map<Int, int>& out, std::uint64_t& budget,
                std::vector<std::pair<Int, int>>& partial_for_error) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    Int s = isqrt(n);
    factor_rec(s, out, budget, partial_for_error);
    factor_rec(s, out, budget, partial_for_error);
    return;
  }
  Int d = pollard_rho(n, budget);
  if (d == 0) {
    for (const auto& [p, e] : out) partial_for_error.emplace_back(p, e);
    throw FactoringError("factoring budget exhausted (unfactored part left)",
                         partial_for_error, n);
  }
  factor_rec(d, out, budget, partial_for_error);
  factor_rec(n / d, out, budget, partial_for_error);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_integer(const Int& n,
                                                const FactorConfig& cfg) {
  if (n < 1) throw std::domain_error("factor_integer: input must be >= 1");
  std::map<Int, int> out;
  Int m = n;
  for (Int p = 2; p <= cfg.trial_bound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
  }
  if (m > 1) {
    std::uint64_t budget = cfg.rho_iteration_cap;
    std::vector<std::pair<Int, int>> partial;
    factor_rec(m, out, budget, partial);
  }
  return {out.begin(), out.end()};
}

SquarefreeSplit squarefree_split(const Int& n, const FactorConfig& cfg) {
  if (n < 1) throw std::domain_error("squarefree_split: input must be >= 1");
  Int delta = 1, k = 1;
  for (const auto& [p, e] : factor_integer(n, cfg)) {
    if (e % 2 == 1) delta *= p;
    for (int i = 0; i < e / 2; ++i) k *= p;
  }
  return {n, delta, k};
}

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

QuadraticSurd::QuadraticSurd(Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  if (r_ == 0) throw std::domain_error("QuadraticSurd: zero denominator");
  if (d_ < 0) throw std::domain_error("QuadraticSurd: negative radicand");
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  } else {
    auto split = squarefree_split(d_);
    if (split.k > 1) {
      q_ *= split.k;
      d_ = split.delta;
    }
    if (d_ == 1) {  // d was a perfect square
      p_ += q_;
      q_ = 0;
      d_ = 0;
    }
  }
  reduce();
}

QuadraticSurd::QuadraticSurd(canonical_tag, Int p, Int q, Int d, Int r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  if (q_ == 0) d_ = 0;
  reduce();
}

void QuadraticSurd::reduce() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Int g = gcd(gcd(abs(p_), abs(q_)), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadraticSurd QuadraticSurd::from_rational(Int num, Int den) {
  return QuadraticSurd(std::move(num), 0, 0, std::move(den));
}

QuadraticSurd QuadraticSurd::sqrt_plus(Int d, Int add) {
  return QuadraticSurd(std::move(add), 1, std::move(d), 1);
}

namespace {

// sign of a + q*sqrt(d), all exact.
int sign_linear(const Int& a, const Int& q, const Int& d) {
  if (q == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
  if (a == 0) return q > 0 ? 1 : -1;
  if (a > 0 && q > 0) return 1;
  if (a < 0 && q < 0) return -1;
  Int lhs = a * a, rhs = q * q * d;
  if (lhs == rhs) return 0;
  if (a > 0) return lhs > rhs ? 1 : -1;  // q < 0
  return rhs > lhs ? 1 : -1;             // a < 0, q > 0
}

}  // namespace

int QuadraticSurd::sign() const { return sign_linear(p_, q_, d_); }

QuadraticSurd QuadraticSurd::conjugate() const {
  return QuadraticSurd(canonical_tag{}, p_, -q_, d_, r_);
}

Rational QuadraticSurd::trace() const { return Rational(2 * p_, r_); }

Rational QuadraticSurd::norm() const {
  return Rational(p_ * p_ - q_ * q_ * d_, r_ * r_);
}

int QuadraticSurd::compare_int(const Int& k) const {
  return sign_linear(p_ - k * r_, q_, d_);
}

int QuadraticSurd::compare(const QuadraticSurd& o) const {
  return (*this - o).sign();
}

Int QuadraticSurd::floor() const {
  if (q_ == 0) return floor_div(p_, r_);
  Int q2d = q_ * q_ * d_;
  Int lo;  // integer lower bound for q*sqrt(d)
  if (q_ > 0) {
    lo = isqrt(q2d);
  } else {
    lo = -isqrt(q2d) - 1;
  }
  Int f = floor_div(p_ + lo, r_);
  while (compare_int(f + 1) >= 0) ++f;
  while (compare_int(f) < 0) --f;
  return f;
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(canonical_tag{}, -p_, -q_, d_, r_);
}

namespace {

const Int& common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (!x.is_rational() && !y.is_rational() && x.d() != y.d()) {
    throw std::domain_error("surd arithmetic: incompatible radicands");
  }
  return x.is_rational() ? y.d() : x.d();
}

}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
  const Int& d = common_radicand(*this, o);
  return QuadraticSurd(canonical_tag{}, p_ * o.r_ + o.p_ * r_,
                       q_ * o.r_ + o.q_ * r_, d, r_ * o.r_);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
  const Int& d = common_radicand(*this, o);
  return QuadraticSurd(canonical_tag{}, p_ * o.r_ - o.p_ * r_,
                       q_ * o.r_ - o.q_ * r_, d, r_ * o.r_);
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
  const Int& d = common_radicand(*this, o);
  return QuadraticSurd(canonical_tag{}, p_ * o.p_ + q_ * o.q_ * d,
                       p_ * o.q_ + q_ * o.p_, d, r_ * o.r_);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
  if (o.is_zero()) throw std::domain_error("surd arithmetic: division by zero");
  const Int& d = common_radicand(*this, o);
  // x / y = x * conj(y) * r_y / N0 where N0 = p_y^2 - q_y^2 d.
  Int n0 = o.p_ * o.p_ - o.q_ * o.q_ * d;
  return QuadraticSurd(canonical_tag{},
                       (p_ * o.p_ - q_ * o.q_ * d) * o.r_,
                       (q_ * o.p_ - p_ * o.q_) * o.r_, d, r_ * n0);
}

bool QuadraticSurd::operator<(const QuadraticSurd& o) const {
  if (d_ != o.d_) return d_ < o.d_;
  if (r_ != o.r_) return r_ < o.r_;
  if (p_ != o.p_) return p_ < o.p_;
  return q_ < o.q_;
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
    if (r_ != 1) os << "/" << r_;
    return os.str();
  }
  std::ostringstream body;
  bool wrap = r_ != 1;
  if (p_ != 0) {
    body << p_ << (q_ > 0 ? " + " : " - ");
    Int aq = abs(q_);
    if (aq != 1) body << aq;
    body << "\xE2\x88\x9A" << d_;  // U+221A square root sign
    wrap = wrap || true;
  } else {
    if (q_ == -1) {
      body << "-";
    } else if (q_ != 1) {
      body << q_;
    }
    body << "\xE2\x88\x9A" << d_;
  }
  if (r_ == 1) return body.str();
  os << "(" << body.str() << ")/" << r_;
  return os.str();
}

double QuadraticSurd::approx() const {
  double pd = p_.convert_to<double>();
  double qd = q_.convert_to<double>();
  double dd = d_.convert_to<double>();
  double rd = r_.convert_to<double>();
  return (pd + qd * std::sqrt(dd)) / rd;
}

}  // namespace pcf
