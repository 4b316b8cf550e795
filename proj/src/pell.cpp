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

#include "pcf/pell.hpp"

#include "pcf/cfcore.hpp"

namespace pcf {

namespace {

void require_nonsquare(const Int& delta, const char* who) {
  if (delta < 2 || is_perfect_square(delta)) {
    throw std::domain_error(std::string(who) + ": delta must be a non-square >= 2");
  }
}

}  // namespace

PellSolution fundamental_pm1(const Int& delta) {
  require_nonsquare(delta, "fundamental_pm1");
  // Period of sqrt(delta) + floor(sqrt(delta)) is (2 a0, a1, ..., a_{l-1});
  // the convergent of sqrt(delta) over [a0, a1, ..., a_{l-1}] is the
  // fundamental solution, with sign (-1)^l.
  Int a0 = isqrt(delta);
  CFExpansion exp = sqrt_plus_floor(delta);
  const auto& period = exp.period.digits;
  CFWord head;
  head.digits.push_back(a0);
  head.digits.insert(head.digits.end(), period.begin() + 1, period.end());
  Rational conv = eval_finite(head);
  PellSolution sol;
  sol.x = conv.num;
  sol.y = conv.den;
  sol.rhs = period.size() % 2 == 0 ? 1 : -1;
  if (sol.x * sol.x - delta * sol.y * sol.y != sol.rhs) {
    throw std::logic_error("fundamental_pm1: convergent check failed");
  }
  return sol;
}

PellSolution fundamental_pm4(const Int& delta) {
  require_nonsquare(delta, "fundamental_pm4");
  PellSolution one = fundamental_pm1(delta);
  // A proper +-4 solution u with u^3 = fundamental +-1 unit satisfies
  // x^3 - 3 s x = 2 x1 where s = N(u) = +-1; then y^2 = (x^2 - 4s)/delta.
  for (int s : {1, -1}) {
    Int target = 2 * one.x;
    Int x = icbrt(target);
    for (Int cand = x - 1; cand <= x + 2; ++cand) {
      if (cand < 1) continue;
      if (cand * cand * cand - 3 * s * cand != target) continue;
      Int y2num = cand * cand - 4 * s;
      if (y2num <= 0 || y2num % delta != 0) continue;
      Int y2 = y2num / delta;
      if (!is_perfect_square(y2)) continue;
      Int y = isqrt(y2);
      if (y == 0) continue;
      // A cube root of the fundamental +-1 unit is the fundamental +-4 unit.
      return {cand, y, 4 * s};
    }
  }
  return {2 * one.x, 2 * one.y, 4 * one.rhs};
}

UnitMatrix unit_matrix(const Int& delta) {
  require_nonsquare(delta, "unit_matrix");
  auto split = squarefree_split(delta);
  PellSolution u = fundamental_pm4(split.delta);
  int norm = u.rhs / 4;
  // Companion matrix of multiplication by (x + y sqrt(delta'))/2 in the
  // basis {1, u}: (0, -N(u); 1, Tr(u)).
  Mat2 base(0, -norm, 1, u.x);
  if (split.k == 1) return {base, split.delta, 1};
  // u^n = (x_n + w_n sqrt(delta'))/2; find the least n with k | w_n.
  Int xn = u.x, wn = u.y;
  for (unsigned n = 1; n <= 1'000'000; ++n) {
    if (wn % split.k == 0) return {base.pow(n), split.delta, n};
    Int x_next = (u.x * xn + split.delta * u.y * wn) / 2;
    Int w_next = (u.x * wn + u.y * xn) / 2;
    xn = x_next;
    wn = w_next;
  }
  throw std::runtime_error("unit_matrix: no power with divisible y-part found");
}

std::vector<Int> trace_solutions(const Int& delta, unsigned count) {
  if (count < 1) throw std::domain_error("trace_solutions: count must be >= 1");
  UnitMatrix um = unit_matrix(delta);
  std::vector<Int> traces;
  traces.reserve(count);
  Mat2 power = um.U;
  for (unsigned n = 1; n <= count; ++n) {
    Int t = power.trace();
    bool ok = false;
    for (int rhs : {4, -4}) {
      Int num = t * t - rhs;
      if (num >= 0 && num % delta == 0 && is_perfect_square(num / delta)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::logic_error("trace_solutions: trace fails the Pell equation");
    }
    traces.push_back(t);
    power = power * um.U;
  }
  return traces;
}

}  // namespace pcf
