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

#ifndef PCF_PELL_HPP
#define PCF_PELL_HPP

#include <vector>

#include "pcf/matmonoid.hpp"

namespace pcf {

struct PellSolution {
  Int x;
  Int y;
  int rhs;  // one of +1, -1, +4, -4: x^2 - delta y^2 = rhs
};

/// Minimal positive solution of x^2 - delta y^2 = +-1, from the period of
/// the continued fraction of sqrt(delta). Domain error on perfect squares.
PellSolution fundamental_pm1(const Int& delta);

/// Minimal positive solution of x^2 - delta y^2 = +-4. Proper half-integer
/// units (x, y odd) exist only for delta = 5 mod 8 and are recovered as the
/// cube root of the fundamental +-1 unit; otherwise the doubled +-1 solution
/// is minimal.
PellSolution fundamental_pm4(const Int& delta);

/// Companion matrix of the fundamental +-4 unit of the squarefree part
/// delta' of delta, raised to the smallest power whose y-part is divisible
/// by the cofactor k (delta = k^2 delta'). Its trace powers enumerate the
/// positive x-solutions of x^2 - delta y^2 = +-4.
struct UnitMatrix {
  Mat2 U;
  Int delta;       // squarefree field tag (delta')
  unsigned power;  // power of the base companion matrix used
};

UnitMatrix unit_matrix(const Int& delta);

/// [Tr(U^1), ..., Tr(U^count)], each verified exactly to solve
/// x^2 - delta y^2 = +-4 with integral y.
std::vector<Int> trace_solutions(const Int& delta, unsigned count);

}  // namespace pcf

#endif  // PCF_PELL_HPP
