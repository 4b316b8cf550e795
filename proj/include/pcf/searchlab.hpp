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

#ifndef PCF_SEARCHLAB_HPP
#define PCF_SEARCHLAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcf/families.hpp"

namespace pcf {

struct ZarembaResult {
  Int q;
  Int m;
  std::optional<Int> p;      // numerator, when found
  std::optional<CFWord> word;  // its digit string [a1..an] (p/q = [0, a1..an])
  bool constrained = false;
};

/// Depth-first enumeration over digit strings with digits in [1, m] via the
/// continuant recurrence, pruned when the denominator exceeds q. Digits are
/// tried ascending, so the result is the first hit in DFS order. Absence is
/// a value, not an error.
ZarembaResult zaremba_search(const Int& q, const Int& m);

/// Numerator-first brute force: every admissible p < q coprime to q, in
/// increasing order. The oracle for the DFS (a rational is admissible when
/// one of its two expansions stays within the bound).
std::vector<Int> zaremba_all_numerators(const Int& q, const Int& m);

/// Alphabet {1, 2} with the first and last digits forced to 2.
ZarembaResult zaremba_constrained(const Int& q);

struct Conj12Row {
  Int delta;
  bool resolved = false;
  CFWord witness;          // periodic word with digits in {1, 2}
  Int a, b, c;             // the instance behind the witness
  std::uint64_t visited = 0;  // DFS nodes spent on this delta (cumulative)
  unsigned pell_index = 1;    // next (or successful) Pell solution index
};

struct Conj12Report {
  std::vector<Conj12Row> rows;
  bool all_resolved = false;
};

/// For each squarefree non-square delta < delta_max, walk Pell +-1
/// solutions (b, c) in increasing c and search numerators a < c whose
/// periodic word uses only the digits 1 and 2. Budget exhaustion is
/// recorded as unresolved, never silent. The checkpoint file (JSON,
/// versioned) makes reruns resume where they stopped.
Conj12Report verify_conj12(const Int& delta_max, std::uint64_t per_delta_budget,
                           const std::string& checkpoint_path = "",
                           unsigned threads = 1);

struct DensityReport {
  Int N;
  Int count_squarefree;  // n <= N with n^2 - 1 squarefree
  Int count_bounded;     // of those, n admitting a bounded construction
  Int bound_m;
};

/// Desk-scale version of the density corollary: sieve n <= N for n^2 - 1
/// squarefree, then attempt a Zaremba numerator at bound m and build the
/// periodic word (digits <= m + 1).
DensityReport density_scan(const Int& N, const Int& m, unsigned threads = 1);

struct FibRow {
  unsigned n;
  Int fib_n;
  Int fib_n2;
  Int field;  // squarefree part of fib_n * fib_n2
};

struct FibDivCheck {
  int p;
  Int group_order;  // (p^2 - 1)(p^2 - p)
  bool divides;     // p | f_order
};

struct FibPadicCheck {
  int p;
  unsigned n;      // smallest index with p | f_n
  unsigned val;    // p-adic valuation of f_n
  bool step_holds;  // valuation of f_{pn} is val + 1
};

struct FibReport {
  std::vector<FibRow> rows;
  std::vector<FibDivCheck> div_checks;
  std::vector<FibPadicCheck> padic_checks;
  bool truncated = false;
  std::string notice;
};

/// Fibonacci fields Q[sqrt(f_n f_{n+2})] for n = 3..n_max, with the
/// generator-power identity cross-checked and the prime-divisibility
/// properties verified for p in {3, 5, 7, 11, 13}.
FibReport fib_fields(unsigned n_max);

}  // namespace pcf

#endif  // PCF_SEARCHLAB_HPP
