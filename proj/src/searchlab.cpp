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

#include "pcf/searchlab.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "pcf/pell.hpp"

namespace pcf {

using boost::multiprecision::gcd;

namespace {

// DFS over digit strings d1..dk with di in [1, m], denominator continuant
// equal to q. first_lo/first_hi restrict the first digit; last_must (0 =
// free) pins the final digit. on_hit(p, word) returns true to stop.
// Returns true when stopped by a hit; false on exhaustion or budget.
template <typename T, typename OnHit>
bool dfs_continuants(const T& q, int m, int first_lo, int first_hi,
                     int last_must, std::uint64_t& budget,
                     std::vector<int>& word, OnHit&& on_hit) {
  struct Frame {
    T qprev, qcur, pprev, pcur;
  };
  // Recursive lambda over (qprev, qcur, pprev, pcur).
  auto rec = [&](auto&& self, const T& qprev, const T& qcur, const T& pprev,
                 const T& pcur, int depth) -> int {
    int lo = depth == 0 ? first_lo : 1;
    int hi = depth == 0 ? first_hi : m;
    for (int d = lo; d <= hi; ++d) {
      if (budget == 0) return -1;
      --budget;
      T qnext = T(d) * qcur + qprev;
      if (qnext > q) break;  // ascending digits: larger d only grows
      T pnext = T(d) * pcur + pprev;
      word.push_back(d);
      if (qnext == q) {
        if (last_must == 0 || d == last_must) {
          if (on_hit(pnext, word)) {
            word.pop_back();
            return 1;
          }
        }
      } else {
        int r = self(self, qcur, qnext, pcur, pnext, depth + 1);
        if (r != 0) {
          word.pop_back();
          return r;
        }
      }
      word.pop_back();
    }
    return 0;
  };
  return rec(rec, T(0), T(1), T(1), T(0), 0) == 1;
}

bool fits_u64(const Int& q, int m) {
  static const Int cap = (Int(1) << 62);
  return q * (m + 1) < cap;
}

// Admissibility of p/q at bound m: one of the two expansions stays within
// the bound, i.e. all digits but the last are <= m and the last is <= m+1.
bool admissible(const Int& p, const Int& q, const Int& m) {
  CFWord w = expand_rational(p, q);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w.digits[i] > m) return false;
  }
  return w.size() < 2 || w.digits.back() <= m + 1;
}

}  // namespace

ZarembaResult zaremba_search(const Int& q, const Int& m) {
  if (q < 2) throw std::domain_error("zaremba_search: q must be >= 2");
  if (m < 1 || m > 100000) {
    throw std::domain_error("zaremba_search: m must be in [1, 100000]");
  }
  ZarembaResult res;
  res.q = q;
  res.m = m;
  res.constrained = false;
  int mi = m.convert_to<int>();
  std::uint64_t budget = UINT64_MAX;
  std::vector<int> word;
  auto record = [&](const auto& p, const std::vector<int>& w) {
    res.p = Int(p);
    CFWord cw;
    for (int d : w) cw.digits.push_back(d);
    res.word = cw;
    return true;
  };
  bool found;
  if (fits_u64(q, mi)) {
    std::uint64_t qq = q.convert_to<std::uint64_t>();
    found = dfs_continuants<std::uint64_t>(qq, mi, 1, mi, 0, budget, word, record);
  } else {
    found = dfs_continuants<Int>(q, mi, 1, mi, 0, budget, word, record);
  }
  if (found && !admissible(*res.p, q, m)) {
    throw std::logic_error("zaremba_search: found word fails the re-check");
  }
  return res;
}

std::vector<Int> zaremba_all_numerators(const Int& q, const Int& m) {
  if (q < 2) throw std::domain_error("zaremba_all_numerators: q must be >= 2");
  std::vector<Int> out;
  for (Int p = 1; p < q; ++p) {
    if (gcd(p, q) != 1) continue;
    if (admissible(p, q, m)) out.push_back(p);
  }
  return out;
}

ZarembaResult zaremba_constrained(const Int& q) {
  if (q < 2) throw std::domain_error("zaremba_constrained: q must be >= 2");
  ZarembaResult res;
  res.q = q;
  res.m = 2;
  res.constrained = true;
  std::uint64_t budget = UINT64_MAX;
  std::vector<int> word;
  auto record = [&](const auto& p, const std::vector<int>& w) {
    res.p = Int(p);
    CFWord cw;
    for (int d : w) cw.digits.push_back(d);
    res.word = cw;
    return true;
  };
  // Single-digit [2] is both first and last digit 2.
  if (fits_u64(q, 2)) {
    std::uint64_t qq = q.convert_to<std::uint64_t>();
    dfs_continuants<std::uint64_t>(qq, 2, 2, 2, 2, budget, word, record);
  } else {
    dfs_continuants<Int>(q, 2, 2, 2, 2, budget, word, record);
  }
  return res;
}

namespace {

struct WitnessHit {
  Int a;
  CFWord word;
};

// {1,2}-words packed two bits... one bit per digit (digit = 1 + bit).
struct PackedWord {
  std::uint64_t lo = 0, hi = 0;
  std::uint8_t len = 0;

  bool push(int digit) {
    if (len >= 128) return false;
    if (digit == 2) {
      if (len < 64) {
        lo |= std::uint64_t(1) << len;
      } else {
        hi |= std::uint64_t(1) << (len - 64);
      }
    }
    ++len;
    return true;
  }
  void pop() {
    --len;
    if (len < 64) {
      lo &= ~(std::uint64_t(1) << len);
    } else {
      hi &= ~(std::uint64_t(1) << (len - 64));
    }
  }
  int digit(int i) const {
    bool two = i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    return two ? 2 : 1;
  }
  std::vector<int> digits() const {
    std::vector<int> out(len);
    for (int i = 0; i < len; ++i) out[i] = digit(i);
    return out;
  }
};

template <typename T>
struct MitmOps;

template <>
struct MitmOps<std::uint64_t> {
  static std::uint64_t sqrt_floor(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
  }
  static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m);
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
      std::int64_t q = old_r / r;
      std::int64_t t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_s - q * s;
      old_s = s;
      s = t;
    }
    old_s %= static_cast<std::int64_t>(m);
    if (old_s < 0) old_s += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(old_s);
  }
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                              std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
  }
};

template <>
struct MitmOps<Int> {
  static Int sqrt_floor(const Int& n) { return isqrt(n); }
  static Int inverse_mod(const Int& a, const Int& m) {
    Int old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
      Int q = old_r / r;
      Int t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_s - q * s;
      old_s = s;
      s = t;
    }
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
  }
  static Int mulmod(const Int& a, const Int& b, const Int& m) {
    return a * b % m;
  }
};

enum class MitmStatus { Done, BudgetExhausted, Capped };

// Meet-in-the-middle enumeration of {1,2}-words w with continuant c and
// last digit 2, via the split c = K(u)K(v) + K(u-)K(v-) at the unique
// prefix u whose continuant first reaches sqrt(c). Candidate numerators are
// handed to on_hit in a deterministic order (shortest word, then
// lexicographic); on_hit returns true to stop.
template <typename T, typename OnHit>
MitmStatus mitm_continuants(const T& c, std::uint64_t& budget, OnHit&& on_hit) {
  constexpr std::size_t kMaxEntries = 45'000'000;
  struct Entry {
    T y1, y2;
    std::uint64_t bits;
    std::uint8_t len;
  };
  T threshold = MitmOps<T>::sqrt_floor(c);
  if (threshold < 2) threshold = 2;

  // Suffix set: all v with K(v) <= c / threshold and last digit 2, keyed by
  // (K(v), K(v minus first digit)). Suffix words are packed in 64 bits.
  T suffix_bound = c / threshold + 1;
  std::vector<Entry> suffixes;
  MitmStatus status = MitmStatus::Done;
  {
    PackedWord w;
    auto rec = [&](auto&& self, const T& qprev, const T& qcur, const T& pprev,
                   const T& pcur) -> void {
      if (status != MitmStatus::Done) return;
      for (int d = 1; d <= 2; ++d) {
        if (budget == 0) {
          status = MitmStatus::BudgetExhausted;
          return;
        }
        if (suffixes.size() >= kMaxEntries || w.len >= 64) {
          status = MitmStatus::Capped;
          return;
        }
        --budget;
        T qnext = T(d) * qcur + qprev;
        if (qnext > suffix_bound) break;
        T pnext = T(d) * pcur + pprev;
        w.push(d);
        if (d == 2) suffixes.push_back({qnext, pnext, w.lo, w.len});
        self(self, qcur, qnext, pcur, pnext);
        w.pop();
        if (status != MitmStatus::Done) return;
      }
    };
    rec(rec, T(0), T(1), T(1), T(0));
    if (status != MitmStatus::Done) return status;
  }
  std::sort(suffixes.begin(), suffixes.end(),
            [](const Entry& a, const Entry& b) {
              if (a.y1 != b.y1) return a.y1 < b.y1;
              return a.y2 < b.y2;
            });

  // Prefix walk: stop extending once the continuant reaches the threshold;
  // each crossing (x1, x2) contributes O(1) modular candidates y1 with
  // x1 y1 + x2 y2 = c.
  struct Match {
    PackedWord w;
  };
  std::vector<Match> matches;
  {
    PackedWord w;
    auto probe = [&](const T& x1, const T& x2, const PackedWord& u) {
      if (x1 >= c) {
        if (x1 == c && u.len > 0 && u.digit(u.len - 1) == 2) {
          matches.push_back({u});
        }
        return;
      }
      // y1 = c * x1^{-1} mod x2 (x1, x2 coprime), then step by x2.
      T y1 = x2 == 1
                 ? T(1)
                 : MitmOps<T>::mulmod(MitmOps<T>::inverse_mod(x1 % x2, x2),
                                      c % x2, x2);
      if (y1 == 0) y1 = x2;
      for (; x1 * y1 <= c; y1 += x2) {
        if (budget == 0) {
          status = MitmStatus::BudgetExhausted;
          return;
        }
        --budget;
        T y2 = (c - x1 * y1) / x2;
        auto lo = std::lower_bound(
            suffixes.begin(), suffixes.end(), std::make_pair(y1, y2),
            [](const Entry& e, const std::pair<T, T>& key) {
              if (e.y1 != key.first) return e.y1 < key.first;
              return e.y2 < key.second;
            });
        for (auto it = lo; it != suffixes.end() && it->y1 == y1 && it->y2 == y2;
             ++it) {
          PackedWord full = w;
          bool fits = true;
          for (int i = 0; i < it->len && fits; ++i) {
            fits = full.push((it->bits >> i) & 1 ? 2 : 1);
          }
          if (fits) matches.push_back({full});
        }
      }
    };
    auto rec = [&](auto&& self, const T& qprev, const T& qcur, const T& pprev,
                   const T& pcur) -> void {
      if (status != MitmStatus::Done) return;
      for (int d = 1; d <= 2; ++d) {
        if (budget == 0) {
          status = MitmStatus::BudgetExhausted;
          return;
        }
        --budget;
        T qnext = T(d) * qcur + qprev;
        if (qnext > c) break;
        T pnext = T(d) * pcur + pprev;
        if (!w.push(d)) {
          status = MitmStatus::Capped;
          return;
        }
        if (qnext >= threshold) {
          probe(qnext, qcur, w);
        } else {
          self(self, qcur, qnext, pcur, pnext);
        }
        w.pop();
        if (status != MitmStatus::Done) return;
      }
    };
    rec(rec, T(0), T(1), T(1), T(0));
    if (status != MitmStatus::Done) return status;
  }

  std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    if (a.w.len != b.w.len) return a.w.len < b.w.len;
    for (int i = 0; i < a.w.len; ++i) {
      if (a.w.digit(i) != b.w.digit(i)) return a.w.digit(i) < b.w.digit(i);
    }
    return false;
  });
  for (const Match& match : matches) {
    // Recompute both continuants; the denominator must equal c exactly.
    T qprev = 0, qcur = 1, pprev = 1, pcur = 0;
    for (int i = 0; i < match.w.len; ++i) {
      T d(match.w.digit(i));
      T qnext = d * qcur + qprev;
      T pnext = d * pcur + pprev;
      qprev = qcur;
      qcur = qnext;
      pprev = pcur;
      pcur = pnext;
    }
    if (qcur != c) continue;  // stale collision, cannot be a real word
    if (on_hit(pcur, match.w.digits())) return MitmStatus::Done;
  }
  return MitmStatus::Done;
}

// For a single Pell pair (b, c) of delta, enumerate candidate numerators
// over the {1,2} alphabet (canonical last digit 2) and test each through
// the periodic construction; the single-digit expansion a = 1 is probed
// separately since its alphabet is unconstrained. Returns the first
// witness, if any, plus the enumeration status.
std::pair<std::optional<WitnessHit>, MitmStatus> conj12_scan_pell(
    const Int& delta, const Int& b, const Int& c, std::uint64_t& budget) {
  std::optional<WitnessHit> hit;
  auto test_numerator = [&](const Int& a) {
    if (a < 1 || a >= c || gcd(a, c) != 1) return false;
    ZarembaInstance inst = zaremba_to_periodic(a, b, c, delta);
    for (const Int& d : inst.word.digits) {
      if (d != 1 && d != 2) return false;
    }
    hit = WitnessHit{a, inst.word};
    return true;
  };
  if (budget > 0) {
    --budget;
    if (c >= 2 && test_numerator(1)) return {hit, MitmStatus::Done};
  }
  auto on_hit = [&](const auto& p_raw, const std::vector<int>&) {
    return test_numerator(Int(p_raw));
  };
  MitmStatus status;
  if (fits_u64(c, 2)) {
    std::uint64_t cc = c.convert_to<std::uint64_t>();
    status = mitm_continuants<std::uint64_t>(cc, budget, on_hit);
  } else {
    status = mitm_continuants<Int>(c, budget, on_hit);
  }
  return {hit, status};
}

nlohmann::ordered_json checkpoint_to_json(const Int& delta_max,
                                          const std::vector<Conj12Row>& rows) {
  nlohmann::ordered_json states = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json st;
    st["delta"] = row.delta.str();
    st["pell_index"] = row.pell_index;
    st["visited"] = row.visited;
    st["resolved"] = row.resolved;
    if (row.resolved) {
      st["a"] = row.a.str();
      st["b"] = row.b.str();
      st["c"] = row.c.str();
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (const Int& d : row.witness.digits) w.push_back(d.convert_to<int>());
      st["word"] = w;
    }
    states.push_back(st);
  }
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["delta_max"] = delta_max.str();
  doc["states"] = states;
  return doc;
}

}  // namespace

Conj12Report verify_conj12(const Int& delta_max, std::uint64_t per_delta_budget,
                           const std::string& checkpoint_path,
                           unsigned threads) {
  if (delta_max < 2) {
    throw std::domain_error("verify_conj12: delta_max must be >= 2");
  }
  // Resume state, keyed by delta.
  std::map<Int, Conj12Row> resume;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    if (in.good()) {
      nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
      if (!doc.is_discarded() && doc.value("version", 0) == 1) {
        for (const auto& st : doc["states"]) {
          Conj12Row row;
          row.delta = Int(st["delta"].get<std::string>());
          row.pell_index = st["pell_index"].get<unsigned>();
          row.visited = st["visited"].get<std::uint64_t>();
          row.resolved = st["resolved"].get<bool>();
          if (row.resolved) {
            row.a = Int(st["a"].get<std::string>());
            row.b = Int(st["b"].get<std::string>());
            row.c = Int(st["c"].get<std::string>());
            for (int d : st["word"]) row.witness.digits.push_back(d);
          }
          resume[row.delta] = row;
        }
      }
    }
  }

  std::vector<Int> deltas;
  for (Int d = 2; d < delta_max; ++d) {
    if (is_perfect_square(d)) continue;
    if (squarefree_split(d).k != 1) continue;
    deltas.push_back(d);
  }

  std::vector<Conj12Row> rows(deltas.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::string first_error;
  auto work = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= deltas.size()) return;
      const Int& delta = deltas[idx];
      try {
      Conj12Row row;
      auto it = resume.find(delta);
      if (it != resume.end()) {
        row = it->second;
        if (row.resolved) {
          rows[idx] = row;
          continue;
        }
      } else {
        row.delta = delta;
      }
      PellSolution fund = fundamental_pm1(delta);
      // (c_i + b_i sqrt(delta)) = (x1 + y1 sqrt(delta))^i.
      Int c = fund.x, b = fund.y;
      for (unsigned i = 2; i <= row.pell_index; ++i) {
        Int c2 = c * fund.x + delta * b * fund.y;
        Int b2 = c * fund.y + b * fund.x;
        c = c2;
        b = b2;
      }
      std::uint64_t budget = per_delta_budget;
      for (unsigned i = row.pell_index; budget > 0; ++i) {
        std::uint64_t before = budget;
        auto [hit, status] = conj12_scan_pell(delta, b, c, budget);
        row.visited += before - budget;
        row.pell_index = i;
        if (hit) {
          row.resolved = true;
          row.a = hit->a;
          row.b = b;
          row.c = c;
          row.witness = hit->word;
          break;
        }
        // A capped scan means larger solutions are out of reach too.
        if (status == MitmStatus::Capped) break;
        if (budget == 0) break;  // ran out mid-scan: resume at this index
        row.pell_index = i + 1;
        Int c2 = c * fund.x + delta * b * fund.y;
        Int b2 = c * fund.y + b * fund.x;
        c = c2;
        b = b2;
      }
      rows[idx] = row;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(err_mutex);
        if (first_error.empty()) first_error = e.what();
        return;
      }
    }
  };

  unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);

  Conj12Report report;
  report.rows = std::move(rows);
  report.all_resolved = true;
  for (const auto& row : report.rows) {
    if (!row.resolved) report.all_resolved = false;
  }
  if (!checkpoint_path.empty()) {
    std::ofstream out(checkpoint_path);
    out << checkpoint_to_json(delta_max, report.rows).dump(2) << "\n";
  }
  return report;
}

DensityReport density_scan(const Int& N, const Int& m, unsigned threads) {
  if (N < 2) throw std::domain_error("density_scan: N must be >= 2");
  if (m < 1) throw std::domain_error("density_scan: m must be >= 1");
  std::atomic<long> squarefree{0}, bounded{0};
  long n_max = N.convert_to<long>();
  std::atomic<long> next{2};
  std::mutex err_mutex;
  std::string first_error;
  auto work = [&]() {
    while (true) {
      long n = next.fetch_add(1);
      if (n > n_max) return;
      try {
        Int delta = Int(n) * Int(n) - 1;
        if (squarefree_split(delta).k != 1) continue;
        squarefree.fetch_add(1);
        ZarembaResult zr = zaremba_search(n, m);
        if (!zr.p) continue;
        ZarembaInstance inst = zaremba_to_periodic(*zr.p, 1, n, delta);
        if (inst.word.max_digit() > m + 1) {
          throw std::logic_error("density_scan: word exceeds the m+1 bound");
        }
        bounded.fetch_add(1);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(err_mutex);
        if (first_error.empty()) first_error = e.what();
        return;
      }
    }
  };
  unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);
  return {N, Int(squarefree.load()), Int(bounded.load()), m};
}

namespace {

// Fibonacci pair (f_n, f_{n+1}) modulo p by fast doubling.
std::pair<std::uint64_t, std::uint64_t> fib_mod(std::uint64_t n,
                                                std::uint64_t p) {
  if (n == 0) return {0, 1 % p};
  auto [a, b] = fib_mod(n / 2, p);
  std::uint64_t c = a * ((2 * b + p - a) % p) % p;
  std::uint64_t d = (a * a + b * b) % p;
  if (n % 2 == 0) return {c, d};
  return {d, (c + d) % p};
}

unsigned padic_valuation(Int v, int p) {
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

FibReport fib_fields(unsigned n_max) {
  if (n_max < 3) throw std::domain_error("fib_fields: n_max must be >= 3");
  FibReport report;
  // f_0 = 0, f_1 = 1; cross-check against powers of the generator m(1),
  // whose n-th power is (f_{n-1} f_n; f_n f_{n+1}).
  std::vector<Int> fib{0, 1};
  for (unsigned n = 2; n <= n_max + 2; ++n) {
    fib.push_back(fib[n - 1] + fib[n - 2]);
  }
  for (unsigned n : {2u, 5u, std::min(n_max, 20u)}) {
    Mat2 mn = Mat2::generator(1).pow(n);
    if (mn.b != fib[n] || mn.a != fib[n - 1] || mn.d != fib[n + 1]) {
      throw std::logic_error("fib_fields: generator-power identity failed");
    }
  }
  for (unsigned n = 3; n <= n_max; ++n) {
    try {
      Int prod = fib[n] * fib[n + 2];
      report.rows.push_back({n, fib[n], fib[n + 2], squarefree_split(prod).delta});
    } catch (const FactoringError& e) {
      report.truncated = true;
      report.notice = std::string("factoring budget exceeded at n=") +
                      std::to_string(n) + ": " + e.what();
      break;
    }
  }
  for (int p : {3, 5, 7, 11, 13}) {
    Int order = Int(p) * p - 1;
    order *= Int(p) * p - p;
    FibDivCheck dc;
    dc.p = p;
    dc.group_order = order;
    dc.divides = fib_mod(order.convert_to<std::uint64_t>(), p).first == 0;
    report.div_checks.push_back(dc);

    // Smallest n with p | f_n, then the valuation step at p*n.
    unsigned n0 = 1;
    while (fib_mod(n0, p).first != 0) ++n0;
    std::vector<Int> f{0, 1};
    for (unsigned i = 2; i <= std::uint64_t(p) * n0 + 1; ++i) {
      f.push_back(f[i - 1] + f[i - 2]);
    }
    FibPadicCheck pc;
    pc.p = p;
    pc.n = n0;
    pc.val = padic_valuation(f[n0], p);
    pc.step_holds = padic_valuation(f[p * n0], p) == pc.val + 1;
    report.padic_checks.push_back(pc);
  }
  return report;
}

}  // namespace pcf
