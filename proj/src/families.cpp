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

#include "pcf/families.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "pcf/pell.hpp"

namespace pcf {

using boost::multiprecision::gcd;

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::MN: return "mn";
    case Provenance::SuitesIjM: return "suites-ijm";
    case Provenance::SuiteSym: return "suite-sym";
    case Provenance::Suite12s: return "suite-12s";
    case Provenance::Wilson: return "wilson";
    case Provenance::Zaremba: return "zaremba";
  }
  return "?";
}

namespace {

CFWord slice(const CFWord& w, std::size_t lo, std::size_t hi) {
  return CFWord{std::vector<Int>(w.digits.begin() + lo, w.digits.begin() + hi)};
}

bool in_monoid_or_identity(const Mat2& m) {
  if (m.is_identity()) return true;
  Int det = m.det();
  if (det != 1 && det != -1) return false;
  return is_positive(m);
}

}  // namespace

CFWord family_word(const FamilySpec& spec, unsigned n) {
  CFWord c_used = spec.transpose_C ? spec.C_word.reversed() : spec.C_word;
  CFWord raw = spec.B_word + spec.A_word.repeated(n) + c_used +
               spec.A_word.reversed().repeated(n);
  return canonical_rotation(normalize(raw));
}

FamilySpec mn_construct(const Mat2& m_in, const Mat2& n_in) {
  if (!m_in.is_symmetric() || !n_in.is_symmetric()) {
    throw std::domain_error("mn_construct: M and N must be symmetric");
  }
  if (!in_monoid_or_identity(m_in) || !in_monoid_or_identity(n_in)) {
    throw std::domain_error("mn_construct: M and N must be in the monoid");
  }
  if (m_in.det() != -1 && n_in.det() != -1) {
    throw std::domain_error("mn_construct: one of M, N must have det -1");
  }
  // Reduce to Det(M) = -1; otherwise transpose everything, which swaps the
  // roles: t(MN) = N M with both factors symmetric.
  Mat2 M = m_in, N = n_in;
  if (M.det() != -1) std::swap(M, N);

  Mat2 A = M * N;
  if (A.is_identity() || !is_positive(A)) {
    throw std::domain_error("mn_construct: A = MN must be a positive matrix");
  }
  CFWord a_word = factorize(A);
  FieldInfo fa = discr_and_field(A);
  const Mat2 S0 = s0_matrix();

  for (unsigned k = 3; k <= 24; ++k) {
    Mat2 Hk = M * S0 + A.pow(2 * k);
    if (Hk.det() != 0) {
      throw std::logic_error("mn_construct: H_k is not of rank 1");
    }
    if (!(0 <= Hk.a && Hk.a <= Hk.b && Hk.b <= Hk.d && Hk.a <= Hk.c &&
          Hk.c <= Hk.d)) {
      continue;
    }
    Rank1Factorization rf = rank1_factor(Hk);
    if (rf.p_word.empty() || rf.q_word.empty()) continue;
    Int i = rf.p_word.digits.back();
    Int j = rf.q_word.digits.front();
    if (i < 2 || j < 2) continue;

    Mat2 F = word_to_matrix(slice(rf.p_word, 0, rf.p_word.size() - 1));
    Mat2 G = word_to_matrix(slice(rf.q_word, 1, rf.q_word.size()));
    const Int& e = rf.e;

    CFWord b_core = G.det() == 1 ? CFWord{j - 1, 1, e - 1, j}
                                 : CFWord{j, e - 1, 1, j - 1};
    CFWord c_core = F.det() == 1 ? CFWord{i - 1, 1, e - 1, i}
                                 : CFWord{i, e - 1, 1, i - 1};
    Mat2 B = G.transposed() * word_to_matrix(b_core) * G;
    Mat2 C = F * word_to_matrix(c_core) * F.transposed();
    if (!is_positive(B) || !is_positive(C)) continue;

    FamilySpec spec;
    spec.B_word = factorize(B);
    spec.C_word = factorize(C);
    spec.A_word = a_word;
    spec.transpose_C = false;
    spec.field = fa.field;
    spec.max_digit_bound = 2 * a_word.max_digit() + 1;
    spec.provenance = Provenance::MN;

    if (spec.B_word.max_digit() > spec.max_digit_bound ||
        spec.C_word.max_digit() > spec.max_digit_bound) {
      throw std::logic_error("mn_construct: 2m+1 digit bound violated");
    }

    // Certification: trace ladder, discriminant factorization, field
    // constancy and non-triviality for n = 0..4.
    std::vector<QuadraticSurd> values;
    for (unsigned n = 0; n <= 4; ++n) {
      Mat2 an = A.pow(n);
      Mat2 ank = A.pow(n + 2 * k);
      if ((Hk * an).trace() != ank.trace()) {
        throw std::logic_error("mn_construct: trace ladder failed");
      }
      Mat2 prod = B * an * C * an.transposed();
      Int want = ank.trace() * ank.trace() * discriminant(ank);
      if (discriminant(prod) != want) {
        throw std::logic_error("mn_construct: discriminant factorization failed");
      }
      FieldInfo fp = discr_and_field(prod);
      if (fp.field != fa.field) {
        std::ostringstream os;
        os << "mn_construct: certification failure at n=" << n << " (field "
           << fp.field << " != " << fa.field << ")";
        throw std::logic_error(os.str());
      }
      values.push_back(eval_periodic(family_word(spec, n)));
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      throw std::logic_error("mn_construct: family instances not distinct");
    }
    return spec;
  }
  throw std::domain_error(
      "mn_construct: no admissible k <= 24 with boundary exponents >= 2");
}

FamilySpec mn_from_seed(const CFWord& seed) {
  if (seed.empty()) throw std::domain_error("mn_from_seed: empty seed");
  for (const Int& d : seed.digits) {
    if (d < 1) throw std::domain_error("mn_from_seed: digits must be >= 1");
  }
  CFWord tail = slice(seed, 1, seed.size());
  if (!tail.is_palindrome()) {
    throw std::domain_error("mn_from_seed: seed is not quasi-palindromic");
  }
  return mn_construct(Mat2::generator(seed.digits.front()),
                      word_to_matrix(tail));
}

namespace {

CertifiedWord finish_template(CFWord raw, const Int& predicted_discr,
                              const char* who) {
  CFWord word = canonical_rotation(normalize(raw));
  Int predicted = squarefree_split(predicted_discr).delta;
  FieldInfo fi = discr_and_field(word_to_matrix(word));
  if (fi.field != predicted) {
    std::ostringstream os;
    os << who << ": template field " << fi.field
       << " does not match predicted " << predicted;
    throw std::logic_error(os.str());
  }
  return {word, fi.field};
}

}  // namespace

CertifiedWord suites_ijM(const Int& i, const Int& j, const CFWord& pattern,
                         unsigned n, IjmTemplate variant) {
  if (i < 1) throw std::domain_error("suites_ijM: i must be >= 1");
  if (variant != IjmTemplate::PlainPowers && j < 1) {
    throw std::domain_error("suites_ijM: j must be >= 1");
  }
  if (variant == IjmTemplate::WithPattern && !pattern.is_palindrome()) {
    throw std::domain_error("suites_ijM: pattern must be a palindrome");
  }
  for (const Int& d : pattern.digits) {
    if (d < 1) throw std::domain_error("suites_ijM: pattern digits must be >= 1");
  }

  const bool even = (i % 2 == 0);
  CFWord head = even ? CFWord{i / 2 - 1, 1, 1, i / 2}
                     : CFWord{(i - 1) / 2, 1, 3, (i - 1) / 2};
  CFWord raw;
  Int predicted;
  switch (variant) {
    case IjmTemplate::PlainPowers: {
      CFWord rep{i};
      CFWord mid = even ? CFWord{i - 1, 1, 1, i} : CFWord{i + 1, i - 1};
      raw = head + rep.repeated(n) + mid + rep.repeated(n);
      predicted = i * i + 4;
      break;
    }
    case IjmTemplate::WithJ: {
      CFWord rep1{j, i}, rep2{i, j};
      CFWord mid = even ? CFWord{j - 1, 1, 1, j} : CFWord{j + 1, j - 1};
      raw = head + rep1.repeated(n) + mid + rep2.repeated(n);
      predicted = (i * j) * (i * j) + 4 * i * j;
      break;
    }
    case IjmTemplate::WithPattern: {
      CFWord jw{j};
      CFWord rep1 = jw + pattern + CFWord{j, i};
      CFWord rep2 = CFWord{i, j} + pattern + jw;
      CFWord mid = even
          ? jw + pattern + CFWord{j - 1, 1, 1, j} + pattern + jw
          : jw + pattern + CFWord{j + 1, j - 1} + pattern + jw;
      raw = head + rep1.repeated(n) + mid + rep2.repeated(n);
      predicted = discriminant(word_to_matrix(jw + pattern + CFWord{j, i}));
      break;
    }
    default:
      throw std::domain_error("suites_ijM: unknown template");
  }
  return finish_template(std::move(raw), predicted, "suites_ijM");
}

CertifiedWord suite_sym(const CFWord& pattern, unsigned n) {
  if (!pattern.is_palindrome()) {
    throw std::domain_error("suite_sym: pattern must be a palindrome");
  }
  for (const Int& d : pattern.digits) {
    if (d < 1) throw std::domain_error("suite_sym: pattern digits must be >= 1");
  }
  const CFWord block{1, 1, 2, 1, 1};
  CFWord rep1 = pattern + block;
  CFWord rep2 = block + pattern;
  CFWord raw = CFWord{2, 1, 1, 1} + rep1.repeated(n) + pattern +
               CFWord{1, 2, 1, 1, 1, 1} + pattern + rep2.repeated(n);
  Int predicted = discriminant(word_to_matrix(pattern + block));
  return finish_template(std::move(raw), predicted, "suite_sym");
}

Suite12sResult suite_12s(const Int& delta, unsigned n) {
  if (delta < 2 || is_perfect_square(delta)) {
    throw std::domain_error("suite_12s: delta must be a non-square >= 2");
  }
  PellSolution sol = fundamental_pm1(9 * delta);
  if (sol.rhs == -1) {
    // Square the unit to land on +1.
    Int x = sol.x * sol.x + 9 * delta * sol.y * sol.y;
    Int y = 2 * sol.x * sol.y;
    sol = {x, y, 1};
  }
  Int s = 3 * sol.y * sol.y * delta - 1;
  Int discr6 = discriminant(word_to_matrix(CFWord{1, 1, 2, 1, 1, s}));
  if (discr6 != 48 * (s + 1) * (3 * s + 4)) {
    throw std::logic_error("suite_12s: discriminant identity failed");
  }
  CertifiedWord cw = suite_sym(CFWord{s}, n);
  Int want = squarefree_split(delta).delta;
  if (cw.field != want) {
    throw std::logic_error("suite_12s: field does not match delta");
  }
  return {s, cw.word, cw.field};
}

CertifiedWord wilson_family(const Int& s, unsigned n, WilsonVariant variant) {
  if (s < 1) throw std::domain_error("wilson_family: s must be >= 1");
  CFWord raw;
  if (variant == WilsonVariant::Original) {
    CFWord rep{s, 1};
    raw = CFWord{s * (s + 4) - 1, 1} + rep.repeated(n) + CFWord{s + 2} +
          rep.repeated(n) + CFWord{s + 1};
  } else {
    CFWord rep1{1, s}, rep2{s, 1};
    raw = CFWord{s, 1, s - 1, s + 1} + rep1.repeated(n) +
          CFWord{1, s + 1, s + 3, 1} + rep2.repeated(n);
  }
  return finish_template(std::move(raw), s * (s + 4), "wilson_family");
}

ZarembaInstance zaremba_to_periodic(const Int& a, const Int& b, const Int& c,
                                    const Int& delta) {
  if (a < 1 || b < 1 || c < 1 || delta < 1) {
    throw std::domain_error("zaremba_to_periodic: inputs must be positive");
  }
  Int eps = c * c - delta * b * b;
  if (eps != 1 && eps != -1) {
    throw std::domain_error("zaremba_to_periodic: c^2 - delta b^2 must be +-1");
  }
  if (gcd(a, c) != 1) {
    throw std::domain_error("zaremba_to_periodic: a and c must be coprime");
  }
  if (a >= c) throw std::domain_error("zaremba_to_periodic: a < c required");

  CFWord full = expand_rational(a, c);
  CFWord ds = slice(full, 1, full.size());  // drop the leading 0
  const std::size_t n = ds.size();

  // The two template words of the periodic construction.
  CFWord w1 = CFWord{1, 1, ds.digits.front() - 1} + slice(ds, 1, n) +
              CFWord{1, 1, ds.digits.back() - 1} + slice(ds, 0, n - 1).reversed();
  CFWord w2;
  if (n == 1) {
    // The two decrement slots coincide for a single-digit expansion.
    w2 = CFWord{1, 1, ds.digits.front() - 2, 1, 1, ds.digits.front()};
  } else {
    w2 = CFWord{1, 1, ds.digits.front() - 1} + slice(ds, 1, n - 1) +
         CFWord{ds.digits.back() - 1, 1, 1} + slice(ds, 0, n).reversed();
  }

  ZarembaInstance out;
  out.a = a;
  out.b = b;
  out.c = c;
  out.delta = delta;
  out.sign = eps == 1 ? -1 : 1;
  out.surd = QuadraticSurd(c - a, b, delta, c);
  Int s(out.sign);
  out.product = Mat2(2 * a * c + s, 2 * c * c, 4 * a * c - 2 * a * a + 2 * s,
                     4 * c * c - 2 * a * c + s);

  CFExpansion exp = expand_surd(out.surd);
  if (!exp.purely_periodic()) {
    throw std::logic_error("zaremba_to_periodic: surd is not purely periodic");
  }
  // The template word is a rotation of a (possibly non-primitive) period of
  // the surd: a power of the reported primitive period when the product
  // matrix happens to be a square.
  auto matches = [&exp](const CFWord& w) {
    if (w.size() % exp.period.size() != 0) return false;
    unsigned reps = static_cast<unsigned>(w.size() / exp.period.size());
    return w == canonical_rotation(exp.period).repeated(reps);
  };
  CFWord n1 = canonical_rotation(normalize(w1));
  CFWord n2 = canonical_rotation(normalize(w2));
  if (matches(n1)) {
    out.word = n1;
  } else if (matches(n2)) {
    out.word = n2;
  } else {
    throw std::logic_error(
        "zaremba_to_periodic: neither template matches the expansion; this "
        "would falsify the theorem at this instance");
  }

  // Cross-checks: the closed-form matrix is conjugate to the word's matrix,
  // has the right field, and fixes (1; x).
  Mat2 wm = word_to_matrix(out.word);
  if (wm.trace() != out.product.trace() || wm.det() != out.product.det()) {
    throw std::logic_error("zaremba_to_periodic: closed-form matrix mismatch");
  }
  Int want_field = squarefree_split(delta).delta;
  if (discr_and_field(out.product).field != want_field) {
    throw std::logic_error("zaremba_to_periodic: closed-form field mismatch");
  }
  QuadraticSurd row1 = QuadraticSurd::from_int(out.product.a) +
                       QuadraticSurd::from_int(out.product.b) * out.surd;
  QuadraticSurd row2 = QuadraticSurd::from_int(out.product.c) +
                       QuadraticSurd::from_int(out.product.d) * out.surd;
  if (row2 != row1 * out.surd) {
    throw std::logic_error("zaremba_to_periodic: (1; x) is not an eigenvector");
  }
  return out;
}

CertifyReport certify_family(const FamilySpec& spec, unsigned n_max,
                             unsigned threads) {
  CertifyReport report;
  report.rows.resize(n_max + 1);
  Int digit_cap = std::max(spec.max_digit_bound, spec.A_word.max_digit());

  auto run_one = [&](unsigned n) {
    CertifyRow row;
    row.n = n;
    row.word = family_word(spec, n);
    row.length = row.word.size();
    FieldInfo fi = discr_and_field(word_to_matrix(row.word));
    row.discr = fi.discr;
    row.field = fi.field;
    row.cofactor = fi.cofactor;
    row.field_ok = fi.field == spec.field;
    row.digits_ok = row.word.max_digit() <= digit_cap;
    return row;
  };

  std::vector<std::string> errors(n_max + 1);
  unsigned nthreads = std::max(1u, std::min<unsigned>(threads, n_max + 1));
  if (nthreads == 1) {
    for (unsigned n = 0; n <= n_max; ++n) {
      try {
        report.rows[n] = run_one(n);
      } catch (const std::exception& e) {
        errors[n] = e.what();
      }
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t]() {
        for (unsigned n = t; n <= n_max; n += nthreads) {
          try {
            report.rows[n] = run_one(n);
          } catch (const std::exception& e) {
            errors[n] = e.what();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  report.ok = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!errors[n].empty()) {
      report.ok = false;
      if (report.failure.empty()) {
        report.failure = "n=" + std::to_string(n) + ": " + errors[n];
      }
      continue;
    }
    const CertifyRow& row = report.rows[n];
    if (!row.field_ok || !row.digits_ok) {
      report.ok = false;
      if (report.failure.empty()) {
        std::ostringstream os;
        os << "n=" << n << (!row.field_ok ? ": field mismatch" : "")
           << (!row.digits_ok ? ": digit bound exceeded" : "");
        report.failure = os.str();
      }
    }
  }
  return report;
}

}  // namespace pcf
