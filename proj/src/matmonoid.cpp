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

#include "pcf/matmonoid.hpp"

#include <cassert>
#include <sstream>

namespace pcf {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Mat2 Mat2::pow(unsigned n) const {
  Mat2 result = identity();
  Mat2 base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "(" << a << " " << b << "; " << c << " " << d << ")";
  return os.str();
}

Mat2 word_to_matrix(const CFWord& word) {
  Mat2 m = Mat2::identity();
  for (const Int& i : word.digits) m = m * Mat2::generator(i);
  return m;
}

bool is_positive(const Mat2& m) {
  Int det = m.det();
  if (det != 1 && det != -1) {
    throw std::domain_error("is_positive: |det| must be 1");
  }
  bool pos = 0 <= m.a && m.a <= m.b && m.b <= m.d && m.a <= m.c && m.c <= m.d &&
             !m.is_identity();
  assert(pos == is_positive_alt(m));
  return pos;
}

bool is_positive_alt(const Mat2& m) {
  return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0 &&
         abs(m.b - m.c) < m.d - m.a;
}

CFWord factorize(const Mat2& m) {
  if (m.is_identity()) return CFWord{};
  if (!is_positive(m)) {
    throw std::domain_error("factorize: matrix is not in the positive monoid");
  }
  CFWord peeled;  // last generator first
  Mat2 cur = m;
  while (!cur.is_identity()) {
    Int i;
    if (cur.a == 0) {
      i = cur.d;  // cur = m(d) since b = c = 1 here
    } else if (cur.c == 0) {
      throw std::domain_error("factorize: matrix is not in the positive monoid");
    } else {
      i = std::min(cur.b / cur.a, cur.d / cur.c);
    }
    if (i < 1) {
      throw std::domain_error("factorize: matrix is not in the positive monoid");
    }
    peeled.digits.push_back(i);
    // cur * m(i)^{-1} with m(i)^{-1} = (-i 1; 1 0).
    cur = Mat2(cur.b - i * cur.a, cur.a, cur.d - i * cur.c, cur.c);
    if (cur.a < 0 || cur.b < 0 || cur.c < 0 || cur.d < 0) {
      throw std::domain_error("factorize: matrix is not in the positive monoid");
    }
  }
  return peeled.reversed();
}

Int discriminant(const Mat2& m) {
  return (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
}

FieldInfo discr_and_field(const Mat2& m) {
  Int discr = discriminant(m);
  if (discr <= 0) {
    throw std::domain_error("discr_and_field: matrix is not real-hyperbolic");
  }
  auto split = squarefree_split(discr);
  return {discr, split.delta, split.k};
}

bool det_sum_identity(const Mat2& p, const Mat2& q) {
  return (p + q).det() == p.det() + q.det() + (p * q.dagger()).trace();
}

namespace {

// Inverse of a modulo m (coprime inputs), in [0, m).
Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = a % m, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && old_r != -1) {
    throw std::logic_error("mod_inverse: inputs not coprime");
  }
  Int inv = old_r == 1 ? old_s : -old_s;
  inv %= m;
  if (inv < 0) inv += m;
  return inv;
}

// Completes a primitive nonnegative column (x; y) to a monoid-or-identity
// matrix (u x; v y), following the case analysis of the rank-1 positivity
// proof. For x >= 2 both Bezout solutions lie in the monoid; the canonical
// one is the one whose word does not end with m(1).
Mat2 complete_column(const Int& x, const Int& y) {
  if (x == 0) {
    if (y != 1) throw std::logic_error("complete_column: non-primitive column");
    return Mat2::identity();
  }
  if (x == 1) return Mat2(0, 1, 1, y);  // m(y); the (1, y-1) variant ends in m(1)
  // The solutions of u y - v x = +-1 with 0 <= u < x, 0 <= v < y.
  Int u_plus = mod_inverse(y, x);
  Int v_plus = (u_plus * y - 1) / x;
  Int u_minus = x - u_plus;
  Int v_minus = (u_minus * y + 1) / x;
  auto last_generator = [](const Int& u, const Int& v, const Int& x_,
                           const Int& y_) {
    if (u == 0) return y_ / v;
    if (v == 0) return x_ / u;
    return std::min(x_ / u, y_ / v);
  };
  if (last_generator(u_plus, v_plus, x, y) >= 2) return Mat2(u_plus, x, v_plus, y);
  return Mat2(u_minus, x, v_minus, y);
}

Int gcd_pair(const Int& a, const Int& b) { return gcd(abs(a), abs(b)); }

}  // namespace

Rank1Factorization rank1_factor(const Mat2& h) {
  if (h.det() != 0) throw std::domain_error("rank1_factor: determinant must be 0");
  if (h == Mat2(0, 0, 0, 0)) throw std::domain_error("rank1_factor: zero matrix");
  if (!(0 <= h.a && h.a <= h.b && h.b <= h.d && h.a <= h.c && h.c <= h.d)) {
    throw std::domain_error("rank1_factor: entry inequalities violated");
  }
  Int e = gcd_pair(gcd_pair(h.a, h.b), gcd_pair(h.c, h.d));
  Mat2 hh(h.a / e, h.b / e, h.c / e, h.d / e);
  // hh = (x; y)(z t) with both factors primitive.
  Int x = gcd_pair(hh.a, hh.b);
  Int y = gcd_pair(hh.c, hh.d);
  Int z = gcd_pair(hh.a, hh.c);
  Int t = gcd_pair(hh.b, hh.d);
  if (x == 0 && y == 0) throw std::logic_error("rank1_factor: zero after gcd");
  if (x == 0) y = 1;
  if (y == 0) throw std::domain_error("rank1_factor: entry inequalities violated");
  if (z == 0) t = 1;
  if (Mat2(x * z, x * t, y * z, y * t) != hh) {
    throw std::logic_error("rank1_factor: rank-1 split failed");
  }
  Rank1Factorization out;
  out.e = e;
  out.P = complete_column(x, y);
  out.Q = complete_column(z, t).transposed();
  if (out.P * Mat2::diag(0, e) * out.Q != h) {
    throw std::logic_error("rank1_factor: reassembly check failed");
  }
  out.p_word = factorize(out.P);
  out.q_word = factorize(out.Q);
  return out;
}

namespace {

// Matches the core block (k, kn+1; kn-1, kn^2) with n >= 2, k >= 1.
bool match_core_block(const Mat2& m, Int& n_out, Int& k_out) {
  if (m.a < 1 || m.b - m.c != 2) return false;
  const Int& k = m.a;
  if ((m.b - 1) % k != 0) return false;
  Int n = (m.b - 1) / k;
  if (n < 2) return false;
  if (m.c != k * n - 1 || m.d != k * n * n) return false;
  n_out = n;
  k_out = k;
  return true;
}

bool try_sym_decomp(const Mat2& b, Mat2& f_out, Int& n_out, Int& k_out) {
  CFWord w;
  try {
    w = factorize(b);
  } catch (const std::domain_error&) {
    return false;
  }
  std::vector<Int> front;  // digits stripped into F
  std::size_t lo = 0, hi = w.size();
  while (true) {
    Mat2 core = word_to_matrix(
        CFWord(std::vector<Int>(w.digits.begin() + lo, w.digits.begin() + hi)));
    Int n, k;
    if (match_core_block(core, n, k)) {
      CFWord fw{std::vector<Int>(front)};
      f_out = word_to_matrix(fw);
      n_out = n;
      k_out = k;
      return true;
    }
    if (hi - lo >= 2 && w.digits[lo] == w.digits[hi - 1]) {
      front.push_back(w.digits[lo]);
      ++lo;
      --hi;
    } else {
      return false;
    }
  }
}

}  // namespace

SymRank1 sym_rank1_decomp(const Mat2& b) {
  Mat2 sum = b + b.transposed();
  if (sum.det() != 0 || sum == Mat2(0, 0, 0, 0)) {
    throw std::domain_error("sym_rank1_decomp: B + tB must have rank 1");
  }
  SymRank1 out;
  if (try_sym_decomp(b, out.F, out.n, out.k)) {
    out.transposed = false;
    return out;
  }
  if (try_sym_decomp(b.transposed(), out.F, out.n, out.k)) {
    out.transposed = true;
    return out;
  }
  throw std::domain_error(
      "sym_rank1_decomp: no F m(n-1,1,k-1,n) tF decomposition found");
}

ScaledH compute_H(const Mat2& b, const Mat2& c) {
  SymRank1 db = sym_rank1_decomp(b);
  SymRank1 dc = sym_rank1_decomp(c);
  Int kl = db.k * dc.k;
  auto split = squarefree_split(kl);
  ScaledH out;
  out.s = split.delta;
  out.r = split.k;
  out.H0 = dc.F * Mat2::generator(dc.n) * Mat2::diag(0, 1) *
           Mat2::generator(db.n) * db.F.transposed();
  // B = N_B + eps_B S0 with eps_B = (c - b)/2 on the off-diagonal.
  Int eps_b = (b.c - b.b) / 2;
  Int eps_c = (c.c - c.b) / 2;
  if (abs(eps_b) != 1 || abs(eps_c) != 1) {
    throw std::logic_error("compute_H: inputs are not N +- S0 shaped");
  }
  out.lambda = (eps_b == eps_c) ? -2 : 2;
  if (out.s == 1) {
    // Integral H: spot-check the trace identity on a few fixed matrices.
    Mat2 h = out.H0 * out.r;
    for (const Mat2& a :
         {Mat2::identity(), Mat2(1, 2, 3, 4), Mat2(0, -1, 5, 2), Mat2(7, 3, 2, 1)}) {
      Int lhs = (b * a * c * a.transposed()).trace();
      Int tha = (h * a).trace();
      if (lhs != tha * tha + out.lambda * a.det()) {
        throw std::logic_error("compute_H: trace identity check failed");
      }
    }
  }
  return out;
}

Mat2 find_S(const Mat2& a) {
  if (!is_positive(a)) {
    throw std::domain_error("find_S: A must be a positive matrix");
  }
  CFWord w = factorize(a);
  const std::size_t n = w.size();
  // Longest symmetric prefix first, so the shortest N (and simplest S) wins.
  for (std::size_t cut = n + 1; cut-- > 0;) {
    CFWord left{std::vector<Int>(w.digits.begin(), w.digits.begin() + cut)};
    CFWord right{std::vector<Int>(w.digits.begin() + cut, w.digits.end())};
    if (!left.is_palindrome() || !right.is_palindrome()) continue;
    Mat2 s = s0_matrix() * word_to_matrix(right);
    if (s.trace() == 0 && (s * a).trace() == 0) return s;
  }
  if (a.b != 0 && (a.d - a.a) % a.b == 0) {
    Mat2 s(1, 0, (a.d - a.a) / a.b, -1);
    if (s.trace() == 0 && (s * a).trace() == 0) return s;
  }
  throw std::domain_error("find_S: no integral S by this construction");
}

Mat2 h_from_s(const Mat2& s, const Mat2& a, unsigned b) {
  Int det_s = s.det();
  if (det_s != 1 && det_s != -1) {
    throw std::domain_error("h_from_s: S must be in GL2(Z)");
  }
  Mat2 ab = a.pow(b);
  if (det_s != -ab.det()) {
    throw std::domain_error("h_from_s: Det(S) = -Det(A^b) violated");
  }
  if (s.trace() != 0) throw std::domain_error("h_from_s: Tr(S) != 0");
  if ((s * a).trace() != 0) throw std::domain_error("h_from_s: Tr(SA) != 0");
  Mat2 h = s + ab;
  if (h.det() != 0) {
    throw std::logic_error("h_from_s: H = S + A^b is not of rank 1");
  }
  return h;
}

}  // namespace pcf
