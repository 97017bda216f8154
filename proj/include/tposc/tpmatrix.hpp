// Copyright 2026 The tposc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Total positivity in SL_n over exact rationals.
//
// W(A_{n-1}) is identified with S_n: s_i swaps i and i+1, and a word
// s_{i_1} ... s_{i_m} is the composite permutation applied right to left.
// The generalized minor Delta_{u omega_i, v omega_i} is the ordinary minor
// on rows u({1..i}) and columns v({1..i}), both in increasing order.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tposc/cartan.hpp"
#include "tposc/hecke.hpp"
#include "tposc/matrix.hpp"
#include "tposc/rational.hpp"
#include "tposc/weyl.hpp"

namespace tposc {

// ----------------------------------------------------------------------------
// Type-A bridge

/// Cartan data of A_{n-1}, the Weyl group of SL_n.
inline CartanData type_a(int n) {
  if (n < 2) throw std::invalid_argument("SL_n needs n >= 2");
  return cartan_matrix(DynkinType{Family::A, n - 1});
}

inline void require_type_a(const CartanData& c, int n) {
  if (c.type() != DynkinType{Family::A, n - 1})
    throw std::invalid_argument("expected Weyl group of type A" + std::to_string(n - 1) + ", got " + c.type().name());
}

/// One-line notation (1-based values) of w in S_{r+1}.
inline std::vector<int> to_permutation(const WeylElement& w) {
  if (w.cartan().type().family != Family::A) throw std::invalid_argument("permutation form exists only in type A");
  const int n = w.rank() + 1;
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int l : reduced_word(w)) std::swap(p[l - 1], p[l]);
  return p;
}

inline WeylElement from_permutation(const CartanData& c, std::vector<int> p) {
  const int n = c.rank() + 1;
  if (c.type().family != Family::A || static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size does not match type A rank");
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[k] != k + 1) throw std::invalid_argument("not a permutation");
  Word stripped;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        stripped.push_back(i + 1);
        found = true;
        break;
      }
  }
  std::reverse(stripped.begin(), stripped.end());
  return from_word(c, stripped);
}

/// Sorted set w({1..i}), 1-based.
inline std::vector<int> image_of_initial(const WeylElement& w, int i) {
  std::vector<int> p = to_permutation(w);
  if (i < 0 || i > static_cast<int>(p.size())) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<int> out(p.begin(), p.begin() + i);
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------------------
// Minors

/// Row and column index sets of a minor, 1-based, strictly increasing.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  void validate(int n) const {
    if (rows.empty() || rows.size() != cols.size()) throw std::invalid_argument("minor needs nonempty index sets of equal size");
    for (const auto* set : {&rows, &cols})
      for (std::size_t k = 0; k < set->size(); ++k) {
        const int v = (*set)[k];
        if (v < 1 || v > n) throw std::invalid_argument("minor index " + std::to_string(v) + " out of range");
        if (k > 0 && (*set)[k - 1] >= v) throw std::invalid_argument("minor index sets must be strictly increasing");
      }
  }

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

inline Rational minor(const RationalMatrix& x, const MinorSpec& spec) {
  spec.validate(x.n());
  std::vector<int> r(spec.rows.size()), c(spec.cols.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = spec.rows[k] - 1;
    c[k] = spec.cols[k] - 1;
  }
  return x.block_determinant(r, c);
}

/// Default dimension ceiling for all-minors tests: C(14,7) - 1 = 3431 minors.
inline constexpr int kAllMinorsGuard = 7;

namespace detail {

inline std::uint32_t index_mask(const std::vector<int>& set) {
  std::uint32_t m = 0;
  for (int v : set) m |= 1u << (v - 1);
  return m;
}

inline std::vector<int> mask_indices(std::uint32_t m) {
  std::vector<int> out;
  for (int b = 0; m != 0; ++b, m >>= 1)
    if (m & 1u) out.push_back(b + 1);
  return out;
}

inline void check_guard(int n, int max_n) {
  if (n > max_n) throw std::length_error("all-minors test on n = " + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
}

}  // namespace detail

/// Every minor of x, built level by level by Laplace expansion along the
/// first selected column. A predicate may stop the build after any minor.
class MinorTable {
 public:
  explicit MinorTable(const RationalMatrix& x, int max_n = kAllMinorsGuard) : MinorTable(x, max_n, nullptr) {}

  /// Builds until `keep_going(rowmask, colmask, value)` returns false; the
  /// offending minor is then available from stopped_at().
  MinorTable(const RationalMatrix& x, int max_n, const std::function<bool(std::uint32_t, std::uint32_t, const Rational&)>& keep_going)
      : n_(x.n()) {
    detail::check_guard(n_, max_n);
    const std::uint32_t full = 1u << n_;
    vals_.assign(static_cast<std::size_t>(full) * full, Rational(0));
    vals_[0] = 1;
    for (int k = 1; k <= n_; ++k)
      for (std::uint32_t cm = 1; cm < full; ++cm) {
        if (std::popcount(cm) != k) continue;
        const int c0 = std::countr_zero(cm);
        const std::uint32_t rest = cm & (cm - 1);
        for (std::uint32_t rm = 1; rm < full; ++rm) {
          if (std::popcount(rm) != k) continue;
          Rational det = 0;
          int pos = 0;
          for (std::uint32_t bits = rm; bits != 0; bits &= bits - 1, ++pos) {
            const int r = std::countr_zero(bits);
            const Rational& entry = x(r, c0);
            if (entry == 0) continue;
            const Rational& sub = vals_[at(rm & ~(1u << r), rest)];
            if (pos % 2 == 0)
              det += entry * sub;
            else
              det -= entry * sub;
          }
          vals_[at(rm, cm)] = det;
          if (keep_going && !keep_going(rm, cm, vals_[at(rm, cm)])) {
            stopped_ = MinorSpec{detail::mask_indices(rm), detail::mask_indices(cm)};
            return;
          }
        }
      }
  }

  int n() const { return n_; }
  const Rational& value(std::uint32_t rowmask, std::uint32_t colmask) const { return vals_[at(rowmask, colmask)]; }
  const Rational& value(const MinorSpec& spec) const {
    spec.validate(n_);
    return value(detail::index_mask(spec.rows), detail::index_mask(spec.cols));
  }
  const std::optional<MinorSpec>& stopped_at() const { return stopped_; }

 private:
  std::size_t at(std::uint32_t rm, std::uint32_t cm) const { return (static_cast<std::size_t>(rm) << n_) | cm; }

  int n_ = 0;
  std::vector<Rational> vals_;
  std::optional<MinorSpec> stopped_;
};

/// First negative minor, scanning by size, then column mask, then row mask.
inline std::optional<MinorSpec> tnn_violation(const RationalMatrix& x, int max_n = kAllMinorsGuard) {
  MinorTable t(x, max_n, [](std::uint32_t, std::uint32_t, const Rational& v) { return sgn(v) >= 0; });
  return t.stopped_at();
}

/// First minor that is not strictly positive.
inline std::optional<MinorSpec> tp_violation(const RationalMatrix& x, int max_n = kAllMinorsGuard) {
  MinorTable t(x, max_n, [](std::uint32_t, std::uint32_t, const Rational& v) { return sgn(v) > 0; });
  return t.stopped_at();
}

inline bool is_tnn(const RationalMatrix& x, int max_n = kAllMinorsGuard) { return !tnn_violation(x, max_n); }
inline bool is_tp(const RationalMatrix& x, int max_n = kAllMinorsGuard) { return !tp_violation(x, max_n); }

/// The 2n-1 solid minors touching x_{1n} or x_{n1}: rows {1..k} x cols
/// {n-k+1..n} and rows {n-k+1..n} x cols {1..k}; k = n appears once.
inline std::vector<MinorSpec> corner_solid_minors(int n) {
  std::vector<MinorSpec> out;
  for (int k = 1; k <= n; ++k) {
    MinorSpec upper, lower;
    for (int t = 1; t <= k; ++t) {
      upper.rows.push_back(t);
      upper.cols.push_back(n - k + t);
      lower.rows.push_back(n - k + t);
      lower.cols.push_back(t);
    }
    out.push_back(upper);
    if (k < n) out.push_back(lower);
  }
  return out;
}

/// Total positivity of a matrix already known to be totally nonnegative,
/// from its corner solid minors alone. Debug builds verify the premise.
inline bool is_tp_given_tnn(const RationalMatrix& x) {
#ifndef NDEBUG
  if (x.n() <= kAllMinorsGuard && !is_tnn(x)) throw std::invalid_argument("is_tp_given_tnn called on a matrix that is not TNN");
#endif
  for (const MinorSpec& s : corner_solid_minors(x.n()))
    if (sgn(minor(x, s)) <= 0) return false;
  return true;
}

/// Oscillatory test for a totally nonnegative matrix: every entry just
/// above and just below the diagonal is positive.
inline bool is_oscillatory(const RationalMatrix& x) {
  for (int i = 0; i + 1 < x.n(); ++i)
    if (sgn(x(i, i + 1)) <= 0 || sgn(x(i + 1, i)) <= 0) return false;
  return true;
}

/// Smallest m <= cap with x^m totally positive, by exact powering.
inline std::optional<int> min_tp_power_bruteforce(const RationalMatrix& x, int cap, int max_n = kAllMinorsGuard) {
  detail::check_guard(x.n(), max_n);
  if (cap < x.n() - 1) throw std::invalid_argument("min_tp_power_bruteforce needs cap >= n-1");
  if (!is_tnn(x, max_n)) throw std::invalid_argument("min_tp_power_bruteforce needs a totally nonnegative matrix");
  RationalMatrix p = x;
  for (int m = 1; m <= cap; ++m) {
    if (is_tp(p, max_n)) return m;
    if (m < cap) p = p * x;
  }
  return std::nullopt;
}

// ----------------------------------------------------------------------------
// Elementary factors

/// x_i(t) for unbarred letters, x_{i-bar}(t) for barred ones.
inline RationalMatrix elementary_factor(int n, SignedLetter letter, const Rational& t) {
  if (letter.index < 1 || letter.index > n - 1) throw std::invalid_argument("elementary factor index out of range");
  RationalMatrix m = RationalMatrix::identity(n);
  const int i = letter.index - 1;
  if (letter.barred)
    m(i + 1, i) = t;
  else
    m(i, i + 1) = t;
  return m;
}

/// t^{h_i}: t at position i, 1/t at position i+1.
inline RationalMatrix torus_factor(int n, int i, const Rational& t) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("torus factor index out of range");
  if (t == 0) throw std::invalid_argument("torus factor needs t != 0");
  RationalMatrix m = RationalMatrix::identity(n);
  m(i - 1, i - 1) = t;
  m(i, i) = 1 / t;
  return m;
}

/// a x_{i_1}(t_1) ... x_{i_m}(t_m) with a a positive diagonal of determinant 1.
struct FactorizationInput {
  int n = 2;
  std::vector<Rational> diag;
  SignedWord word;
  std::vector<Rational> params;

  void validate() const {
    if (n < 2) throw std::invalid_argument("factorization needs n >= 2");
    if (static_cast<int>(diag.size()) != n) throw std::invalid_argument("diag must have n entries");
    Rational prod = 1;
    for (const Rational& d : diag) {
      if (sgn(d) <= 0) throw std::invalid_argument("diag entries must be positive");
      prod *= d;
    }
    if (prod != 1) throw std::invalid_argument("diag entries must have product 1");
    if (params.size() != word.size()) throw std::invalid_argument("need exactly one parameter per letter");
    for (const Rational& t : params)
      if (sgn(t) <= 0) throw std::invalid_argument("factorization parameters must be positive");
    for (const SignedLetter& l : word)
      if (l.index < 1 || l.index > n - 1) throw std::invalid_argument("word letter " + std::to_string(l.to_int()) + " out of range");
  }
};

namespace detail {

/// Ordered product without the positivity/determinant checks, so limits at
/// t = 0 can be evaluated.
inline RationalMatrix eval_product(int n, const std::vector<Rational>& diag, const SignedWord& word, const std::vector<Rational>& params) {
  RationalMatrix x = RationalMatrix::diagonal(diag);
  for (std::size_t k = 0; k < word.size(); ++k) {
    // Right multiplication by an elementary factor is a column operation.
    const int i = word[k].index - 1;
    const Rational& t = params[k];
    if (t == 0) continue;
    if (word[k].barred) {
      for (int r = 0; r < n; ++r) x(r, i) += t * x(r, i + 1);
    } else {
      for (int r = 0; r < n; ++r) x(r, i + 1) += t * x(r, i);
    }
  }
  return x;
}

}  // namespace detail

inline RationalMatrix eval_factorization(const FactorizationInput& in) {
  in.validate();
  return detail::eval_product(in.n, in.diag, in.word, in.params);
}

// ----------------------------------------------------------------------------
// Generalized minors

struct GenMinorSpec {
  WeylElement u;
  WeylElement v;
  int i = 1;

  MinorSpec realize() const {
    if (!(u.cartan() == v.cartan())) throw std::invalid_argument("generalized minor needs a common Cartan type");
    u.cartan().check_index(i);
    return {image_of_initial(u, i), image_of_initial(v, i)};
  }
};

inline Rational generalized_minor(const RationalMatrix& x, const GenMinorSpec& g) {
  require_type_a(g.u.cartan(), x.n());
  return minor(x, g.realize());
}

inline Rational generalized_minor(const MinorTable& table, const GenMinorSpec& g) {
  require_type_a(g.u.cartan(), table.n());
  return table.value(g.realize());
}

/// The j -> i indicator (or j -> i-bar when `barred`): with
/// u = c(j -> i) = s_{i(2)} ... s_{i(l)} along the diagram path
/// i = i(1), ..., i(l) = j, it is Delta_{u omega_j, s_i u omega_j}, and the
/// barred one swaps the two weights.
inline GenMinorSpec indicator_spec(const CartanData& c, int j, int i, bool barred) {
  std::vector<int> path = c.dynkin_path(i, j);
  Word walk(path.begin() + 1, path.end());
  WeylElement u = from_word(c, walk);
  WeylElement su = u;
  su.left_mul_simple(i);
  if (barred) return {su, u, j};
  return {u, su, j};
}

/// True if g names the same function as some i-indicator (i-bar when
/// `barred`); generalized minors depend only on their two weights.
inline bool is_indicator(const CartanData& c, const GenMinorSpec& g, int i, bool barred) {
  if (!(g.u.cartan() == c) || !(g.v.cartan() == c)) return false;
  const int j = g.i;
  if (j < 1 || j > c.rank()) return false;
  GenMinorSpec ind = indicator_spec(c, j, i, barred);
  return same_weight(g.u, ind.u, j) && same_weight(g.v, ind.v, j);
}

/// Entries just above and below the diagonal, as the indicators 1 -> i and
/// 1 -> i-bar.
inline std::vector<GenMinorSpec> default_indicators(int n) {
  const CartanData c = type_a(n);
  std::vector<GenMinorSpec> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back(indicator_spec(c, 1, i, false));
    out.push_back(indicator_spec(c, 1, i, true));
  }
  return out;
}

/// Oscillatory test for a totally nonnegative matrix from any collection of
/// indicators that covers every i and every i-bar.
inline bool is_oscillatory_via_indicators(const RationalMatrix& x, const std::vector<GenMinorSpec>& collection) {
  const CartanData c = type_a(x.n());
  for (int i = 1; i <= c.rank(); ++i)
    for (bool barred : {false, true}) {
      bool covered = std::any_of(collection.begin(), collection.end(), [&](const GenMinorSpec& g) { return is_indicator(c, g, i, barred); });
      if (!covered)
        throw std::invalid_argument("indicator collection lacks a " + std::to_string(i) + (barred ? "-bar" : "") + "-indicator");
    }
  for (const GenMinorSpec& g : collection)
    if (sgn(generalized_minor(x, g)) <= 0) return false;
  return true;
}

// ----------------------------------------------------------------------------
// Bruhat cells

struct CellLabel {
  WeylElement u;
  WeylElement v;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// The (u, v) with x in B u B and B_- v B_-.
///
/// Left and right multiplication by upper-triangular matrices preserve the
/// ranks of the lower-left blocks x[i..n, 1..j], which for the permutation u
/// count #{k <= j : u(k) >= i}; lower-triangular multiplication preserves the
/// upper-right blocks x[1..i, j..n], counting #{k >= j : v(k) <= i}.
inline CellLabel bruhat_label(const RationalMatrix& x) {
  const int n = x.n();
  if (x.determinant() == 0) throw std::domain_error("bruhat_label needs an invertible matrix");
  const CartanData c = type_a(n);
  auto lower_left = [&](int i, int j) { return j == 0 ? 0 : x.block_rank(i - 1, n, 0, j); };
  auto upper_right = [&](int i, int j) { return j == n + 1 ? 0 : x.block_rank(0, i, j - 1, n); };
  std::vector<int> u(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int above = 0;
    int below = 0;
    for (int i = 1; i <= n; ++i) {
      above += lower_left(i, j) - lower_left(i, j - 1);
      below += upper_right(i, j) - upper_right(i, j + 1);
    }
    u[j - 1] = above;
    v[j - 1] = n + 1 - below;
  }
  return {from_permutation(c, u), from_permutation(c, v)};
}

/// (u, v) for a factorization word: u is the Demazure product of the barred
/// letters and v that of the unbarred letters, each in order of appearance.
inline CellLabel cell_of_word(const CartanData& c, const SignedWord& word) {
  HeckeElement u = HeckeElement::identity(c);
  HeckeElement v = HeckeElement::identity(c);
  for (const SignedLetter& l : word) (l.barred ? u : v).absorb(l.index);
  return {u.rep(), v.rep()};
}

/// The representative w-bar: product of phi_i((0,-1),(1,0)) along a reduced word.
inline RationalMatrix representative(const WeylElement& w) {
  const int n = w.rank() + 1;
  require_type_a(w.cartan(), n);
  RationalMatrix out = RationalMatrix::identity(n);
  for (int l : reduced_word(w)) {
    RationalMatrix s = RationalMatrix::identity(n);
    s(l - 1, l - 1) = 0;
    s(l, l) = 0;
    s(l - 1, l) = -1;
    s(l, l - 1) = 1;
    out = out * s;
  }
  return out;
}

// ----------------------------------------------------------------------------
// Determinantal identity and Gaussian decomposition

struct DodgsonSides {
  Rational lhs;
  Rational rhs;
};

/// Both sides of
///   D(u',v') D(u'',v'') = D(u',v'') D(u'',v') + prod_{j != i} D_j(u',v')^{-a_ji}
/// at omega_i, with u'' = u' s_i and v'' = v' s_i; `minor_of(u, v, k)` returns
/// Delta_{u omega_k, v omega_k}(x).
template <class MinorOf>
DodgsonSides dodgson_sides(const WeylElement& u_prime, const WeylElement& v_prime, int i, MinorOf&& minor_of) {
  const CartanData& c = u_prime.cartan();
  c.check_index(i);
  if (is_right_descent(u_prime, i) || is_right_descent(v_prime, i))
    throw std::invalid_argument("Dodgson identity needs l(u' s_i) = l(u') + 1 and l(v' s_i) = l(v') + 1");
  WeylElement u2 = u_prime;
  u2.right_mul_simple(i);
  WeylElement v2 = v_prime;
  v2.right_mul_simple(i);
  DodgsonSides s;
  s.lhs = minor_of(u_prime, v_prime, i) * minor_of(u2, v2, i);
  Rational product = 1;
  for (int j = 1; j <= c.rank(); ++j) {
    if (j == i) continue;
    const int e = -c.a(j, i);
    if (e == 0) continue;
    const Rational d = minor_of(u_prime, v_prime, j);
    for (int k = 0; k < e; ++k) product *= d;
  }
  s.rhs = minor_of(u_prime, v2, i) * minor_of(u2, v_prime, i) + product;
  return s;
}

inline bool verify_dodgson(const RationalMatrix& x, const WeylElement& u_prime, const WeylElement& v_prime, int i) {
  require_type_a(u_prime.cartan(), x.n());
  auto s = dodgson_sides(u_prime, v_prime, i, [&](const WeylElement& u, const WeylElement& v, int k) { return generalized_minor(x, {u, v, k}); });
  return s.lhs == s.rhs;
}

inline bool verify_dodgson(const MinorTable& table, const WeylElement& u_prime, const WeylElement& v_prime, int i) {
  require_type_a(u_prime.cartan(), table.n());
  auto s = dodgson_sides(u_prime, v_prime, i, [&](const WeylElement& u, const WeylElement& v, int k) { return generalized_minor(table, {u, v, k}); });
  return s.lhs == s.rhs;
}

inline RationalMatrix transpose_antiauto(const RationalMatrix& x) { return x.transpose(); }

struct GaussDecomposition {
  RationalMatrix lower;     // unitriangular
  RationalMatrix diagonal;
  RationalMatrix upper;     // unitriangular
};

/// x = [x]_- [x]_0 [x]_+. Throws std::domain_error if a leading principal
/// minor vanishes.
inline GaussDecomposition gauss_decompose(const RationalMatrix& x) {
  const int n = x.n();
  RationalMatrix a = x;
  GaussDecomposition g{RationalMatrix::identity(n), RationalMatrix(n), RationalMatrix::identity(n)};
  for (int k = 0; k < n; ++k) {
    const Rational p = a(k, k);
    if (p == 0) throw std::domain_error("matrix has no Gaussian decomposition: leading principal minor " + std::to_string(k + 1) + " vanishes");
    g.diagonal(k, k) = p;
    for (int i = k + 1; i < n; ++i) g.lower(i, k) = a(i, k) / p;
    for (int j = k + 1; j < n; ++j) g.upper(k, j) = a(k, j) / p;
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = g.lower(i, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return g;
}

}  // namespace tposc
