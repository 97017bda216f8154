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

// Weyl group arithmetic in the reflection representation on the root
// lattice. An element is stored as the integer matrix whose column j holds
// the simple-root coordinates of w(alpha_j); this representation is faithful,
// so equality of elements is equality of matrices.

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tposc/cartan.hpp"
#include "tposc/checked.hpp"

namespace tposc {

/// A word over the generators, 1-based letters.
using Word = std::vector<int>;

/// A letter of a double word: barred letters generate the first Weyl factor,
/// unbarred letters the second.
struct SignedLetter {
  int index = 1;
  bool barred = false;

  /// Serialized form: barred letters are negative.
  int to_int() const { return barred ? -index : index; }
  static SignedLetter from_int(int v) {
    if (v == 0) throw std::invalid_argument("signed letter 0 is not valid");
    return {v < 0 ? -v : v, v < 0};
  }
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

using SignedWord = std::vector<SignedLetter>;

class WeylElement {
 public:
  explicit WeylElement(CartanData c) : c_(std::move(c)), mat_(static_cast<std::size_t>(c_.rank() * c_.rank()), 0) {
    for (int j = 0; j < rank(); ++j) mat_[at(j, j)] = 1;
  }

  static WeylElement identity(const CartanData& c) { return WeylElement(c); }

  const CartanData& cartan() const { return c_; }
  int rank() const { return c_.rank(); }

  /// Coefficient of alpha_k in w(alpha_j), 1-based.
  int entry(int k, int j) const {
    c_.check_index(k);
    c_.check_index(j);
    return mat_[at(k - 1, j - 1)];
  }

  /// Coordinates of w(alpha_j).
  RootCoords image_of_simple(int j) const {
    c_.check_index(j);
    auto first = mat_.begin() + static_cast<std::ptrdiff_t>((j - 1) * rank());
    return {first, first + rank()};
  }

  RootCoords apply(const RootCoords& beta) const {
    const int r = rank();
    RootCoords out(r, 0);
    for (int j = 0; j < r; ++j) {
      if (beta[j] == 0) continue;
      for (int k = 0; k < r; ++k) out[k] = detail::checked_add(out[k], detail::checked_mul(mat_[at(k, j)], beta[j]));
    }
    return out;
  }

  /// Sign of w(beta) for a root beta: the first nonzero coordinate decides.
  bool sends_negative(const RootCoords& beta) const {
    const int r = rank();
    for (int k = 0; k < r; ++k) {
      int coord = 0;
      for (int j = 0; j < r; ++j)
        if (beta[j] != 0) coord = detail::checked_add(coord, detail::checked_mul(mat_[at(k, j)], beta[j]));
      if (coord != 0) return coord < 0;
    }
    throw std::logic_error("Weyl element maps a root to zero");
  }

  /// w(alpha_i) < 0. For roots all coordinates share one sign.
  bool simple_image_negative(int i) const {
    const int r = rank();
    for (int k = 0; k < r; ++k) {
      int v = mat_[at(k, i - 1)];
      if (v != 0) return v < 0;
    }
    throw std::logic_error("Weyl element maps a simple root to zero");
  }

  /// In-place w <- w s_i. Only columns adjacent to i change.
  WeylElement& right_mul_simple(int i) {
    c_.check_index(i);
    const int r = rank();
    const int ci = i - 1;
    for (int j = 0; j < r; ++j) {
      if (j == ci) continue;
      const int aij = c_.a(i, j + 1);
      if (aij == 0) continue;
      for (int k = 0; k < r; ++k) mat_[at(k, j)] = detail::checked_sub(mat_[at(k, j)], detail::checked_mul(aij, mat_[at(k, ci)]));
    }
    for (int k = 0; k < r; ++k) mat_[at(k, ci)] = -mat_[at(k, ci)];
    return *this;
  }

  /// In-place w <- s_i w. Only row i changes.
  WeylElement& left_mul_simple(int i) {
    c_.check_index(i);
    const int r = rank();
    for (int j = 0; j < r; ++j) {
      int pairing = 0;
      for (int k = 0; k < r; ++k) pairing = detail::checked_add(pairing, detail::checked_mul(c_.a(i, k + 1), mat_[at(k, j)]));
      mat_[at(i - 1, j)] = detail::checked_sub(mat_[at(i - 1, j)], pairing);
    }
    return *this;
  }

  bool is_identity() const {
    for (int j = 0; j < rank(); ++j)
      for (int k = 0; k < rank(); ++k)
        if (mat_[at(k, j)] != (k == j ? 1 : 0)) return false;
    return true;
  }

  bool is_minus_identity() const {
    for (int j = 0; j < rank(); ++j)
      for (int k = 0; k < rank(); ++k)
        if (mat_[at(k, j)] != (k == j ? -1 : 0)) return false;
    return true;
  }

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    if (!(x.c_ == y.c_)) throw std::invalid_argument("cannot multiply Weyl elements of different types");
    const int r = x.rank();
    WeylElement out(x.c_);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        int s = 0;
        for (int l = 0; l < r; ++l) s = detail::checked_add(s, detail::checked_mul(x.mat_[x.at(k, l)], y.mat_[y.at(l, j)]));
        out.mat_[out.at(k, j)] = s;
      }
    return out;
  }

  friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.c_ == y.c_ && x.mat_ == y.mat_; }

  /// Arbitrary total order (for ordered containers); only meaningful within one type.
  friend bool operator<(const WeylElement& x, const WeylElement& y) { return x.mat_ < y.mat_; }

  const std::vector<int>& raw() const { return mat_; }

 private:
  std::size_t at(int k, int j) const { return static_cast<std::size_t>((j * rank()) + k); }

  CartanData c_;
  std::vector<int> mat_;  // column-major
};

inline void check_word(const CartanData& c, const Word& word) {
  for (int l : word) c.check_index(l);
}

inline WeylElement simple_reflection(const CartanData& c, int i) {
  c.check_index(i);
  return WeylElement(c).right_mul_simple(i);
}

inline WeylElement multiply(const WeylElement& x, const WeylElement& y) { return x * y; }

inline bool is_right_descent(const WeylElement& w, int i) {
  w.cartan().check_index(i);
  return w.simple_image_negative(i);
}

/// Number of positive roots sent to negative roots.
inline int length(const WeylElement& w) {
  int count = 0;
  for (const RootCoords& beta : w.cartan().positive_roots())
    if (w.sends_negative(beta)) ++count;
  return count;
}

inline WeylElement from_word(const CartanData& c, const Word& word) {
  check_word(c, word);
  WeylElement w(c);
  for (int l : word) w.right_mul_simple(l);
  return w;
}

inline bool is_reduced(const CartanData& c, const Word& word) {
  check_word(c, word);
  // Reduced iff every letter is an ascent of the running prefix.
  WeylElement w(c);
  for (int l : word) {
    if (w.simple_image_negative(l)) return false;
    w.right_mul_simple(l);
  }
  return true;
}

/// Canonical reduced word: strip the smallest right descent until the
/// identity is reached, then reverse.
inline Word reduced_word(WeylElement w) {
  Word out;
  const int r = w.rank();
  for (;;) {
    int descent = 0;
    for (int i = 1; i <= r && descent == 0; ++i)
      if (w.simple_image_negative(i)) descent = i;
    if (descent == 0) break;
    out.push_back(descent);
    w.right_mul_simple(descent);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline WeylElement inverse(const WeylElement& w) {
  Word word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return from_word(w.cartan(), word);
}

/// Greedy ascent from the identity.
inline WeylElement longest_element(const CartanData& c) {
  WeylElement w(c);
  const int r = c.rank();
  bool grew = true;
  int steps = 0;
  while (grew) {
    grew = false;
    for (int i = 1; i <= r; ++i)
      if (!w.simple_image_negative(i)) {
        w.right_mul_simple(i);
        ++steps;
        grew = true;
      }
  }
  if (steps != c.num_positive_roots()) throw std::logic_error("greedy ascent did not reach length |positive roots|");
  return w;
}

/// u' <= u in the right weak order: l(u) = l(u') + l(u'^{-1} u).
inline bool weak_order_leq(const WeylElement& u_prime, const WeylElement& u) {
  return length(u) == length(u_prime) + length(inverse(u_prime) * u);
}

/// Every u' with u' <= u in the right weak order, i.e. every element reached
/// from u by repeatedly stripping right descents. Sorted by length.
inline std::vector<WeylElement> weak_lower_interval(const WeylElement& u) {
  std::set<WeylElement> seen{u};
  std::vector<WeylElement> frontier{u};
  std::vector<WeylElement> out{u};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier)
      for (int i = 1; i <= w.rank(); ++i)
        if (w.simple_image_negative(i)) {
          WeylElement down = w;
          down.right_mul_simple(i);
          if (seen.insert(down).second) next.push_back(down);
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Indices appearing in a (any) reduced word, sorted.
inline std::vector<int> support(const WeylElement& w) {
  Word word = reduced_word(w);
  std::sort(word.begin(), word.end());
  word.erase(std::unique(word.begin(), word.end()), word.end());
  return word;
}

inline bool has_full_support(const WeylElement& w) { return static_cast<int>(support(w).size()) == w.rank(); }

/// Multiplicative order; throws if it exceeds `bound`.
inline int element_order(const WeylElement& w, int bound = 10000) {
  WeylElement p = w;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * w;
  }
  throw std::logic_error("element order exceeds bound");
}

/// s_1 s_2 ... s_r.
inline WeylElement coxeter_element(const CartanData& c) {
  Word word(static_cast<std::size_t>(c.rank()));
  for (int i = 0; i < c.rank(); ++i) word[i] = i + 1;
  return from_word(c, word);
}

inline int coxeter_number(const CartanData& c) { return element_order(coxeter_element(c)); }

inline bool wo_is_minus_one(const CartanData& c) { return longest_element(c).is_minus_identity(); }

/// Minimal-length representative of the coset w W_k, where W_k is generated
/// by all simple reflections except s_k. Two elements u, v satisfy
/// u(omega_k) = v(omega_k) exactly when their representatives coincide.
inline WeylElement min_coset_rep(WeylElement w, int k) {
  w.cartan().check_index(k);
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int l = 1; l <= w.rank(); ++l)
      if (l != k && w.simple_image_negative(l)) {
        w.right_mul_simple(l);
        stripped = true;
      }
  }
  return w;
}

inline bool same_weight(const WeylElement& u, const WeylElement& v, int k) { return min_coset_rep(u, k) == min_coset_rep(v, k); }

/// Calls `fn` on every reduced word of w until it returns false. Returns
/// false if enumeration was stopped early.
inline bool for_each_reduced_word(const WeylElement& w, const std::function<bool(const Word&)>& fn) {
  Word suffix;  // reversed
  std::function<bool(const WeylElement&)> rec = [&](const WeylElement& x) -> bool {
    if (x.is_identity()) {
      Word word(suffix.rbegin(), suffix.rend());
      return fn(word);
    }
    for (int i = 1; i <= x.rank(); ++i)
      if (x.simple_image_negative(i)) {
        WeylElement down = x;
        down.right_mul_simple(i);
        suffix.push_back(i);
        bool go_on = rec(down);
        suffix.pop_back();
        if (!go_on) return false;
      }
    return true;
  };
  return rec(w);
}

inline std::vector<Word> reduced_words(const WeylElement& w, std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  std::vector<Word> out;
  if (limit == 0) return out;
  for_each_reduced_word(w, [&](const Word& word) {
    out.push_back(word);
    return out.size() < limit;
  });
  return out;
}

/// Default ceiling on l(u) + l(v) for an untruncated double_reduced_words call.
inline constexpr int kDoubleWordGuard = 12;

/// All shuffles of a reduced word of u (barred) with a reduced word of v
/// (unbarred). A signed word determines both factors and the interleaving, so
/// distinct triples give distinct words and no deduplication pass is needed.
/// Without a `limit` the call refuses l(u) + l(v) > kDoubleWordGuard.
inline std::vector<SignedWord> double_reduced_words(const WeylElement& u, const WeylElement& v, std::optional<std::size_t> limit = std::nullopt) {
  if (!(u.cartan() == v.cartan())) throw std::invalid_argument("double reduced words need a common Cartan type");
  const int lu = length(u);
  const int lv = length(v);
  if (!limit && lu + lv > kDoubleWordGuard)
    throw std::length_error("double_reduced_words: l(u)+l(v) = " + std::to_string(lu + lv) + " exceeds guard; pass an explicit limit");
  const std::size_t cap = limit.value_or(std::numeric_limits<std::size_t>::max());
  std::vector<SignedWord> out;
  if (cap == 0) return out;

  SignedWord current;
  std::function<bool(const Word&, std::size_t, const Word&, std::size_t)> shuffle =
      [&](const Word& a, std::size_t ia, const Word& b, std::size_t ib) -> bool {
    if (ia == a.size() && ib == b.size()) {
      out.push_back(current);
      return out.size() < cap;
    }
    if (ia < a.size()) {
      current.push_back({a[ia], true});
      bool go_on = shuffle(a, ia + 1, b, ib);
      current.pop_back();
      if (!go_on) return false;
    }
    if (ib < b.size()) {
      current.push_back({b[ib], false});
      bool go_on = shuffle(a, ia, b, ib + 1);
      current.pop_back();
      if (!go_on) return false;
    }
    return true;
  };

  for_each_reduced_word(u, [&](const Word& ru) {
    return for_each_reduced_word(v, [&](const Word& rv) { return shuffle(ru, 0, rv, 0); });
  });
  return out;
}

/// Comma-separated integers, e.g. "1,2,-3".
template <class Range>
std::string format_letters(const Range& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out.push_back(',');
    if constexpr (std::is_same_v<std::decay_t<decltype(l)>, SignedLetter>)
      out += std::to_string(l.to_int());
    else
      out += std::to_string(l);
  }
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("bad integer '" + std::string(item) + "' in word");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  Word w = parse_int_list(text);
  for (int l : w)
    if (l <= 0) throw std::invalid_argument("unbarred word letters must be positive");
  return w;
}

inline SignedWord parse_signed_word(std::string_view text) {
  SignedWord out;
  for (int v : parse_int_list(text)) out.push_back(SignedLetter::from_int(v));
  return out;
}

}  // namespace tposc
