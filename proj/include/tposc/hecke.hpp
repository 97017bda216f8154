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

// The 0-Hecke monoid (generators T_i with T_i^2 = T_i and the braid
// relations), realized through the bijection w <-> T_w with the Weyl group:
// multiplying T_w by T_i on the right gives T_{w s_i} when s_i is an ascent
// of w and leaves T_w unchanged otherwise (the Demazure product).

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tposc/parallel.hpp"
#include "tposc/weyl.hpp"

namespace tposc {

class HeckeElement {
 public:
  explicit HeckeElement(WeylElement rep) : rep_(std::move(rep)) {}
  static HeckeElement identity(const CartanData& c) { return HeckeElement(WeylElement(c)); }

  const WeylElement& rep() const { return rep_; }
  const CartanData& cartan() const { return rep_.cartan(); }

  /// T_w T_i in place; returns true if the length grew.
  bool absorb(int i) {
    cartan().check_index(i);
    if (rep_.simple_image_negative(i)) return false;
    rep_.right_mul_simple(i);
    return true;
  }

  /// Demazure product T_x T_y.
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    if (!(x.cartan() == y.cartan())) throw std::invalid_argument("cannot multiply Hecke elements of different types");
    HeckeElement out = x;
    for (int l : reduced_word(y.rep_)) out.absorb(l);
    return out;
  }

  friend bool operator==(const HeckeElement& x, const HeckeElement& y) { return x.rep_ == y.rep_; }

 private:
  WeylElement rep_;
};

inline HeckeElement demazure_mul(HeckeElement h, int i) {
  h.absorb(i);
  return h;
}

inline HeckeElement demazure_word(const CartanData& c, const Word& word) {
  check_word(c, word);
  HeckeElement h = HeckeElement::identity(c);
  for (int l : word) h.absorb(l);
  return h;
}

inline HeckeElement demazure_product(const WeylElement& x, const WeylElement& y) { return HeckeElement(x) * HeckeElement(y); }

/// True iff the word contains a reduced word for w_o as a subword, i.e. its
/// Demazure product is T_{w_o}.
inline bool contains_wo_subword(const CartanData& c, const Word& word) {
  check_word(c, word);
  HeckeElement h = HeckeElement::identity(c);
  int len = 0;
  for (int l : word)
    if (h.absorb(l)) ++len;
  return len == c.num_positive_roots();
}

/// 1-based positions of the letters that lengthened the Demazure fold, when
/// the fold reaches w_o; those letters spell a reduced word for w_o.
inline std::optional<std::vector<std::size_t>> extract_wo_subword(const CartanData& c, const Word& word) {
  check_word(c, word);
  HeckeElement h = HeckeElement::identity(c);
  std::vector<std::size_t> positions;
  for (std::size_t k = 0; k < word.size(); ++k)
    if (h.absorb(word[k])) positions.push_back(k + 1);
  if (static_cast<int>(positions.size()) != c.num_positive_roots()) return std::nullopt;
  return positions;
}

/// T_w^m.
inline HeckeElement hecke_power(const WeylElement& w, int m) {
  if (m < 1) throw std::invalid_argument("hecke_power needs m >= 1");
  const Word word = reduced_word(w);
  HeckeElement h = HeckeElement::identity(w.cartan());
  for (int k = 0; k < m; ++k)
    for (int l : word) h.absorb(l);
  return h;
}

namespace detail {

/// Smallest k with T_word^k = T_{w_o}, by appending one copy at a time; the
/// caller guarantees the letters cover every generator.
inline int copies_to_wo(const CartanData& c, const Word& word) {
  const int n_pos = c.num_positive_roots();
  HeckeElement h = HeckeElement::identity(c);
  int len = 0;
  for (int k = 1; k <= n_pos; ++k) {
    const int before = len;
    for (int l : word)
      if (h.absorb(l)) ++len;
    if (len == n_pos) return k;
    // A full-support word must lengthen every non-maximal state.
    if (len == before) throw std::logic_error("Demazure fold stalled below w_o on a full-support word");
  }
  throw std::logic_error("copy count exceeded l(w_o)");
}

}  // namespace detail

/// Smallest m with T_w^m = T_{w_o}; none iff Supp(w) is not everything.
inline std::optional<int> min_power_to_wo(const WeylElement& w) {
  if (!has_full_support(w)) return std::nullopt;
  return detail::copies_to_wo(w.cartan(), reduced_word(w));
}

/// Minimal m with x^m totally positive for x in the positive part of the
/// double Bruhat cell G^{u,v}.
inline std::optional<int> min_tp_exponent(const WeylElement& u, const WeylElement& v) {
  if (!(u.cartan() == v.cartan())) throw std::invalid_argument("min_tp_exponent needs a common Cartan type");
  auto mu = min_power_to_wo(u);
  auto mv = min_power_to_wo(v);
  if (!mu || !mv) return std::nullopt;
  return std::max(*mu, *mv);
}

struct ExponentReport {
  DynkinType type;
  int m_of_g = 0;
  std::optional<Word> witness_permutation;
  std::size_t permutations_checked = 0;
  /// Filled only on request; keyed by permutation.
  std::optional<std::map<Word, int>> per_permutation_min;
};

struct MOfGOptions {
  bool want_witness = true;
  bool want_per_permutation = false;
  unsigned jobs = 1;
};

/// m(G): the maximum, over all permutations i of (1..r), of the least k such
/// that i^k contains a reduced word for w_o. Permutations are visited in
/// lexicographic order; the witness is the lexicographically first
/// permutation attaining the maximum, independent of `jobs`.
inline ExponentReport m_of_G(const CartanData& c, MOfGOptions opts = {}) {
  const int r = c.rank();
  std::vector<Word> perms;
  Word p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) p[i] = i + 1;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto mins = parallel_map(perms.size(), opts.jobs, [&](std::size_t k) { return detail::copies_to_wo(c, perms[k]); });

  ExponentReport report;
  report.type = c.type();
  report.permutations_checked = perms.size();
  std::size_t best = 0;
  for (std::size_t k = 0; k < mins.size(); ++k)
    if (mins[k] > mins[best]) best = k;
  report.m_of_g = mins[best];
  if (opts.want_witness) report.witness_permutation = perms[best];
  if (opts.want_per_permutation) {
    std::map<Word, int> table;
    for (std::size_t k = 0; k < perms.size(); ++k) table.emplace(perms[k], mins[k]);
    report.per_permutation_min = std::move(table);
  }
  return report;
}

inline ExponentReport m_of_G(const CartanData& c, bool want_witness) {
  MOfGOptions opts;
  opts.want_witness = want_witness;
  return m_of_G(c, opts);
}

}  // namespace tposc
