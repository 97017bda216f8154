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

// Static data for the simple (irreducible, crystallographic) root systems.
//
// Nodes are numbered as in Bourbaki's plates. The stored matrix satisfies
// a(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), so that the simple
// reflection acts on root coordinates by
//
//     s_i(alpha_j) = alpha_j - a(i, j) alpha_i,
//
// and the closure of the simple roots under these reflections is the root
// system of the named type itself (B_r has alpha_r short, C_r has alpha_r
// long, G_2 has alpha_1 short).

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tposc/checked.hpp"

namespace tposc {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

  bool admissible() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  /// Parses strings such as "A4", "e8", "D 5". Throws std::invalid_argument
  /// for anything that is not an admissible simple type.
  static DynkinType parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type string: '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
      throw std::invalid_argument("unknown Dynkin family in '" + std::string(text) + "'");
    int r = 0;
    const char* first = s.data() + 1;
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, r);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("bad rank in Dynkin type '" + std::string(text) + "'");
    DynkinType t{static_cast<Family>(f), r};
    if (!t.admissible()) throw std::invalid_argument("inadmissible rank for family: " + t.name());
    return t;
  }
};

/// Simple-root coordinates of an element of the root lattice.
using RootCoords = std::vector<int>;

namespace detail {

struct CartanTables {
  DynkinType type;
  int rank = 0;
  std::vector<int> a;  // row-major r x r
  std::vector<int> m;  // row-major r x r
  std::vector<std::vector<int>> neighbors;  // 1-based indices
  std::vector<RootCoords> positive_roots;
};

}  // namespace detail

class CartanData;
CartanData cartan_matrix(DynkinType type);

/// Immutable handle to the Cartan matrix, braid orders and positive roots of
/// one simple type. Copies share the same tables.
class CartanData {
 public:
  const DynkinType& type() const { return t_->type; }
  int rank() const { return t_->rank; }

  /// Cartan matrix entry, 1-based.
  int a(int i, int j) const { return t_->a[idx(i, j)]; }
  /// Order of s_i s_j, 1-based.
  int m(int i, int j) const { return t_->m[idx(i, j)]; }

  std::span<const RootCoords> positive_roots() const { return t_->positive_roots; }
  int num_positive_roots() const { return static_cast<int>(t_->positive_roots.size()); }
  const std::vector<int>& neighbors(int i) const {
    check_index(i);
    return t_->neighbors[i - 1];
  }

  void check_index(int i) const {
    if (i < 1 || i > rank())
      throw std::invalid_argument("generator index " + std::to_string(i) + " out of range [1," + std::to_string(rank()) + "] for " + type().name());
  }

  /// s_i applied to a root-lattice vector.
  RootCoords reflect(int i, RootCoords v) const {
    check_index(i);
    int pairing = 0;
    for (int k = 1; k <= rank(); ++k) pairing = detail::checked_add(pairing, detail::checked_mul(a(i, k), v[k - 1]));
    v[i - 1] = detail::checked_sub(v[i - 1], pairing);
    return v;
  }

  /// The unique path from `from` to `to` in the Dynkin diagram (a tree),
  /// both endpoints included.
  std::vector<int> dynkin_path(int from, int to) const {
    check_index(from);
    check_index(to);
    std::vector<int> parent(rank() + 1, 0);
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
      int k = queue.front();
      queue.pop_front();
      for (int nb : neighbors(k))
        if (parent[nb] == 0) {
          parent[nb] = k;
          queue.push_back(nb);
        }
    }
    if (parent[to] == 0) throw std::invalid_argument("indices lie in different Dynkin components");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  friend bool operator==(const CartanData& x, const CartanData& y) { return x.t_ == y.t_ || x.type() == y.type(); }

 private:
  friend CartanData cartan_matrix(DynkinType type);
  explicit CartanData(std::shared_ptr<const detail::CartanTables> t) : t_(std::move(t)) {}

  std::size_t idx(int i, int j) const {
    check_index(i);
    check_index(j);
    return static_cast<std::size_t>((i - 1) * rank() + (j - 1));
  }

  std::shared_ptr<const detail::CartanTables> t_;
};

namespace detail {

inline int braid_order(int product) {
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("Cartan entries outside the crystallographic range");
}

inline std::vector<RootCoords> close_positive_roots(const CartanTables& t) {
  const int r = t.rank;
  auto reflect = [&](int i, RootCoords v) {
    int pairing = 0;
    for (int k = 0; k < r; ++k) pairing = checked_add(pairing, checked_mul(t.a[(i * r) + k], v[k]));
    v[i] = checked_sub(v[i], pairing);
    return v;
  };
  std::set<RootCoords> seen;
  std::deque<RootCoords> queue;
  for (int i = 0; i < r; ++i) {
    RootCoords e(r, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      RootCoords gamma = reflect(i, beta);
      if (std::any_of(gamma.begin(), gamma.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(gamma).second) queue.push_back(std::move(gamma));
    }
  }
  std::vector<RootCoords> roots(seen.begin(), seen.end());
  auto height = [](const RootCoords& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const RootCoords& x, const RootCoords& y) { return height(x) < height(y); });
  return roots;
}

}  // namespace detail

/// Builds the Cartan data of an admissible simple type.
inline CartanData cartan_matrix(DynkinType type) {
  if (!type.admissible()) throw std::invalid_argument("inadmissible rank for family: " + type.name());
  auto t = std::make_shared<detail::CartanTables>();
  const int r = type.rank;
  t->type = type;
  t->rank = r;
  t->a.assign(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) t->a[(i * r) + i] = 2;
  // Edge i--j (1-based) with a_ij, a_ji.
  auto edge = [&](int i, int j, int aij = -1, int aji = -1) {
    t->a[((i - 1) * r) + (j - 1)] = aij;
    t->a[((j - 1) * r) + (i - 1)] = aji;
  };
  switch (type.family) {
    case Family::A:
      for (int k = 1; k < r; ++k) edge(k, k + 1);
      break;
    case Family::B:
      for (int k = 1; k < r - 1; ++k) edge(k, k + 1);
      edge(r - 1, r, -1, -2);
      break;
    case Family::C:
      for (int k = 1; k < r - 1; ++k) edge(k, k + 1);
      edge(r - 1, r, -2, -1);
      break;
    case Family::D:
      for (int k = 1; k < r - 1; ++k) edge(k, k + 1);
      edge(r - 2, r);
      break;
    case Family::E:
      edge(1, 3);
      edge(2, 4);
      for (int k = 3; k < r; ++k) edge(k, k + 1);
      break;
    case Family::F:
      edge(1, 2);
      edge(2, 3, -1, -2);
      edge(3, 4);
      break;
    case Family::G:
      edge(1, 2, -3, -1);
      break;
  }
  t->m.assign(static_cast<std::size_t>(r * r), 1);
  t->neighbors.assign(static_cast<std::size_t>(r), {});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      t->m[(i * r) + j] = detail::braid_order(t->a[(i * r) + j] * t->a[(j * r) + i]);
      if (t->a[(i * r) + j] != 0) t->neighbors[i].push_back(j + 1);
    }
  t->positive_roots = detail::close_positive_roots(*t);
  return CartanData(std::move(t));
}

inline CartanData cartan_matrix(std::string_view type) { return cartan_matrix(DynkinType::parse(type)); }

inline std::vector<RootCoords> positive_roots(const CartanData& c) {
  auto roots = c.positive_roots();
  return {roots.begin(), roots.end()};
}

/// All admissible simple types of rank at most `max_rank`, in a fixed order.
inline std::vector<DynkinType> simple_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace tposc
