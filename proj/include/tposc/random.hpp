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

// Seeded generators for test matrices. Matrices are always produced by
// evaluating a factorization with positive parameters, so the double Bruhat
// cell they lie in is known in advance.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "tposc/tpmatrix.hpp"

namespace tposc {

/// Per-trial seed: splitmix64 of (seed, trial), so trial k is reproducible
/// on its own and independent of how trials are scheduled.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// mt19937_64 with portable integer draws (the std distributions are not
/// specified bit-for-bit across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % span);
    std::uint64_t draw;
    do draw = engine_();
    while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with 1 <= p, q <= bound.
  Rational positive_rational(int bound = 16) {
    Rational q(static_cast<long>(uniform(1, bound)), static_cast<unsigned long>(uniform(1, bound)));
    q.canonicalize();
    return q;
  }

  /// Rational with numerator in [-bound, bound] and denominator in [1, bound].
  Rational signed_rational(int bound = 16) {
    Rational q(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, bound)));
    q.canonicalize();
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform element of S_n = W(A_{n-1}).
inline WeylElement random_permutation_element(const CartanData& c, Rng& rng) {
  const int n = c.rank() + 1;
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  for (int k = n - 1; k > 0; --k) std::swap(p[k], p[rng.uniform(0, k)]);
  return from_permutation(c, p);
}

/// A reduced word for w, stripping a uniformly chosen right descent each step.
inline Word random_reduced_word(WeylElement w, Rng& rng) {
  Word out;
  for (;;) {
    std::vector<int> descents;
    for (int i = 1; i <= w.rank(); ++i)
      if (w.simple_image_negative(i)) descents.push_back(i);
    if (descents.empty()) break;
    const int d = descents[rng.uniform(0, static_cast<std::int64_t>(descents.size()) - 1)];
    out.push_back(d);
    w.right_mul_simple(d);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Uniformly random interleaving of `barred` (as barred letters) with `plain`.
inline SignedWord random_shuffle(const Word& barred, const Word& plain, Rng& rng) {
  SignedWord out;
  std::size_t a = 0, b = 0;
  while (a < barred.size() || b < plain.size()) {
    const auto left_a = static_cast<std::int64_t>(barred.size() - a);
    const auto left_b = static_cast<std::int64_t>(plain.size() - b);
    if (rng.uniform(1, left_a + left_b) <= left_a)
      out.push_back({barred[a++], true});
    else
      out.push_back({plain[b++], false});
  }
  return out;
}

/// Positive diagonal with product 1.
inline std::vector<Rational> random_sl_diag(int n, Rng& rng) {
  std::vector<Rational> d;
  Rational prod = 1;
  for (int k = 0; k + 1 < n; ++k) {
    d.push_back(rng.positive_rational());
    prod *= d.back();
  }
  d.push_back(1 / prod);
  return d;
}

struct CellSample {
  CellLabel label;
  FactorizationInput input;
  RationalMatrix x;
};

/// Random element of the positive part of G^{u,v}: a random double reduced
/// word for (u, v) with random positive parameters and torus part.
inline CellSample random_cell_sample(const WeylElement& u, const WeylElement& v, Rng& rng) {
  const int n = u.rank() + 1;
  FactorizationInput in;
  in.n = n;
  in.diag = random_sl_diag(n, rng);
  in.word = random_shuffle(random_reduced_word(u, rng), random_reduced_word(v, rng), rng);
  for (std::size_t k = 0; k < in.word.size(); ++k) in.params.push_back(rng.positive_rational());
  RationalMatrix x = eval_factorization(in);
  return {CellLabel{u, v}, std::move(in), std::move(x)};
}

/// Random factorization over an arbitrary (not necessarily reduced) word.
inline CellSample random_word_sample(int n, int word_length, Rng& rng) {
  const CartanData c = type_a(n);
  FactorizationInput in;
  in.n = n;
  in.diag = random_sl_diag(n, rng);
  for (int k = 0; k < word_length; ++k) {
    in.word.push_back({static_cast<int>(rng.uniform(1, n - 1)), rng.coin()});
    in.params.push_back(rng.positive_rational());
  }
  RationalMatrix x = eval_factorization(in);
  return {cell_of_word(c, in.word), std::move(in), std::move(x)};
}

/// Random rational matrix with small signed entries.
inline RationalMatrix random_rational_matrix(int n, Rng& rng, int bound = 16) {
  RationalMatrix x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = rng.signed_rational(bound);
  return x;
}

}  // namespace tposc
