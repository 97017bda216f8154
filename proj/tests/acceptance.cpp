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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tposc/tposc.hpp"

namespace {

using namespace tposc;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome mg_table() {
  struct Row {
    const char* type;
    int m;
  };
  const std::vector<Row> rows = {
      {"A1", 1}, {"A2", 2}, {"A3", 3}, {"A4", 4}, {"A5", 5}, {"A6", 6}, {"A7", 7}, {"B2", 2}, {"B3", 3}, {"B4", 4},
      {"B5", 5}, {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C5", 5}, {"D4", 3}, {"D5", 5}, {"D6", 5}, {"D7", 7}, {"E6", 8},
      {"E7", 9}, {"E8", 15}, {"F4", 6}, {"G2", 3}};
  double small = 0, e7 = 0, e8 = 0;
  for (const Row& row : rows) {
    const auto t0 = Clock::now();
    MOfGOptions opts;
    opts.want_witness = false;
    opts.jobs = 1;
    const int m = m_of_G(cartan_matrix(row.type), opts).m_of_g;
    const double dt = seconds_since(t0);
    (std::string(row.type) == "E7" ? e7 : std::string(row.type) == "E8" ? e8 : small) += dt;
    if (m != row.m) return fail(std::string(row.type) + ": got " + std::to_string(m) + ", expected " + std::to_string(row.m));
  }
  if (small >= 10 || e7 >= 60 || e8 >= 300) return fail("runtime budget exceeded");
  char buf[160];
  std::snprintf(buf, sizeof buf, "24 types; others %.2fs, E7 %.2fs, E8 %.2fs (single-threaded)", small, e7, e8);
  return {true, buf};
}

Outcome coxeter_facts() {
  int checked = 0, minus_one = 0;
  for (const DynkinType& t : simple_types(8)) {
    const CartanData c = cartan_matrix(t);
    const int h = coxeter_number(c);
    const WeylElement wo = longest_element(c);
    const int r = c.rank();
    if (2 * length(wo) != h * r) return fail(t.name() + ": 2 l(w_o) != h r");
    bool expected_minus_one = false;
    switch (t.family) {
      case Family::A: expected_minus_one = r == 1; break;
      case Family::D: expected_minus_one = r % 2 == 0; break;
      case Family::E: expected_minus_one = r != 6; break;
      default: expected_minus_one = true;
    }
    if (wo.is_minus_identity() != expected_minus_one) return fail(t.name() + ": unexpected w_o = -1 status");
    if (expected_minus_one) {
      ++minus_one;
      if (h % 2 != 0) return fail(t.name() + ": h odd with w_o = -1");
      WeylElement p(c);
      for (int k = 0; k < h / 2; ++k) p = p * coxeter_element(c);
      if (!(p == wo)) return fail(t.name() + ": (s_1...s_r)^(h/2) != w_o");
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " types, " + std::to_string(minus_one) + " with w_o = -1"};
}

bool subword_oracle(const CartanData& c, const WeylElement& wo, const Word& word) {
  const int n_pos = c.num_positive_roots();
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    if (std::popcount(mask) != n_pos) continue;
    WeylElement w(c);
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1u) w.right_mul_simple(word[k]);
    if (w == wo) return true;
  }
  return false;
}

Outcome subword_oracle_equivalence() {
  std::size_t words = 0;
  for (const char* type : {"A2", "A3", "B2"}) {
    const CartanData c = cartan_matrix(type);
    const WeylElement wo = longest_element(c);
    const int r = c.rank();
    for (int len = 0; len <= 10; ++len) {
      Word word(static_cast<std::size_t>(len), 1);
      for (;;) {
        ++words;
        if (contains_wo_subword(c, word) != subword_oracle(c, wo, word))
          return fail(std::string(type) + " word " + format_letters(word));
        int k = 0;
        while (k < len && word[k] == r) word[k++] = 1;
        if (k == len) break;
        ++word[k];
      }
    }
  }
  return {true, std::to_string(words) + " words over A2, A3, B2"};
}

Outcome from_suite(const SuiteResult& r, const std::string& what) {
  if (!r.passed) return fail(r.failure.dump());
  return {true, std::to_string(r.trials_run) + " " + what + ", " + std::to_string(r.checks) + " checks"};
}

Outcome indicator_realization() {
  std::size_t checks = 0;
  for (int n = 2; n <= 6; ++n) {
    const CartanData c = type_a(n);
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng(trial_seed(static_cast<std::uint64_t>(n), t));
      const RationalMatrix x = random_rational_matrix(n, rng);
      for (int i = 1; i < n; ++i) {
        checks += 2;
        if (generalized_minor(x, indicator_spec(c, 1, i, false)) != x(i - 1, i)) return fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
        if (generalized_minor(x, indicator_spec(c, 1, i, true)) != x(i, i - 1)) return fail("n=" + std::to_string(n) + " bar i=" + std::to_string(i));
      }
    }
  }
  return {true, std::to_string(checks) + " indicator evaluations, n = 2..6"};
}

Outcome cell_product_law() {
  std::size_t pairs = 0;
  for (int n : {3, 4}) {
    const CartanData c = type_a(n);
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng(trial_seed(100 + static_cast<std::uint64_t>(n), t));
      const CellSample x = random_cell_sample(random_permutation_element(c, rng), random_permutation_element(c, rng), rng);
      const CellSample y = random_cell_sample(random_permutation_element(c, rng), random_permutation_element(c, rng), rng);
      const CellLabel expected{demazure_product(x.label.u, y.label.u).rep(), demazure_product(x.label.v, y.label.v).rep()};
      ++pairs;
      if (!(bruhat_label(x.x * y.x) == expected)) return fail("n=" + std::to_string(n) + " trial " + std::to_string(t));
    }
  }
  return {true, std::to_string(pairs) + " pairs in SL3, SL4"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const SuiteOptions base{2026, 0, 1};
  SuiteOptions dodgson = base, gp = base, gk = base;
  dodgson.trials = 100;
  gp.trials = 200;
  gk.trials = 100;
  const std::vector<Criterion> criteria = {
      {"AC1", "m(G) table", 400, mg_table},
      {"AC2", "Coxeter number facts", 1, coxeter_facts},
      {"AC3", "subword criterion vs brute force", 30, subword_oracle_equivalence},
      {"AC4", "Dodgson identity", 60, [&] { return from_suite(verify_dodgson_suite(dodgson), "matrices"); }},
      {"AC5", "Loewner-Whitney and Gasca-Pena", 120, [&] { return from_suite(verify_gp_suite(gp), "factorizations"); }},
      {"AC6", "Gantmacher-Krein and the exponent bound", 180, [&] { return from_suite(verify_gk_suite(gk), "cells"); }},
      {"AC7", "indicator realization", 10, indicator_realization},
      {"AC8", "cell-product law", 60, cell_product_law},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (o.ok && dt > c.budget_s) o = fail(o.detail + "; over the time budget");
    if (!o.ok) ++failures;
    std::printf("[%s] %s %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), dt);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
