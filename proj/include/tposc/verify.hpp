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

// Seeded batch verifiers. Trial k draws from a generator seeded by
// trial_seed(seed, k); a failing report names the first failing trial.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tposc/hecke.hpp"
#include "tposc/json_io.hpp"
#include "tposc/parallel.hpp"
#include "tposc/random.hpp"
#include "tposc/tpmatrix.hpp"

namespace tposc {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Suite-specific meaning; 0 selects the suite default.
  std::size_t trials = 0;
  unsigned jobs = 1;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::size_t trials_run = 0;
  std::size_t checks = 0;
  json failure;  // null when passed; otherwise a minimal reproducer
  json details = json::object();
};

namespace detail {

struct TrialOutcome {
  std::size_t checks = 0;
  json failure;  // null on success
};

inline SuiteResult merge_trials(std::string suite, const std::vector<TrialOutcome>& outcomes) {
  SuiteResult r;
  r.suite = std::move(suite);
  r.trials_run = outcomes.size();
  for (const TrialOutcome& o : outcomes) {
    r.checks += o.checks;
    if (r.passed && !o.failure.is_null()) {
      r.passed = false;
      r.failure = o.failure;
    }
  }
  return r;
}

inline json reproducer(const SuiteOptions& opts, std::size_t trial, json inputs) {
  return {{"seed", opts.seed}, {"trial", trial}, {"inputs", std::move(inputs)}};
}

inline std::vector<WeylElement> all_elements(const CartanData& c) {
  return weak_lower_interval(longest_element(c));
}

/// Uniform element of the double Bruhat label set subject to a support filter.
template <class Accept>
std::pair<WeylElement, WeylElement> sample_pair(const CartanData& c, Rng& rng, Accept&& accept) {
  for (;;) {
    WeylElement u = random_permutation_element(c, rng);
    WeylElement v = random_permutation_element(c, rng);
    if (accept(u, v)) return {u, v};
  }
}

}  // namespace detail

/// Determinantal identity on random SL_n cell elements, n = 2..5, over every
/// (u', v', i) with l(u') + l(v') <= 4 and s_i an ascent of both.
inline SuiteResult verify_dodgson_suite(SuiteOptions opts) {
  const std::size_t per_n = opts.trials ? opts.trials : 100;
  struct Case {
    WeylElement u, v;
    int i;
  };
  std::vector<CartanData> cartans;
  std::vector<std::vector<Case>> cases;
  for (int n = 2; n <= 5; ++n) {
    CartanData c = type_a(n);
    std::vector<WeylElement> short_elements;
    for (const WeylElement& w : detail::all_elements(c))
      if (length(w) <= 4) short_elements.push_back(w);
    std::vector<Case> list;
    for (const WeylElement& u : short_elements)
      for (const WeylElement& v : short_elements) {
        if (length(u) + length(v) > 4) continue;
        for (int i = 1; i <= c.rank(); ++i)
          if (!is_right_descent(u, i) && !is_right_descent(v, i)) list.push_back({u, v, i});
      }
    cartans.push_back(c);
    cases.push_back(std::move(list));
  }
  auto outcomes = parallel_map(4 * per_n, opts.jobs, [&](std::size_t t) {
    const std::size_t slot = t / per_n;
    const int n = static_cast<int>(slot) + 2;
    const CartanData& c = cartans[slot];
    Rng rng(trial_seed(opts.seed, t));
    auto [u, v] = detail::sample_pair(c, rng, [](const WeylElement&, const WeylElement&) { return true; });
    CellSample s = random_cell_sample(u, v, rng);
    detail::TrialOutcome out;
    if (s.x.determinant() != 1) {
      out.failure = detail::reproducer(opts, t, {{"n", n}, {"factorization", factorization_to_json(s.input)}, {"reason", "det != 1"}});
      return out;
    }
    MinorTable table(s.x);
    for (const Case& k : cases[slot]) {
      ++out.checks;
      if (!verify_dodgson(table, k.u, k.v, k.i)) {
        out.failure = detail::reproducer(opts, t,
                                         {{"n", n},
                                          {"factorization", factorization_to_json(s.input)},
                                          {"u_prime", weyl_to_json(k.u)},
                                          {"v_prime", weyl_to_json(k.v)},
                                          {"i", k.i}});
        return out;
      }
    }
    return out;
  });
  SuiteResult r = detail::merge_trials("dodgson", outcomes);
  r.details = {{"dimensions", {2, 3, 4, 5}}, {"matrices_per_dimension", per_n}};
  return r;
}

/// Random factorizations in SL_3, SL_4, SL_5: every one is TNN, total
/// positivity agrees with the corner-minor test and with membership in the
/// open double cell, and the recovered cell label matches the word.
inline SuiteResult verify_gp_suite(SuiteOptions opts) {
  const std::size_t per_n = opts.trials ? opts.trials : 200;
  auto outcomes = parallel_map(3 * per_n, opts.jobs, [&](std::size_t t) {
    const int n = static_cast<int>(t / per_n) + 3;
    const CartanData c = type_a(n);
    const WeylElement wo = longest_element(c);
    Rng rng(trial_seed(opts.seed, t));
    CellSample s = [&] {
      switch (rng.uniform(0, 2)) {
        case 0: return random_cell_sample(wo, wo, rng);
        case 1: {
          auto [u, v] = detail::sample_pair(c, rng, [](const WeylElement&, const WeylElement&) { return true; });
          return random_cell_sample(u, v, rng);
        }
        default: return random_word_sample(n, static_cast<int>(rng.uniform(0, (2 * c.num_positive_roots()) + 4)), rng);
      }
    }();
    detail::TrialOutcome out;
    auto fail = [&](const std::string& reason) {
      out.failure = detail::reproducer(opts, t, {{"n", n}, {"factorization", factorization_to_json(s.input)}, {"reason", reason}});
      return out;
    };
    out.checks = 4;
    if (!is_tnn(s.x)) return fail("factorization output is not TNN");
    const bool tp = is_tp(s.x);
    if (tp != is_tp_given_tnn(s.x)) return fail("all-minors TP disagrees with corner solid minors");
    const CellLabel label = bruhat_label(s.x);
    if (!(label == s.label)) return fail("Bruhat label differs from the Demazure label of the word");
    if (tp != (label.u == wo && label.v == wo)) return fail("TP disagrees with membership in the open double cell");
    return out;
  });
  SuiteResult r = detail::merge_trials("gp", outcomes);
  r.details = {{"dimensions", {3, 4, 5}}, {"factorizations_per_dimension", per_n}};
  return r;
}

/// Oscillatory criteria on SL_4, SL_5 cell elements: with full support the
/// super/subdiagonal test, the indicator test and positivity of x^{n-1} all
/// hold and the least TP power equals the Hecke prediction; with incomplete
/// support none of them hold and no power up to 2n is TP.
inline SuiteResult verify_gk_suite(SuiteOptions opts) {
  const std::size_t full = opts.trials ? opts.trials : 100;
  const std::size_t partial = (full + 1) / 2;
  const std::size_t per_n = full + partial;
  auto outcomes = parallel_map(2 * per_n, opts.jobs, [&](std::size_t t) {
    const int n = static_cast<int>(t / per_n) + 4;
    const bool want_full = (t % per_n) < full;
    const CartanData c = type_a(n);
    Rng rng(trial_seed(opts.seed, t));
    auto [u, v] = detail::sample_pair(c, rng, [&](const WeylElement& a, const WeylElement& b) {
      return (has_full_support(a) && has_full_support(b)) == want_full;
    });
    CellSample s = random_cell_sample(u, v, rng);
    detail::TrialOutcome out;
    auto fail = [&](const std::string& reason) {
      out.failure = detail::reproducer(opts, t,
                                       {{"n", n},
                                        {"full_support", want_full},
                                        {"cell", cell_to_json(s.label)},
                                        {"factorization", factorization_to_json(s.input)},
                                        {"reason", reason}});
      return out;
    };
    out.checks = 4;
    const bool osc = is_oscillatory(s.x);
    const bool via_indicators = is_oscillatory_via_indicators(s.x, default_indicators(n));
    const auto predicted = min_tp_exponent(u, v);
    if (want_full) {
      if (!osc) return fail("full-support cell element is not oscillatory");
      if (!via_indicators) return fail("indicator test fails on a full-support cell element");
      const auto found = min_tp_power_bruteforce(s.x, n - 1);
      if (!found) return fail("x^(n-1) is not totally positive");
      if (!predicted || *found != *predicted) return fail("least TP power differs from the Hecke prediction");
    } else {
      if (osc) return fail("incomplete-support cell element passes the oscillatory test");
      if (via_indicators) return fail("indicator test passes on an incomplete-support cell element");
      if (predicted) return fail("Hecke prediction exists for incomplete support");
      if (min_tp_power_bruteforce(s.x, 2 * n)) return fail("some power up to 2n is totally positive");
    }
    return out;
  });
  SuiteResult r = detail::merge_trials("gk", outcomes);
  r.details = {{"dimensions", {4, 5}}, {"full_support_per_dimension", full}, {"incomplete_support_per_dimension", partial}};
  return r;
}

/// 2 l(w_o) = h r for every simple type of rank <= 8; when w_o = -1, h is even
/// and (s_1 ... s_r)^{h/2} = w_o.
inline SuiteResult verify_coxeter_suite(SuiteOptions opts) {
  const std::vector<DynkinType> types = simple_types(8);
  auto outcomes = parallel_map(types.size(), opts.jobs, [&](std::size_t t) {
    const CartanData c = cartan_matrix(types[t]);
    detail::TrialOutcome out;
    const int h = coxeter_number(c);
    const int lwo = length(longest_element(c));
    const int r = c.rank();
    json facts{{"type", types[t].name()}, {"h", h}, {"length_wo", lwo}, {"rank", r}};
    ++out.checks;
    if (2 * lwo != h * r) {
      out.failure = detail::reproducer(opts, t, facts);
      return out;
    }
    if (wo_is_minus_one(c)) {
      ++out.checks;
      WeylElement power = WeylElement::identity(c);
      const WeylElement cox = coxeter_element(c);
      if (h % 2 == 0)
        for (int k = 0; k < h / 2; ++k) power = power * cox;
      if (h % 2 != 0 || !(power == longest_element(c))) {
        out.failure = detail::reproducer(opts, t, facts);
        return out;
      }
    }
    return out;
  });
  SuiteResult r = detail::merge_trials("coxeter", outcomes);
  json names = json::array();
  for (const DynkinType& t : types) names.push_back(t.name());
  r.details = {{"types", names}};
  return r;
}

/// Positive cell elements over every (u, v) in SL_3 and SL_4: the cell label
/// is recovered and Delta_{u' omega_i, v' omega_i} > 0 for all i, u' <= u and
/// v' <= v^{-1}. `trials` is the number of parameter draws per pair.
inline SuiteResult verify_lemma_c_suite(SuiteOptions opts) {
  const std::size_t draws = opts.trials ? opts.trials : 1;
  struct Pair {
    int n;
    WeylElement u, v;
  };
  std::vector<Pair> pairs;
  for (int n = 3; n <= 4; ++n) {
    const CartanData c = type_a(n);
    const auto elements = detail::all_elements(c);
    for (const WeylElement& u : elements)
      for (const WeylElement& v : elements) pairs.push_back({n, u, v});
  }
  auto outcomes = parallel_map(pairs.size() * draws, opts.jobs, [&](std::size_t t) {
    const Pair& p = pairs[t / draws];
    Rng rng(trial_seed(opts.seed, t));
    CellSample s = random_cell_sample(p.u, p.v, rng);
    detail::TrialOutcome out;
    auto fail = [&](json extra) {
      extra["n"] = p.n;
      extra["cell"] = cell_to_json(s.label);
      extra["factorization"] = factorization_to_json(s.input);
      out.failure = detail::reproducer(opts, t, std::move(extra));
      return out;
    };
    ++out.checks;
    if (!(bruhat_label(s.x) == s.label)) return fail({{"reason", "cell label not recovered"}});
    MinorTable table(s.x);
    const auto lower_u = weak_lower_interval(p.u);
    const auto lower_v = weak_lower_interval(inverse(p.v));
    for (const WeylElement& a : lower_u)
      for (const WeylElement& b : lower_v)
        for (int i = 1; i < p.n; ++i) {
          ++out.checks;
          if (sgn(generalized_minor(table, {a, b, i})) <= 0)
            return fail({{"reason", "nonpositive minor"}, {"u_prime", weyl_to_json(a)}, {"v_prime", weyl_to_json(b)}, {"i", i}});
        }
    return out;
  });
  SuiteResult r = detail::merge_trials("lemma-c", outcomes);
  r.details = {{"dimensions", {3, 4}}, {"pairs", pairs.size()}, {"draws_per_pair", draws}};
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dodgson", "gk", "gp", "coxeter", "lemma-c"};
  return names;
}

/// Throws std::invalid_argument for unknown suite names.
inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "dodgson") return verify_dodgson_suite(opts);
  if (name == "gk") return verify_gk_suite(opts);
  if (name == "gp") return verify_gp_suite(opts);
  if (name == "coxeter") return verify_coxeter_suite(opts);
  if (name == "lemma-c") return verify_lemma_c_suite(opts);
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

inline json suite_result_to_json(const SuiteResult& r) {
  return {{"passed", r.passed}, {"trials_run", r.trials_run}, {"checks", r.checks}, {"failure", r.failure}, {"details", r.details}};
}

}  // namespace tposc
