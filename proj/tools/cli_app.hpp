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

// Command-line frontend. Every command builds one JSON report
//   {"command", "inputs", "verdict", "elapsed_ms"}
// (`mg` uses the flat exponent-report layout instead) and prints it either
// as JSON or as "key: value" lines.
//
// Exit codes: 0 success / true verdict, 1 false verdict or suite failure,
// 2 usage or parse error, 3 domain error.

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tposc/tposc.hpp"

namespace tposc::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kDomain = 3 };

namespace detail {

inline json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline void print_report(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump() << '\n';
    return;
  }
  const json& body = report.contains("verdict") ? report.at("verdict") : report;
  for (const auto& [key, value] : body.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("TPOSC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("TPOSC_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline json report(const std::string& command, json inputs, json verdict, const Stopwatch& clock) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"verdict", std::move(verdict)}, {"elapsed_ms", clock.elapsed_ms()}};
}

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

struct MgArgs {
  std::string type;
  bool witness = false;
  bool per_permutation = false;
  unsigned jobs = 0;
  bool json = false;
};

inline int cmd_mg(const MgArgs& a, std::ostream& out) {
  detail::Stopwatch clock;
  const CartanData c = cartan_matrix(DynkinType::parse(a.type));
  MOfGOptions opts;
  opts.want_witness = a.witness;
  opts.want_per_permutation = a.per_permutation;
  opts.jobs = a.jobs ? a.jobs : default_jobs();
  const ExponentReport r = m_of_G(c, opts);
  json j = exponent_report_to_json(r);
  j["elapsed_ms"] = clock.elapsed_ms();
  if (a.json) {
    out << j.dump() << '\n';
  } else {
    out << "m(" << r.type.name() << ") = " << r.m_of_g << '\n';
    if (r.witness_permutation) out << "witness: " << format_letters(*r.witness_permutation) << '\n';
    out << "permutations checked: " << r.permutations_checked << '\n';
  }
  return kOk;
}

struct CheckArgs {
  std::string file;
  std::string mode = "tnn";
  int cap = 0;
  int max_n = kAllMinorsGuard;
  bool json = false;
};

inline int cmd_check(const CheckArgs& a, std::ostream& out) {
  detail::Stopwatch clock;
  const RationalMatrix x = matrix_from_json(detail::read_json_file(a.file));
  const int n = x.n();
  json inputs{{"file", a.file}, {"mode", a.mode}, {"n", n}};
  json verdict;
  bool ok = true;
  auto violation = [](const std::optional<MinorSpec>& v) { return v ? minor_to_json(*v) : json(nullptr); };

  if (a.mode == "tnn") {
    auto v = tnn_violation(x, a.max_n);
    ok = !v;
    verdict = {{"tnn", ok}, {"violation", violation(v)}};
  } else if (a.mode == "tp") {
    auto v = tp_violation(x, a.max_n);
    ok = !v;
    verdict = {{"tp", ok}, {"violation", violation(v)}};
  } else if (a.mode == "osc") {
    auto v = tnn_violation(x, a.max_n);
    const bool tnn = !v;
    ok = tnn && is_oscillatory(x);
    std::optional<int> power;
    if (ok) power = min_tp_power_bruteforce(x, std::max(a.cap, n - 1), a.max_n);
    verdict = {{"tnn", tnn}, {"oscillatory", ok}, {"min_tp_power", detail::optional_int(power)}, {"violation", violation(v)}};
  } else if (a.mode == "cell") {
    verdict = {{"cell", cell_to_json(bruhat_label(x))}};
  } else if (a.mode == "minpow") {
    auto v = tnn_violation(x, a.max_n);
    const int cap = std::max(a.cap, n - 1);
    std::optional<int> power;
    if (!v) power = min_tp_power_bruteforce(x, cap, a.max_n);
    ok = power.has_value();
    inputs["cap"] = cap;
    verdict = {{"tnn", !v}, {"min_tp_power", detail::optional_int(power)}, {"violation", violation(v)}};
  } else {
    throw std::invalid_argument("unknown check mode '" + a.mode + "'");
  }
  detail::print_report(out, detail::report("check", std::move(inputs), std::move(verdict), clock), a.json);
  return ok ? kOk : kFalse;
}

struct FactorArgs {
  std::string file;
  bool json = false;
};

inline int cmd_factor(const FactorArgs& a, std::ostream& out) {
  detail::Stopwatch clock;
  const FactorizationInput in = factorization_from_json(detail::read_json_file(a.file));
  const RationalMatrix x = eval_factorization(in);
  const CellLabel cell = bruhat_label(x);
  json verdict{{"matrix", matrix_to_json(x)},
               {"cell", cell_to_json(cell)},
               {"predicted_min_tp_power", detail::optional_int(min_tp_exponent(cell.u, cell.v))}};
  detail::print_report(out, detail::report("factor", {{"file", a.file}, {"factorization", factorization_to_json(in)}}, std::move(verdict), clock), a.json);
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 0;
  unsigned jobs = 0;
  bool json = false;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  detail::Stopwatch clock;
  SuiteOptions opts;
  opts.seed = a.seed ? *a.seed : detail::default_seed();
  opts.trials = a.trials;
  opts.jobs = a.jobs ? a.jobs : default_jobs();
  const SuiteResult r = run_suite(a.suite, opts);
  json inputs{{"suite", a.suite}, {"seed", opts.seed}, {"trials", a.trials}};
  detail::print_report(out, detail::report("verify", std::move(inputs), suite_result_to_json(r), clock), a.json);
  return r.passed ? kOk : kFalse;
}

/// Runs the CLI on argv-style arguments (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total-positivity toolkit: m(G), matrix criteria, property suites", "tposc"};
  app.require_subcommand(1);

  MgArgs mg;
  auto* mg_cmd = app.add_subcommand("mg", "Compute m(G) for a simple Dynkin type");
  mg_cmd->add_option("type", mg.type, "Dynkin type, e.g. A4, E8")->required();
  mg_cmd->add_flag("--witness", mg.witness, "Report a permutation attaining the maximum");
  mg_cmd->add_flag("--per-permutation", mg.per_permutation, "Report the copy count of every permutation (JSON only)");
  mg_cmd->add_option("--jobs", mg.jobs, "Worker threads (default: available parallelism)");
  mg_cmd->add_flag("--json", mg.json, "Emit JSON");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Test a matrix (JSON file, '-' for stdin)");
  check_cmd->add_option("file", check.file, "Matrix JSON")->required();
  check_cmd->add_option("--mode", check.mode, "tnn | tp | osc | cell | minpow")
      ->check(CLI::IsMember({"tnn", "tp", "osc", "cell", "minpow"}));
  check_cmd->add_option("--cap", check.cap, "Largest power tried by minpow (at least n-1)");
  check_cmd->add_option("--max-n", check.max_n, "Dimension guard for all-minors tests");
  check_cmd->add_flag("--json", check.json, "Emit JSON");

  FactorArgs factor;
  auto* factor_cmd = app.add_subcommand("factor", "Evaluate a factorization (JSON file, '-' for stdin)");
  factor_cmd->add_option("file", factor.file, "Factorization JSON")->required();
  factor_cmd->add_flag("--json", factor.json, "Emit JSON");

  VerifyArgs verify;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded property suite");
  verify_cmd->add_option("suite", verify.suite, "dodgson | gk | gp | coxeter | lemma-c")->required();
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "Seed (default: $TPOSC_SEED or 0)");
  verify_cmd->add_option("--trials", verify.trials, "Trials (suite-specific; 0 = default)");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: available parallelism)");
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }
  if (*seed_opt) verify.seed = seed;

  try {
    if (*mg_cmd) return cmd_mg(mg, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*factor_cmd) return cmd_factor(factor, out);
    if (*verify_cmd) return cmd_verify(verify, out);
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace tposc::cli
