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

// JSON forms of matrices, factorizations, words and reports.
//
//   matrix:         {"n": 3, "entries": [["1","1/2","0"], ...]}
//   factorization:  {"n": 3, "diag": ["1","2","1/2"], "word": [1,-2], "params": ["1","3/4"]}
//
// Rationals are strings "p/q" or "p"; JSON integers are accepted on input.
// Barred letters are negative integers. "diag" defaults to all ones.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tposc/hecke.hpp"
#include "tposc/tpmatrix.hpp"

namespace tposc {

using json = nlohmann::ordered_json;

/// Malformed JSON input (wrong shape, bad rational, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw ParseError("matrix JSON needs an \"entries\" array");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw ParseError("\"entries\" must be a nonempty array of rows");
  const int n = static_cast<int>(rows.size());
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<int>() != n)) throw ParseError("\"n\" does not match the number of rows");
  RationalMatrix x(n);
  for (int r = 0; r < n; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix must be square");
    for (int c = 0; c < n; ++c) x(r, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
  }
  return x;
}

inline json matrix_to_json(const RationalMatrix& x) {
  json rows = json::array();
  for (int r = 0; r < x.n(); ++r) {
    json row = json::array();
    for (int c = 0; c < x.n(); ++c) row.push_back(rational_to_json(x(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", x.n()}, {"entries", std::move(rows)}};
}

/// Parses and validates (positivity, product-1 torus part, letter range).
inline FactorizationInput factorization_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("factorization JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParseError("factorization JSON needs integer \"n\"");
  FactorizationInput in;
  in.n = j.at("n").get<int>();
  if (in.n < 2) throw ParseError("factorization needs n >= 2");
  if (j.contains("diag")) {
    if (!j.at("diag").is_array()) throw ParseError("\"diag\" must be an array");
    for (const json& d : j.at("diag")) in.diag.push_back(rational_from_json(d));
  } else {
    in.diag.assign(static_cast<std::size_t>(in.n), Rational(1));
  }
  if (j.contains("word")) {
    if (!j.at("word").is_array()) throw ParseError("\"word\" must be an array of integers");
    for (const json& l : j.at("word")) {
      if (!l.is_number_integer()) throw ParseError("word letters must be integers");
      try {
        in.word.push_back(SignedLetter::from_int(l.get<int>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }
  if (j.contains("params")) {
    if (!j.at("params").is_array()) throw ParseError("\"params\" must be an array");
    for (const json& t : j.at("params")) in.params.push_back(rational_from_json(t));
  }
  in.validate();
  return in;
}

inline json factorization_to_json(const FactorizationInput& in) {
  json diag = json::array(), word = json::array(), params = json::array();
  for (const Rational& d : in.diag) diag.push_back(rational_to_json(d));
  for (const SignedLetter& l : in.word) word.push_back(l.to_int());
  for (const Rational& t : in.params) params.push_back(rational_to_json(t));
  return {{"n", in.n}, {"diag", diag}, {"word", word}, {"params", params}};
}

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (int l : w) out.push_back(l);
  return out;
}

inline json minor_to_json(const MinorSpec& s) { return {{"rows", s.rows}, {"cols", s.cols}}; }

/// A Weyl element by its canonical (smallest-right-descent) reduced word.
inline json weyl_to_json(const WeylElement& w) {
  json out{{"word", word_to_json(reduced_word(w))}, {"length", length(w)}};
  if (w.cartan().type().family == Family::A) out["permutation"] = to_permutation(w);
  return out;
}

inline json cell_to_json(const CellLabel& cell) {
  return {{"u", weyl_to_json(cell.u)}, {"v", weyl_to_json(cell.v)}, {"word_convention", "smallest-right-descent"}};
}

inline json exponent_report_to_json(const ExponentReport& r) {
  json out{{"type", r.type.name()}, {"m", r.m_of_g}};
  if (r.witness_permutation) out["witness"] = word_to_json(*r.witness_permutation);
  out["permutations_checked"] = r.permutations_checked;
  if (r.per_permutation_min) {
    json table = json::array();
    for (const auto& [perm, k] : *r.per_permutation_min) table.push_back({{"permutation", word_to_json(perm)}, {"copies", k}});
    out["per_permutation_min"] = std::move(table);
  }
  return out;
}

}  // namespace tposc
