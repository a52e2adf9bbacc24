#pragma once
// JSON serialization for the public CLI surface, plus small text parsers for
// command-line arguments.

#include <json.hpp>

#include <string>

#include "flagkey/core.hpp"
#include "flagkey/eg.hpp"
#include "flagkey/flagged.hpp"
#include "flagkey/polynomial.hpp"
#include "flagkey/tableau.hpp"

namespace flagkey {

using nlohmann::json;

inline json json_of(const WeakComposition& a) { return json(a); }

inline json json_of(const Permutation& w) { return json(w.oneline()); }

// Polynomials serialize as a list of [exponents, coefficient] pairs ordered
// lexicographically by exponent vector.
inline json json_of(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({json(e), c}));
  return out;
}

// Rows are listed bottom to top starting at base_row; row indices below 1
// appear for virtual placements.
inline json json_of(const Tableau& T) {
  json rows = json::array();
  for (const Word& r : T.rows()) rows.push_back(json(r));
  return json{{"base_row", T.base_row()}, {"rows", rows}};
}

inline json json_of(const IncreasingFactorization& f) {
  json blocks = json::array();
  for (const Word& b : f.display()) blocks.push_back(json(b));
  return json{{"blocks", blocks}};
}

inline json json_of(const WeaklyIncreasingFactorization& f) {
  json blocks = json::array();
  for (const Word& b : f.display()) blocks.push_back(json(b));
  return json{{"blocks", blocks}};
}

// ---------------------------------------------------------------------------
// Argument parsers

// Comma-separated integers: "1,2,0,1".  Spaces around entries are allowed; an
// empty string is the empty list.
inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&]() {
    size_t a = tok.find_first_not_of(' ');
    size_t b = tok.find_last_not_of(' ');
    if (a == std::string::npos) throw std::invalid_argument("empty entry in integer list");
    size_t used = 0;
    int v = std::stoi(tok.substr(a, b - a + 1), &used);
    if (used != b - a + 1) throw std::invalid_argument("bad integer in list: " + tok);
    out.push_back(v);
  };
  if (s.find_first_not_of(' ') == std::string::npos) return out;
  for (char c : s) {
    if (c == ',') {
      flush();
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  flush();
  return out;
}

// Blocks separated by '|', leftmost block first.  Each block is either a run
// of digits ("26") or comma-separated integers ("2,6"); an empty token is an
// empty block.
inline std::vector<Word> parse_blocks(const std::string& s) {
  std::vector<Word> out;
  std::string tok;
  auto flush = [&]() {
    Word b;
    if (tok.find(',') != std::string::npos) {
      b = parse_int_list(tok);
    } else {
      for (char c : tok) {
        if (c == ' ') continue;
        if (c < '1' || c > '9')
          throw std::invalid_argument("block letters without commas must be digits 1-9");
        b.push_back(c - '0');
      }
    }
    out.push_back(std::move(b));
  };
  for (char c : s) {
    if (c == '|') {
      flush();
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  flush();
  return out;
}

} // namespace flagkey
