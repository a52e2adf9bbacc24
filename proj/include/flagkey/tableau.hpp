#pragma once
// Tableaux in French convention: row 1 sits at the bottom and rows grow
// upward.  The base row may be any integer (words whose runs fall below row 1
// still get a drawing); key tableaux live in rows >= 1.
//
// A key tableau has weakly decreasing rows, columns with distinct entries,
// and the covering rule: if boxes (i,j) and (k,j) satisfy i < k and
// T(i,j) > T(k,j), then box (i,j+1) exists with T(i,j+1) > T(k,j).

#include "flagkey/core.hpp"

namespace flagkey {

class Tableau {
 public:
  Tableau() = default; // empty

  // rows[r] is row base_row + r, listed bottom to top.  Leading and trailing
  // empty rows are dropped; interior empty rows are kept (they are part of the
  // shape).
  static Tableau from_rows(int base_row, std::vector<Word> rows) {
    while (!rows.empty() && rows.front().empty()) {
      rows.erase(rows.begin());
      ++base_row;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    Tableau t;
    t.base_ = rows.empty() ? 1 : base_row;
    t.rows_ = std::move(rows);
    return t;
  }

  bool empty() const { return rows_.empty(); }
  int base_row() const { return base_; }
  int top_row() const { return base_ + static_cast<int>(rows_.size()) - 1; }
  const std::vector<Word>& rows() const { return rows_; }

  const Word& row(int r) const {
    static const Word kEmpty;
    if (r < base_ || r > top_row()) return kEmpty;
    return rows_[r - base_];
  }

  bool has_box(int r, int c) const { return c >= 1 && c <= static_cast<int>(row(r).size()); }

  int entry(int r, int c) const {
    if (!has_box(r, c)) throw std::invalid_argument("Tableau::entry: no such box");
    return row(r)[c - 1];
  }

  int box_count() const {
    int n = 0;
    for (const Word& r : rows_) n += static_cast<int>(r.size());
    return n;
  }

  std::vector<std::pair<int, int>> box_list() const {
    std::vector<std::pair<int, int>> out;
    for (int r = base_; r <= top_row(); ++r)
      for (int c = 1; c <= static_cast<int>(row(r).size()); ++c) out.emplace_back(r, c);
    return out;
  }

  // Row lengths of rows 1, 2, ...; only defined when no box sits below row 1.
  WeakComposition shape() const {
    if (!empty() && base_ < 1) throw std::invalid_argument("Tableau::shape: boxes below row 1");
    WeakComposition out;
    for (int r = 1; r <= top_row(); ++r) out.push_back(static_cast<int>(row(r).size()));
    return trimmed(std::move(out));
  }

  WeakComposition weight() const {
    Word all;
    for (const Word& r : rows_) all.insert(all.end(), r.begin(), r.end());
    return word_weight(all);
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  int base_ = 1;
  std::vector<Word> rows_;
};

// Rows read top to bottom, each left to right.
inline Word row_word(const Tableau& T) {
  Word out;
  for (int r = T.top_row(); r >= T.base_row(); --r) {
    const Word& rw = T.row(r);
    out.insert(out.end(), rw.begin(), rw.end());
  }
  return out;
}

// Columns read top to bottom, rightmost column first.
inline Word col_word(const Tableau& T) {
  int width = 0;
  for (const Word& r : T.rows()) width = std::max(width, static_cast<int>(r.size()));
  Word out;
  for (int c = width; c >= 1; --c)
    for (int r = T.top_row(); r >= T.base_row(); --r)
      if (T.has_box(r, c)) out.push_back(T.entry(r, c));
  return out;
}

inline bool rows_weakly_decreasing(const Tableau& T) {
  for (const Word& r : T.rows())
    if (!std::is_sorted(r.rbegin(), r.rend())) return false;
  return true;
}

inline bool columns_distinct(const Tableau& T) {
  int width = 0;
  for (const Word& r : T.rows()) width = std::max(width, static_cast<int>(r.size()));
  for (int c = 1; c <= width; ++c) {
    std::set<int> seen;
    for (int r = T.base_row(); r <= T.top_row(); ++r)
      if (T.has_box(r, c) && !seen.insert(T.entry(r, c)).second) return false;
  }
  return true;
}

// The key covering rule quantified over all column pairs.
inline bool key_covering_rule(const Tableau& T) {
  int width = 0;
  for (const Word& r : T.rows()) width = std::max(width, static_cast<int>(r.size()));
  for (int c = 1; c <= width; ++c)
    for (int i = T.base_row(); i <= T.top_row(); ++i) {
      if (!T.has_box(i, c)) continue;
      for (int k = i + 1; k <= T.top_row(); ++k) {
        if (!T.has_box(k, c)) continue;
        if (T.entry(i, c) > T.entry(k, c) &&
            (!T.has_box(i, c + 1) || T.entry(i, c + 1) <= T.entry(k, c)))
          return false;
      }
    }
  return true;
}

inline bool is_key_tableau(const Tableau& T) {
  if (!T.empty() && T.base_row() < 1) return false;
  return rows_weakly_decreasing(T) && columns_distinct(T) && key_covering_rule(T);
}

// Entries in row r bounded by phi(r); rows below 1 never satisfy a flag.
inline bool is_flagged(const Tableau& T, const Flag& phi) {
  if (!T.empty() && T.base_row() < 1) return false;
  for (int r = std::max(1, T.base_row()); r <= T.top_row(); ++r)
    for (int x : T.row(r))
      if (x > phi(r)) return false;
  return true;
}

// Rows strictly increase rightward and columns strictly increase upward
// (insertion tableaux).
inline bool is_increasing_tableau(const Tableau& T) {
  for (const Word& r : T.rows())
    if (std::adjacent_find(r.begin(), r.end(), [](int a, int b) { return a >= b; }) != r.end())
      return false;
  for (int r = T.base_row(); r < T.top_row(); ++r)
    for (int c = 1; c <= static_cast<int>(T.row(r + 1).size()); ++c)
      if (T.has_box(r, c) && T.entry(r, c) >= T.entry(r + 1, c)) return false;
  return true;
}

// Semistandard in French convention: partition shape based at row 1, rows
// weakly increasing rightward, columns strictly increasing upward.
inline bool is_ssyt(const Tableau& T) {
  if (T.empty()) return true;
  if (T.base_row() != 1) return false;
  for (int r = 1; r < T.top_row(); ++r)
    if (T.row(r + 1).size() > T.row(r).size()) return false;
  for (const Word& r : T.rows())
    if (!std::is_sorted(r.begin(), r.end())) return false;
  for (int r = 1; r < T.top_row(); ++r)
    for (int c = 1; c <= static_cast<int>(T.row(r + 1).size()); ++c)
      if (T.entry(r, c) >= T.entry(r + 1, c)) return false;
  return true;
}

// All key tableaux of shape alpha with row r bounded by phi(r).  The answer
// only depends on phi through rows 1..len(alpha).
inline std::vector<Tableau> enumerate_sskt(const WeakComposition& alpha, const Flag& phi) {
  WeakComposition a = trimmed(alpha);
  int L = static_cast<int>(a.size());

  // Candidate rows: weakly decreasing words of the right length over [1, phi(r)].
  std::vector<std::vector<Word>> per_row(L);
  for (int r = 1; r <= L; ++r) {
    Word cur;
    auto gen = [&](auto&& self, int remaining, int maxval) -> void {
      if (remaining == 0) {
        per_row[r - 1].push_back(cur);
        return;
      }
      for (int v = maxval; v >= 1; --v) {
        cur.push_back(v);
        self(self, remaining - 1, v);
        cur.pop_back();
      }
    };
    gen(gen, a[r - 1], phi(r));
  }

  std::vector<Tableau> out;
  std::vector<Word> rows(L);
  auto fill = [&](auto&& self, int r) -> void {
    if (r > L) {
      Tableau t = Tableau::from_rows(1, rows);
      if (is_key_tableau(t)) out.push_back(std::move(t));
      return;
    }
    for (const Word& cand : per_row[r - 1]) {
      bool ok = true;
      for (int rr = 1; rr < r && ok; ++rr)
        for (int c = 1; c <= static_cast<int>(std::min(cand.size(), rows[rr - 1].size())); ++c)
          if (cand[c - 1] == rows[rr - 1][c - 1]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      rows[r - 1] = cand;
      self(self, r + 1);
    }
    rows[r - 1].clear();
  };
  fill(fill, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Standardization of a key tableau: the boxes holding i are replaced, from the
// rightmost column leftward, by consecutive values following all entries < i.
inline Tableau std_key(const Tableau& T) {
  if (!is_key_tableau(T)) throw std::invalid_argument("std_key: not a key tableau");
  WeakComposition beta = T.weight();
  std::map<int, std::vector<std::pair<int, int>>> by_value; // value -> (col, row)
  for (auto [r, c] : T.box_list()) by_value[T.entry(r, c)].emplace_back(c, r);
  std::map<int, std::map<int, int>> entries; // row -> col -> new value
  int used = 0;
  for (int v = 1; v <= static_cast<int>(beta.size()); ++v) {
    auto it = by_value.find(v);
    if (it == by_value.end()) continue;
    auto boxes = it->second;
    std::sort(boxes.rbegin(), boxes.rend()); // columns descending
    for (auto [c, r] : boxes) entries[r][c] = ++used;
  }
  if (T.empty()) return {};
  std::vector<Word> rows(T.top_row());
  for (auto& [r, cols] : entries) {
    Word& rw = rows[r - 1];
    rw.resize(cols.size());
    for (auto& [c, val] : cols) rw[c - 1] = val;
  }
  return Tableau::from_rows(1, std::move(rows));
}

// The unique semistandard tableau of weight alpha whose column c+1 entry set
// is contained in column c's: build by stacking an i on top of each of the
// first alpha_i columns.
inline Tableau key_of(const WeakComposition& alpha) {
  WeakComposition a = trimmed(alpha);
  std::vector<Word> cols; // cols[c-1] bottom to top
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
    if (a[i - 1] > static_cast<int>(cols.size())) cols.resize(a[i - 1]);
    for (int c = 0; c < a[i - 1]; ++c) cols[c].push_back(i);
  }
  std::vector<Word> rows;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (int r = 0; r < static_cast<int>(cols[c].size()); ++r) {
      if (r >= static_cast<int>(rows.size())) rows.resize(r + 1);
      if (static_cast<int>(rows[r].size()) != c)
        throw std::logic_error("key_of: column heights out of order");
      rows[r].push_back(cols[c][r]);
    }
  return Tableau::from_rows(1, std::move(rows));
}

// Standardization of a semistandard tableau: equal entries are renumbered left
// to right.
inline Tableau std_ssyt(const Tableau& T) {
  if (!is_ssyt(T)) throw std::invalid_argument("std_ssyt: not semistandard");
  std::map<int, std::vector<std::pair<int, int>>> by_value; // value -> (col, row)
  for (auto [r, c] : T.box_list()) by_value[T.entry(r, c)].emplace_back(c, r);
  std::vector<Word> rows(T.empty() ? 0 : T.top_row());
  int used = 0;
  for (auto& [v, boxes] : by_value) {
    std::sort(boxes.begin(), boxes.end()); // columns ascending
    for (auto [c, r] : boxes) {
      Word& rw = rows[r - 1];
      if (static_cast<int>(rw.size()) < c) rw.resize(c, 0);
      rw[c - 1] = ++used;
    }
  }
  return Tableau::from_rows(1, std::move(rows));
}

// The highest-weight element of SSKT(alpha, phi): column c holds the values
// 1..conjugate(alpha)_c upward through the rows of the shape.
inline Tableau highest_weight_sskt(const WeakComposition& alpha) {
  WeakComposition a = trimmed(alpha);
  std::vector<Word> rows(a.size());
  int width = 0;
  for (int x : a) width = std::max(width, x);
  for (int c = 1; c <= width; ++c) {
    int next = 0;
    for (int r = 1; r <= static_cast<int>(a.size()); ++r)
      if (a[r - 1] >= c) {
        if (static_cast<int>(rows[r - 1].size()) != c - 1)
          throw std::logic_error("highest_weight_sskt: shape scan out of order");
        rows[r - 1].push_back(++next);
      }
  }
  return Tableau::from_rows(1, std::move(rows));
}

// Shift a tableau N rows upward, optionally adding N to every entry.
inline Tableau shift_tableau(const Tableau& T, int N, bool shift_entries) {
  if (T.empty()) return T;
  std::vector<Word> rows = T.rows();
  if (shift_entries)
    for (Word& r : rows)
      for (int& x : r) x += N;
  return Tableau::from_rows(T.base_row() + N, std::move(rows));
}

} // namespace flagkey
