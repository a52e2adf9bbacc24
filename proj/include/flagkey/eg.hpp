#pragma once
// Edelman-Greene row insertion for reduced words, recording tableaux for
// factorizations into increasing blocks, and the column insertion used by the
// weakly increasing factorization model.

#include "flagkey/core.hpp"
#include "flagkey/tableau.hpp"

namespace flagkey {

// A factorization of a word into blocks of strictly increasing letters.
// Blocks are stored in display order (leftmost first) and numbered from the
// right: block(1) is the rightmost block, block(k) the leftmost, so the
// underlying word is block(k) block(k-1) ... block(1).
class IncreasingFactorization {
 public:
  IncreasingFactorization() = default; // zero blocks

  explicit IncreasingFactorization(std::vector<Word> display) : blocks_(std::move(display)) {
    for (const Word& b : blocks_) {
      for (int x : b)
        if (x < 1) throw std::invalid_argument("IncreasingFactorization: letters must be positive");
      if (std::adjacent_find(b.begin(), b.end(), [](int a, int c) { return a >= c; }) != b.end())
        throw std::invalid_argument("IncreasingFactorization: blocks must strictly increase");
    }
  }

  // Maximal strictly increasing runs.
  static IncreasingFactorization run(const Word& w) {
    std::vector<Word> blocks;
    for (size_t i = 0; i < w.size();) {
      size_t j = i + 1;
      while (j < w.size() && w[j] > w[j - 1]) ++j;
      blocks.emplace_back(w.begin() + i, w.begin() + j);
      i = j;
    }
    return IncreasingFactorization(std::move(blocks));
  }

  // One letter per block.
  static IncreasingFactorization trivial(const Word& w) {
    std::vector<Word> blocks;
    for (int x : w) blocks.push_back({x});
    return IncreasingFactorization(std::move(blocks));
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }

  // 1-based from the right.
  const Word& block(int j) const {
    if (j < 1 || j > block_count())
      throw std::invalid_argument("IncreasingFactorization::block: index out of range");
    return blocks_[block_count() - j];
  }

  const std::vector<Word>& display() const { return blocks_; }

  Word word() const {
    Word out;
    for (const Word& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  // (len block(1), ..., len block(k)).
  WeakComposition weight() const {
    WeakComposition out(block_count());
    for (int j = 1; j <= block_count(); ++j) out[j - 1] = static_cast<int>(block(j).size());
    return out;
  }

  IncreasingFactorization with_block(int j, Word b) const {
    if (j < 1 || j > block_count())
      throw std::invalid_argument("IncreasingFactorization::with_block: index out of range");
    std::vector<Word> blocks = blocks_;
    blocks[block_count() - j] = std::move(b);
    return IncreasingFactorization(std::move(blocks));
  }

  IncreasingFactorization shifted(int N) const {
    std::vector<Word> blocks = blocks_;
    for (Word& b : blocks)
      for (int& x : b) x += N;
    return IncreasingFactorization(std::move(blocks));
  }

  auto operator<=>(const IncreasingFactorization&) const = default;

 private:
  std::vector<Word> blocks_;
};

// One Edelman-Greene bump of x into increasing tableau P; returns the new
// tableau and the box the insertion finally created.
//
// Row step: if x is at least every entry, append it.  Otherwise let y be the
// smallest entry larger than x; if the row already holds x and y = x+1 the row
// is left alone, otherwise x replaces y; either way y is bumped upward.
inline std::pair<Tableau, std::pair<int, int>> eg_bump(const Tableau& P, int x) {
  if (!P.empty() && P.base_row() != 1)
    throw std::invalid_argument("eg_bump: insertion tableaux are based at row 1");
  std::vector<Word> rows(P.rows());
  int cur = x;
  for (int r = 1;; ++r) {
    if (r > static_cast<int>(rows.size())) rows.resize(r);
    Word& row = rows[r - 1];
    if (row.empty() || cur >= row.back()) {
      if (!row.empty() && cur == row.back())
        throw std::logic_error("eg_bump: duplicate append, word was not reduced");
      row.push_back(cur);
      return {Tableau::from_rows(1, std::move(rows)), {r, static_cast<int>(row.size())}};
    }
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    int y = *it;
    if (y == cur + 1 && std::binary_search(row.begin(), row.end(), cur)) {
      // row unchanged
    } else {
      *it = cur;
    }
    cur = y;
  }
}

inline Tableau eg_insert_word(const Word& rho) {
  if (!is_reduced_word(rho)) throw std::invalid_argument("eg_insert_word: word is not reduced");
  Tableau P;
  for (int x : rho) P = eg_bump(P, x).first;
  return P;
}

// Insertion and recording pair for a factorization.  Boxes created while
// inserting a block get the block's classical label: blocks are inserted left
// to right and the t-th inserted block is labeled t (so the rightmost block
// carries the largest label).
inline std::pair<Tableau, Tableau> eg_pair(const IncreasingFactorization& f) {
  if (!is_reduced_word(f.word())) throw std::invalid_argument("eg_pair: word is not reduced");
  Tableau P;
  std::vector<Word> qrows;
  int label = 0;
  for (const Word& b : f.display()) {
    ++label;
    for (int x : b) {
      auto [next, box] = eg_bump(P, x);
      P = std::move(next);
      auto [r, c] = box;
      if (r > static_cast<int>(qrows.size())) qrows.resize(r);
      if (static_cast<int>(qrows[r - 1].size()) != c - 1)
        throw std::logic_error("eg_pair: recording shape out of step");
      qrows[r - 1].push_back(label);
    }
  }
  return {std::move(P), Tableau::from_rows(1, std::move(qrows))};
}

inline Tableau eg_p(const IncreasingFactorization& f) { return eg_insert_word(f.word()); }
inline Tableau eg_q(const IncreasingFactorization& f) { return eg_pair(f).second; }

// Column insertion of x into a semistandard tableau; returns the new box.
//
// Column step: if x is larger than every entry the box lands on top of the
// column; if the column already holds x, move to the next column with x
// unchanged; otherwise x replaces the smallest entry above it, which moves on.
inline std::pair<Tableau, std::pair<int, int>> column_insert(const Tableau& T, int x) {
  std::vector<Word> rows(T.rows());
  if (!T.empty() && T.base_row() != 1)
    throw std::invalid_argument("column_insert: tableaux are based at row 1");
  int cur = x;
  for (int c = 1;; ++c) {
    int h = 0;
    while (h < static_cast<int>(rows.size()) && static_cast<int>(rows[h].size()) >= c) ++h;
    bool contains = false;
    int bump_row = 0;
    for (int r = 1; r <= h; ++r) {
      int v = rows[r - 1][c - 1];
      if (v == cur) contains = true;
      if (v > cur && bump_row == 0) bump_row = r;
    }
    if (h == 0 || rows[h - 1][c - 1] < cur) {
      if (h >= static_cast<int>(rows.size())) rows.resize(h + 1);
      if (static_cast<int>(rows[h].size()) != c - 1)
        throw std::logic_error("column_insert: shape is not a partition");
      rows[h].push_back(cur);
      return {Tableau::from_rows(1, std::move(rows)), {h + 1, c}};
    }
    if (contains) continue;
    int y = rows[bump_row - 1][c - 1];
    rows[bump_row - 1][c - 1] = cur;
    cur = y;
  }
}

// (v -> 0): column insert v back to front; the recording tableau marks the box
// created at each step.
inline std::pair<Tableau, Tableau> column_insert_word(const Word& v) {
  Tableau P;
  std::vector<Word> qrows;
  for (int t = 1; t <= static_cast<int>(v.size()); ++t) {
    int x = v[v.size() - t];
    auto [next, box] = column_insert(P, x);
    P = std::move(next);
    auto [r, c] = box;
    if (r > static_cast<int>(qrows.size())) qrows.resize(r);
    if (static_cast<int>(qrows[r - 1].size()) != c - 1)
      throw std::logic_error("column_insert_word: recording shape out of step");
    qrows[r - 1].push_back(t);
  }
  return {std::move(P), Tableau::from_rows(1, std::move(qrows))};
}

} // namespace flagkey
