#pragma once
// Core combinatorics: words in the simple transpositions, weak compositions,
// finitely supported permutations of the positive integers, flags, and
// Coxeter-Knuth equivalence.
//
// Conventions used throughout the library:
//   * everything is 1-based (letters, positions, rows, columns);
//   * permutations act on positions from the right, (alpha . w)_i = alpha_{w(i)},
//     and w * s_i swaps positions i, i+1 of the one-line word;
//   * canonical forms drop trailing fixed points / zeros so that equality is
//     equality of the underlying functions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagkey {

using Word = std::vector<int>;            // letters i >= 1, i standing for s_i
using WeakComposition = std::vector<int>; // nonnegative parts

// ---------------------------------------------------------------------------
// Weak compositions

inline WeakComposition trimmed(WeakComposition a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// 1-based part access; zero beyond the stored length.
inline int part(const WeakComposition& a, int i) {
  if (i < 1) throw std::invalid_argument("part: index must be positive");
  return i <= static_cast<int>(a.size()) ? a[i - 1] : 0;
}

inline int total(const WeakComposition& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline int comp_length(const WeakComposition& a) {
  int n = static_cast<int>(a.size());
  while (n > 0 && a[n - 1] == 0) --n;
  return n;
}

inline bool is_partition(const WeakComposition& a) {
  WeakComposition t = trimmed(a);
  return std::is_sorted(t.rbegin(), t.rend());
}

// Conjugate shape: c_i = #{r : a_r >= i}.
inline WeakComposition conjugate(const WeakComposition& a) {
  int m = 0;
  for (int x : a) m = std::max(m, x);
  WeakComposition c(m, 0);
  for (int x : a)
    for (int i = 0; i < x; ++i) ++c[i];
  return c;
}

// Prefix-sum order: a <= b iff every prefix sum of a is at most the matching
// prefix sum of b and the totals agree.  Only compositions of the same number
// are comparable.
inline bool dominated_by(const WeakComposition& a, const WeakComposition& b) {
  int n = static_cast<int>(std::max(a.size(), b.size()));
  long long pa = 0, pb = 0;
  for (int i = 1; i <= n; ++i) {
    pa += part(a, i);
    pb += part(b, i);
    if (pa > pb) return false;
  }
  return pa == pb;
}

// Multiplicity vector of a word: entry i counts the letters equal to i.
inline WeakComposition word_weight(const Word& w) {
  WeakComposition out;
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("word_weight: letters must be positive");
    if (static_cast<int>(out.size()) < x) out.resize(x, 0);
    ++out[x - 1];
  }
  return out;
}

inline WeakComposition swap_parts(const WeakComposition& a, int i) { // alpha . s_i
  if (i < 1) throw std::invalid_argument("swap_parts: index must be positive");
  WeakComposition out = a;
  if (static_cast<int>(out.size()) < i + 1) out.resize(i + 1, 0);
  std::swap(out[i - 1], out[i]);
  return trimmed(out);
}

// ---------------------------------------------------------------------------
// Permutations

class Permutation {
 public:
  Permutation() = default; // identity

  static Permutation identity() { return {}; }

  static Permutation from_oneline(std::vector<int> w) {
    std::vector<bool> seen(w.size(), false);
    for (int x : w) {
      if (x < 1 || x > static_cast<int>(w.size()) || seen[x - 1])
        throw std::invalid_argument("Permutation: not a one-line word");
      seen[x - 1] = true;
    }
    Permutation p;
    p.line_ = std::move(w);
    p.trim();
    return p;
  }

  static Permutation s(int i) {
    if (i < 1) throw std::invalid_argument("Permutation::s: index must be positive");
    std::vector<int> w(i + 1);
    std::iota(w.begin(), w.end(), 1);
    std::swap(w[i - 1], w[i]);
    return from_oneline(std::move(w));
  }

  // Product s_{w_1} s_{w_2} ... s_{w_k}, multiplied left to right.
  static Permutation from_word(const Word& rho) {
    int m = 1;
    for (int x : rho) m = std::max(m, x + 1);
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    for (int x : rho) std::swap(w[x - 1], w[x]);
    return from_oneline(std::move(w));
  }

  int operator()(int i) const {
    if (i < 1) throw std::invalid_argument("Permutation: argument must be positive");
    return i <= static_cast<int>(line_.size()) ? line_[i - 1] : i;
  }

  // Working rank: smallest m with w(i) = i for all i > m.
  int rank() const { return static_cast<int>(line_.size()); }

  std::vector<int> oneline(int m = 0) const {
    std::vector<int> w = line_;
    for (int i = static_cast<int>(w.size()) + 1; i <= m; ++i) w.push_back(i);
    return w;
  }

  Permutation times_s(int i) const { // w * s_i
    std::vector<int> w = oneline(i + 1);
    std::swap(w[i - 1], w[i]);
    return from_oneline(std::move(w));
  }

  Permutation operator*(const Permutation& o) const { // (u*v)(i) = u(v(i))
    int m = std::max(rank(), o.rank());
    std::vector<int> w(m);
    for (int i = 1; i <= m; ++i) w[i - 1] = (*this)(o(i));
    return from_oneline(std::move(w));
  }

  Permutation inverse() const {
    std::vector<int> w(line_.size());
    for (int i = 1; i <= static_cast<int>(line_.size()); ++i) w[line_[i - 1] - 1] = i;
    return from_oneline(std::move(w));
  }

  long long length() const { // inversion count
    long long n = 0;
    for (size_t i = 0; i < line_.size(); ++i)
      for (size_t j = i + 1; j < line_.size(); ++j)
        if (line_[i] > line_[j]) ++n;
    return n;
  }

  bool is_identity() const { return line_.empty(); }
  bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

  auto operator<=>(const Permutation&) const = default;

 private:
  void trim() {
    while (!line_.empty() && line_.back() == static_cast<int>(line_.size())) line_.pop_back();
  }
  std::vector<int> line_;
};

// True iff the word multiplies with length growing at every step.
inline bool is_reduced_word(const Word& rho) {
  int m = 1;
  for (int x : rho) {
    if (x < 1) throw std::invalid_argument("is_reduced_word: letters must be positive");
    m = std::max(m, x + 1);
  }
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  for (int x : rho) {
    if (w[x - 1] > w[x]) return false;
    std::swap(w[x - 1], w[x]);
  }
  return true;
}

inline std::set<Word> reduced_words(const Permutation& w) {
  if (w.is_identity()) return {Word{}};
  std::set<Word> out;
  for (int i = 1; i < w.rank(); ++i) {
    if (!w.right_descent(i)) continue;
    for (Word rho : reduced_words(w.times_s(i))) {
      rho.push_back(i);
      out.insert(std::move(rho));
    }
  }
  return out;
}

inline std::vector<Permutation> symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be positive");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_oneline(w));
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Coxeter-Knuth equivalence

// Words one move away from rho.  The three relations act on windows of three
// consecutive letters:  x z y ~ x y z and y x z ~ x y z for y < z < x resp.
// y < x < z, and the braid move i (i+1) i ~ (i+1) i (i+1).
inline std::vector<Word> ck_neighbors(const Word& rho) {
  std::vector<Word> out;
  for (size_t j = 0; j + 3 <= rho.size(); ++j) {
    int p = rho[j], q = rho[j + 1], r = rho[j + 2];
    if (std::min(q, r) < p && p < std::max(q, r)) {
      Word w = rho;
      std::swap(w[j + 1], w[j + 2]);
      out.push_back(std::move(w));
    }
    if (std::min(p, q) < r && r < std::max(p, q)) {
      Word w = rho;
      std::swap(w[j], w[j + 1]);
      out.push_back(std::move(w));
    }
    if (p == r && (q == p + 1 || q == p - 1)) {
      Word w = rho;
      w[j] = q;
      w[j + 1] = p;
      w[j + 2] = q;
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline std::set<Word> ck_class(const Word& rho) {
  if (!is_reduced_word(rho)) throw std::invalid_argument("ck_class: word is not reduced");
  std::set<Word> seen{rho};
  std::vector<Word> frontier{rho};
  while (!frontier.empty()) {
    Word cur = std::move(frontier.back());
    frontier.pop_back();
    for (Word& nb : ck_neighbors(cur))
      if (seen.insert(nb).second) frontier.push_back(std::move(nb));
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Sorting a composition

// Returns (lambda, w) with lambda the decreasing sort of alpha, alpha . w =
// lambda, and w of minimal length among such permutations (stable selection:
// equal parts keep their original order).
inline std::pair<WeakComposition, Permutation> sort_and_minimal_sorter(const WeakComposition& alpha) {
  WeakComposition a = trimmed(alpha);
  int n = static_cast<int>(a.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i] > a[j]; });
  WeakComposition lambda(n);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) {
    lambda[i] = a[idx[i]];
    w[i] = idx[i] + 1;
  }
  return {trimmed(std::move(lambda)), Permutation::from_oneline(std::move(w))};
}

inline WeakComposition act(const WeakComposition& a, const Permutation& w) { // alpha . w
  int n = std::max(comp_length(a), w.rank());
  WeakComposition out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = part(a, w(i));
  return trimmed(std::move(out));
}

// ---------------------------------------------------------------------------
// Flags

// A flag is a weakly increasing phi : Z>0 -> Z>0 with phi(i) >= i, stored on a
// finite prefix and extended by phi(i) = max(i, phi(n0)) beyond it.  The
// canonical form drops trailing values the extension rule regenerates, so the
// standard flag phi(i) = i stores nothing.
class Flag {
 public:
  Flag() = default;

  explicit Flag(std::vector<int> v) : values_(std::move(v)) {
    for (int i = 1; i <= static_cast<int>(values_.size()); ++i) {
      if (values_[i - 1] < i || (i > 1 && values_[i - 1] < values_[i - 2]))
        throw std::invalid_argument("Flag: values must be weakly increasing with phi(i) >= i");
    }
    canonicalize();
  }

  static Flag standard() { return {}; }

  int operator()(int i) const {
    if (i < 1) throw std::invalid_argument("Flag: index must be positive");
    if (i <= static_cast<int>(values_.size())) return values_[i - 1];
    int last = values_.empty() ? 0 : values_.back();
    return std::max(i, last);
  }

  bool is_standard() const { return values_.empty(); }
  const std::vector<int>& stored() const { return values_; }

  std::vector<int> values(int len) const {
    std::vector<int> out(len);
    for (int i = 1; i <= len; ++i) out[i - 1] = (*this)(i);
    return out;
  }

  // Decrement at a single index; the result must again be a flag.
  Flag minus_e(int i) const {
    std::vector<int> v = values(std::max(i, static_cast<int>(values_.size())));
    --v[i - 1];
    return Flag(std::move(v));
  }

  bool agrees_with(const Flag& o, int upto) const {
    for (int i = 1; i <= upto; ++i)
      if ((*this)(i) != o(i)) return false;
    return true;
  }

  auto operator<=>(const Flag&) const = default;

 private:
  void canonicalize() {
    while (!values_.empty()) {
      int i = static_cast<int>(values_.size());
      int prev = i >= 2 ? values_[i - 2] : 0;
      if (values_[i - 1] == std::max(i, prev))
        values_.pop_back();
      else
        break;
    }
  }
  std::vector<int> values_;
};

// All flags on [len] with phi(i) <= i + excess, as canonical Flag values.
inline std::vector<Flag> flags_within(int len, int excess) {
  std::vector<Flag> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > len) {
      out.push_back(Flag(cur));
      return;
    }
    int lo = std::max(i, cur.empty() ? 1 : cur.back());
    for (int v = lo; v <= i + excess; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace flagkey
