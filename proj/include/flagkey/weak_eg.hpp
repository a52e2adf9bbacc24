#pragma once
// The weak Edelman-Greene correspondence: weak descent tableaux, the lift
// operators that straighten an insertion tableau into its weak counterpart,
// Yamanouchi words, and reduced factorizations with flags.

#include <climits>
#include <optional>

#include "flagkey/core.hpp"
#include "flagkey/eg.hpp"
#include "flagkey/tableau.hpp"

namespace flagkey {

// ---------------------------------------------------------------------------
// Weak descent tableaux

// Blocks are placed top-down: a block wants the row named by its first letter
// but is pushed directly below the previous block when that row is not
// strictly lower.  Empty blocks are skipped.  Rows may end up at or below 0.
inline std::map<int, Word, std::greater<int>> weak_placement(const IncreasingFactorization& f) {
  std::map<int, Word, std::greater<int>> rows;
  int prev = INT_MAX;
  for (const Word& b : f.display()) {
    if (b.empty()) continue;
    int r = std::min(b.front(), prev - 1);
    rows[r] = b;
    prev = r;
  }
  return rows;
}

inline Tableau tableau_of_placement(const std::map<int, Word, std::greater<int>>& rows) {
  if (rows.empty()) return {};
  int top = rows.begin()->first, bottom = rows.rbegin()->first;
  std::vector<Word> out(top - bottom + 1);
  for (const auto& [r, b] : rows) out[r - bottom] = b;
  return Tableau::from_rows(bottom, std::move(out));
}

inline Tableau weak_descent_tableau(const Word& sigma) {
  if (!is_reduced_word(sigma)) throw std::invalid_argument("weak_descent_tableau: word is not reduced");
  return tableau_of_placement(weak_placement(IncreasingFactorization::run(sigma)));
}

inline bool is_virtual_word(const Word& sigma) {
  if (!is_reduced_word(sigma)) throw std::invalid_argument("is_virtual_word: word is not reduced");
  auto rows = weak_placement(IncreasingFactorization::run(sigma));
  return !rows.empty() && rows.rbegin()->first <= 0;
}

// des(sigma): the shape of the weak descent tableau; virtual words carry no
// descent composition.
inline std::optional<WeakComposition> weak_descent_composition(const Word& sigma) {
  Tableau t = weak_descent_tableau(sigma);
  if (!t.empty() && t.base_row() < 1) return std::nullopt;
  return t.shape();
}

// ---------------------------------------------------------------------------
// The lift of a pair of increasing words

// lift(tau, sigma) for strictly increasing words.  Letters of sigma are paired
// right to left: each tau letter, largest position first, takes the largest
// still earlier sigma letter not exceeding it.  Unpaired sigma letters
// x_1 < ... < x_m cut sigma into paired segments sigma^(1) .. sigma^(m+1) and
// tau into matching segments (after its unpaired prefix tau^(0)); then
//   tau~   = tau^(0) tau^(1) x_1 tau^(2) x_2 ... x_m tau^(m+1)
//   sigma~ = sigma^(1) sigma~^(2) ... sigma~^(m+1)
// where sigma~^(j+1) decrements its first b_j letters, b_j being the longest
// prefix on which tau^(j+1) and sigma^(j+1) both run x_j+1, x_j+2, ...
inline std::pair<Word, Word> lift_pair(const Word& tau, const Word& sigma) {
  auto strictly_increasing = [](const Word& w) {
    return std::adjacent_find(w.begin(), w.end(), [](int a, int b) { return a >= b; }) == w.end();
  };
  if (!strictly_increasing(tau) || !strictly_increasing(sigma))
    throw std::invalid_argument("lift_pair: arguments must strictly increase");

  const int s = static_cast<int>(tau.size()), n = static_cast<int>(sigma.size());
  std::vector<int> pair_of_tau(s, -1);
  int bound = n, t = s - 1;
  for (; t >= 0; --t) {
    int idx = static_cast<int>(std::upper_bound(sigma.begin(), sigma.begin() + bound, tau[t]) -
                               sigma.begin()) - 1;
    if (idx < 0) break; // every remaining sigma letter exceeds tau[t]
    pair_of_tau[t] = idx;
    bound = idx;
  }
  const int prefix_end = t + 1; // tau[0 .. prefix_end) is the unpaired prefix

  std::vector<bool> paired(n, false);
  for (int u = prefix_end; u < s; ++u) paired[pair_of_tau[u]] = true;

  // Segment sigma at its unpaired letters; tau letters after the prefix align
  // with the paired sigma positions in order.
  std::vector<Word> sigma_seg(1), tau_seg(1);
  Word crossers;
  int tpos = prefix_end;
  for (int u = 0; u < n; ++u) {
    if (paired[u]) {
      sigma_seg.back().push_back(sigma[u]);
      tau_seg.back().push_back(tau[tpos++]);
    } else {
      crossers.push_back(sigma[u]);
      sigma_seg.emplace_back();
      tau_seg.emplace_back();
    }
  }

  Word tau_out(tau.begin(), tau.begin() + prefix_end);
  Word sigma_out;
  const int m = static_cast<int>(crossers.size());
  for (int j = 0; j <= m; ++j) {
    tau_out.insert(tau_out.end(), tau_seg[j].begin(), tau_seg[j].end());
    if (j < m) tau_out.push_back(crossers[j]);
    Word seg = sigma_seg[j];
    if (j > 0) {
      int x = crossers[j - 1], b = 0;
      while (b < static_cast<int>(seg.size()) && seg[b] == x + b + 1 && tau_seg[j][b] == x + b + 1)
        ++b;
      for (int i = 0; i < b; ++i) --seg[i];
    }
    sigma_out.insert(sigma_out.end(), seg.begin(), seg.end());
  }

  if (!strictly_increasing(tau_out) || !strictly_increasing(sigma_out))
    throw std::logic_error("lift_pair: result failed to strictly increase");
  return {std::move(tau_out), std::move(sigma_out)};
}

// lift_i moves letters from block i into block i+1.  It acts only when both
// blocks are nonempty and the lifted left block keeps its first letter;
// otherwise it is the identity.
inline IncreasingFactorization lift_block(const IncreasingFactorization& f, int i) {
  if (i < 1 || i + 1 > f.block_count())
    throw std::invalid_argument("lift_block: index out of range");
  const Word& tau = f.block(i + 1);
  const Word& sig = f.block(i);
  if (tau.empty() || sig.empty()) return f;
  auto [t2, s2] = lift_pair(tau, sig);
  if (t2.front() != tau.front()) return f;
  return f.with_block(i + 1, std::move(t2)).with_block(i, std::move(s2));
}

// lift_{[i,j]} = lift_j ... lift_{i+1} lift_i; faithful when every step moves.
inline std::pair<IncreasingFactorization, bool> lift_run_blocks(const IncreasingFactorization& f0,
                                                                int i, int j) {
  IncreasingFactorization f = f0;
  bool faithful = true;
  for (int t = i; t <= j; ++t) {
    IncreasingFactorization g = lift_block(f, t);
    if (g == f) faithful = false;
    f = std::move(g);
  }
  return {std::move(f), faithful};
}

// Repeatedly apply the faithful run with the largest end, smallest start,
// until no faithful run remains.
inline IncreasingFactorization lift_full(IncreasingFactorization f) {
  const int k = f.block_count();
  for (long guard = 0;; ++guard) {
    if (guard > 1000000) throw std::logic_error("lift_full: no fixed point reached");
    int besti = -1, bestj = -1;
    for (int j = k - 1; j >= 1 && bestj < 0; --j)
      for (int i = 1; i <= j; ++i)
        if (lift_run_blocks(f, i, j).second) {
          besti = i;
          bestj = j;
          break;
        }
    if (bestj < 0) return f;
    f = lift_run_blocks(f, besti, bestj).first;
  }
}

// Straighten an increasing tableau with reduced reading word: lift the run
// factorization of its row word, then drop every nonempty block into the row
// named by its first letter.
inline Tableau lift_tableau(const Tableau& T) {
  Word rw = row_word(T);
  IncreasingFactorization lifted = lift_full(IncreasingFactorization::run(rw));
  std::map<int, Word, std::greater<int>> rows;
  int prev = INT_MAX;
  for (const Word& b : lifted.display()) {
    if (b.empty()) continue;
    int r = b.front();
    if (r >= prev) throw std::logic_error("lift_tableau: lifted blocks collide");
    rows[r] = b;
    prev = r;
  }
  return tableau_of_placement(rows);
}

// ---------------------------------------------------------------------------
// Weak insertion and recording

inline Tableau weak_p_word(const Word& rho) { return lift_tableau(eg_insert_word(rho)); }

inline Tableau weak_p(const IncreasingFactorization& f) { return weak_p_word(f.word()); }

// Recording tableau: after each block the lifted insertion tableau is
// recomputed; boxes gained while inserting block j (numbered from the right)
// are labeled j.
inline Tableau weak_q(const IncreasingFactorization& f) {
  const int k = f.block_count();
  std::set<std::pair<int, int>> have;
  std::map<int, std::map<int, int>> entries; // row -> col -> label
  Word prefix;
  for (int d = 0; d < k; ++d) {
    const Word& b = f.display()[d];
    if (b.empty()) continue;
    prefix.insert(prefix.end(), b.begin(), b.end());
    Tableau P = weak_p_word(prefix);
    auto boxes = P.box_list();
    if (boxes.size() != prefix.size())
      throw std::logic_error("weak_q: box count out of step");
    std::set<std::pair<int, int>> now(boxes.begin(), boxes.end());
    for (auto [r, c] : have)
      if (!now.count({r, c})) throw std::logic_error("weak_q: shapes failed to nest");
    for (auto [r, c] : now)
      if (!have.count({r, c})) entries[r][c] = k - d;
    have = std::move(now);
  }
  std::map<int, Word, std::greater<int>> rows;
  for (auto& [r, cols] : entries) {
    Word rw(cols.size());
    for (auto& [c, v] : cols) {
      if (c < 1 || c > static_cast<int>(rw.size()))
        throw std::logic_error("weak_q: row has a gap");
      rw[c - 1] = v;
    }
    rows[r] = std::move(rw);
  }
  return tableau_of_placement(rows);
}

inline Tableau weak_q_word(const Word& rho) { return weak_q(IncreasingFactorization::trivial(rho)); }

// ---------------------------------------------------------------------------
// Yamanouchi words

// A reduced word is Yamanouchi when it is non-virtual and its descent
// composition is minimal (prefix-sum order) among the non-virtual members of
// its Coxeter-Knuth class.
inline bool is_yamanouchi(const Word& rho) {
  auto d0 = weak_descent_composition(rho);
  if (!d0) return false;
  for (const Word& tau : ck_class(rho)) {
    auto d = weak_descent_composition(tau);
    if (d && !dominated_by(*d0, *d)) return false;
  }
  return true;
}

inline std::set<Word> yamanouchi_words(const Permutation& w) {
  std::set<Word> out;
  std::set<Word> remaining = reduced_words(w);
  while (!remaining.empty()) {
    std::set<Word> cls = ck_class(*remaining.begin());
    std::vector<std::pair<WeakComposition, Word>> described;
    for (const Word& tau : cls) {
      remaining.erase(tau);
      if (auto d = weak_descent_composition(tau)) described.emplace_back(*d, tau);
    }
    for (const auto& [d, tau] : described) {
      bool minimal = true;
      for (const auto& [d2, tau2] : described)
        if (!dominated_by(d, d2)) {
          minimal = false;
          break;
        }
      if (minimal) out.insert(tau);
    }
  }
  return out;
}

inline std::set<Word> yr_alpha(const Permutation& w, const WeakComposition& alpha) {
  std::set<Word> out;
  WeakComposition a = trimmed(alpha);
  for (const Word& rho : yamanouchi_words(w))
    if (*weak_descent_composition(rho) == a) out.insert(rho);
  return out;
}

// ---------------------------------------------------------------------------
// Flagged reduced factorizations

// A factorization is phi-flagged when every nonempty block i starts with a
// letter x satisfying phi(x) >= i (equivalently, letter x only appears in the
// first phi(x) blocks).
inline bool is_flagged(const IncreasingFactorization& f, const Flag& phi) {
  for (int j = 1; j <= f.block_count(); ++j)
    if (!f.block(j).empty() && phi(f.block(j).front()) < j) return false;
  return true;
}

// All ways to cut the reduced words of w into n increasing, possibly empty
// blocks.
inline std::vector<IncreasingFactorization> enumerate_rf(const Permutation& w, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_rf: block count must be nonnegative");
  std::vector<IncreasingFactorization> out;
  for (const Word& rho : reduced_words(w)) {
    std::vector<Word> blocks(n);
    auto rec = [&](auto&& self, size_t pos, int blk) -> void {
      if (blk == n) {
        if (pos == rho.size()) out.emplace_back(blocks);
        return;
      }
      blocks[blk].clear();
      self(self, pos, blk + 1); // empty block
      for (size_t end = pos; end < rho.size(); ++end) {
        if (end > pos && rho[end] <= rho[end - 1]) break;
        blocks[blk].push_back(rho[end]);
        self(self, end + 1, blk + 1);
      }
      blocks[blk].clear();
    };
    rec(rec, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IncreasingFactorization> enumerate_rfc(const Permutation& w, const Flag& phi,
                                                          int n) {
  std::vector<IncreasingFactorization> out;
  for (auto& f : enumerate_rf(w, n))
    if (is_flagged(f, phi)) out.push_back(std::move(f));
  return out;
}

// Default block count: letters of reduced words of w are < rank(w), so a
// nonempty block i needs phi(x) >= i for some letter x < rank(w).
inline int default_block_count(const Permutation& w, const Flag& phi) {
  if (w.is_identity()) return 1;
  return phi(w.rank() - 1);
}

} // namespace flagkey
