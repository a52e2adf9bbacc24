#pragma once
// Flagged key polynomials by four routes (tableau enumeration, isobaric
// operator chains, flag recursion, weakly increasing factorizations), flagged
// Schubert polynomials, and key expansions.

#include "flagkey/eg.hpp"
#include "flagkey/polynomial.hpp"
#include "flagkey/tableau.hpp"
#include "flagkey/weak_eg.hpp"

namespace flagkey {

// ---------------------------------------------------------------------------
// Route 1: generating function of flagged key tableaux.

inline IntPolynomial flagged_key_enum(const WeakComposition& alpha, const Flag& phi) {
  IntPolynomial out;
  for (const Tableau& T : enumerate_sskt(alpha, phi)) out += IntPolynomial::monomial(T.weight());
  return out;
}

// ---------------------------------------------------------------------------
// Route 2: operator chain pi_{phi(1) down to 1} ... pi_{phi(k) down to k}
// applied to the key polynomial, the i = k factor acting first.

inline IntPolynomial flagged_key_pichain(const WeakComposition& alpha, const Flag& phi) {
  int k = comp_length(alpha);
  std::vector<std::pair<int, int>> chain;
  for (int i = 1; i <= k; ++i) chain.push_back({phi(i), i});
  return apply_pi_chain(chain, key_polynomial(alpha));
}

// ---------------------------------------------------------------------------
// Route 3: resolve repeated flag values.  While phi has a repeat phi(i) =
// phi(i+1), drop to phi - e_i, swapping alpha_i, alpha_{i+1} when the left
// part is larger.  Once phi is strictly increasing the answer is the plain
// key polynomial of the spread-out composition beta with beta_{phi(i)} =
// alpha_i.

inline WeakComposition recursive_key_index(WeakComposition alpha, const Flag& phi_in) {
  alpha = trimmed(alpha);
  if (alpha.empty()) return {};
  int k = comp_length(alpha);
  int L = std::max(k, phi_in(k));
  std::vector<int> phi = phi_in.values(L);
  alpha.resize(L, 0);
  for (;;) {
    int i = 0;
    for (int j = 1; j < L; ++j)
      if (phi[j - 1] == phi[j]) {
        i = j;
        break;
      }
    if (i == 0) break;
    // swap in place: act() would trim trailing zeros and shrink below L
    if (alpha[i - 1] > alpha[i]) std::swap(alpha[i - 1], alpha[i]);
    --phi[i - 1];
    if (phi[i - 1] < i) throw std::logic_error("recursive_key_index: flag fell below its row");
  }
  WeakComposition beta(phi.empty() ? 0 : phi.back(), 0);
  for (int i = 1; i <= L; ++i) {
    if (beta[phi[i - 1] - 1] != 0) throw std::logic_error("recursive_key_index: target collision");
    beta[phi[i - 1] - 1] = alpha[i - 1];
  }
  return trimmed(beta);
}

inline IntPolynomial flagged_key_recursive(const WeakComposition& alpha, const Flag& phi) {
  return key_polynomial(recursive_key_index(alpha, phi));
}

// ---------------------------------------------------------------------------
// Route 4: weakly increasing factorizations with maximal nonempty components
// whose column insertion records the standardized key of alpha.

class WeaklyIncreasingFactorization {
public:
  explicit WeaklyIncreasingFactorization(std::vector<Word> display_blocks)
      : blocks_(std::move(display_blocks)) {
    for (const Word& b : blocks_)
      for (size_t t = 0; t < b.size(); ++t) {
        if (b[t] < 1) throw std::invalid_argument("factorization letters must be positive");
        if (t > 0 && b[t - 1] > b[t])
          throw std::invalid_argument("factorization blocks must weakly increase");
      }
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  // Blocks are numbered 1..k from the right; the display order leads with
  // block k.
  const Word& block(int j) const { return blocks_.at(blocks_.size() - j); }
  const std::vector<Word>& display() const { return blocks_; }

  Word word() const {
    Word out;
    for (const Word& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  WeakComposition weight() const { return word_weight(word()); }

  auto operator<=>(const WeaklyIncreasingFactorization&) const = default;

private:
  std::vector<Word> blocks_;
};

// Every nonempty block must be unextendable: its last letter exceeds the
// first letter of the next nonempty block to the right.
inline bool has_maximal_components(const WeaklyIncreasingFactorization& u) {
  const Word* prev = nullptr;
  for (const Word& b : u.display()) {
    if (b.empty()) continue;
    if (prev && prev->back() <= b.front()) return false;
    prev = &b;
  }
  return true;
}

inline std::vector<WeaklyIncreasingFactorization> enumerate_w_model(const WeakComposition& alpha,
                                                                    const Flag& phi) {
  int k = comp_length(alpha);
  // Per-block candidates: weakly increasing words over [1, phi(i)] of length
  // alpha_i, for block i counted from the right.
  std::vector<std::vector<Word>> cand(k);
  for (int i = 1; i <= k; ++i) {
    int len = part(alpha, i), cap = phi(i);
    std::vector<Word> acc;
    Word cur;
    auto rec = [&](auto&& self, int lo) -> void {
      if (static_cast<int>(cur.size()) == len) {
        acc.push_back(cur);
        return;
      }
      for (int x = lo; x <= cap; ++x) {
        cur.push_back(x);
        self(self, x);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    cand[i - 1] = std::move(acc);
  }
  Tableau target = std_ssyt(key_of(alpha));
  std::vector<WeaklyIncreasingFactorization> out;
  std::vector<Word> display(k);
  auto rec = [&](auto&& self, int j) -> void { // fill block j, rightmost first
    if (j > k) {
      WeaklyIncreasingFactorization u(std::vector<Word>(display.rbegin(), display.rend()));
      if (!has_maximal_components(u)) return;
      if (column_insert_word(u.word()).second != target) return;
      out.push_back(std::move(u));
      return;
    }
    for (const Word& b : cand[j - 1]) {
      display[j - 1] = b;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline IntPolynomial flagged_key_rs(const WeakComposition& alpha, const Flag& phi) {
  IntPolynomial out;
  for (const auto& u : enumerate_w_model(alpha, phi)) out += IntPolynomial::monomial(u.weight());
  return out;
}

// ---------------------------------------------------------------------------
// Flagged Schubert polynomials and key expansions.

inline IntPolynomial flagged_schubert(const Permutation& w, const Flag& phi) {
  Permutation v = w.inverse();
  int n = default_block_count(v, phi);
  IntPolynomial out;
  for (const IncreasingFactorization& f : enumerate_rfc(v, phi, n))
    out += IntPolynomial::monomial(trimmed(f.weight()));
  return out;
}

inline IntPolynomial schubert(const Permutation& w) { return flagged_schubert(w, Flag::standard()); }

// Multiplicity of each key polynomial in the Schubert polynomial: the descent
// compositions of the Yamanouchi reduced words of w^{-1}, with repetition.
inline std::map<WeakComposition, int> key_expansion(const Permutation& w) {
  std::map<WeakComposition, int> out;
  for (const Word& sigma : yamanouchi_words(w.inverse())) {
    auto des = weak_descent_composition(sigma);
    if (!des) throw std::logic_error("key_expansion: Yamanouchi word is virtual");
    ++out[trimmed(*des)];
  }
  return out;
}

} // namespace flagkey
