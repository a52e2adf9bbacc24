#pragma once
// Exact integer-coefficient polynomials in x_1, x_2, ..., divided differences,
// isobaric (Demazure) operators, and key polynomials.
//
// Divided differences are computed termwise through the closed form
//   partial_i x^(..,p,q,..) = sign(p-q) * sum x^(..,a,b,..)
// over a+b = p+q-1 with min(p,q) <= a < max(p,q), which is exact and never
// leaves the integer coefficient ring.

#include "flagkey/core.hpp"

namespace flagkey {

class IntPolynomial {
 public:
  using Exponent = std::vector<int>; // trimmed: no trailing zeros
  using Terms = std::map<Exponent, long long>; // lexicographic key order

  IntPolynomial() = default;

  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return monomial({}, 1); }

  static IntPolynomial monomial(WeakComposition e, long long c = 1) {
    for (int x : e)
      if (x < 0) throw std::invalid_argument("monomial: exponents must be nonnegative");
    IntPolynomial p;
    p.add_term(trimmed(std::move(e)), c);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const Terms& terms() const { return terms_; }

  long long coeff(const WeakComposition& e) const {
    auto it = terms_.find(trimmed(e));
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(Exponent e, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(trimmed(std::move(e)), c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  friend IntPolynomial operator*(long long c, const IntPolynomial& a) {
    IntPolynomial out;
    for (const auto& [e, k] : a.terms_) out.add_term(e, c * k);
    return out;
  }

  bool operator==(const IntPolynomial&) const = default;

 private:
  Terms terms_;
};

// The simple transposition s_i acting on variables x_i, x_{i+1}.
inline IntPolynomial swap_vars(int i, const IntPolynomial& f) {
  if (i < 1) throw std::invalid_argument("swap_vars: index must be positive");
  IntPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    IntPolynomial::Exponent m = e;
    if (static_cast<int>(m.size()) < i + 1) m.resize(i + 1, 0);
    std::swap(m[i - 1], m[i]);
    out.add_term(std::move(m), c);
  }
  return out;
}

// partial_i f = (f - s_i f) / (x_i - x_{i+1}).
inline IntPolynomial divided_difference(int i, const IntPolynomial& f) {
  if (i < 1) throw std::invalid_argument("divided_difference: index must be positive");
  IntPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    int p = part(e, i), q = part(e, i + 1);
    if (p == q) continue;
    int lo = std::min(p, q), hi = std::max(p, q);
    long long sgn = p > q ? c : -c;
    IntPolynomial::Exponent m = e;
    if (static_cast<int>(m.size()) < i + 1) m.resize(i + 1, 0);
    for (int a = lo; a < hi; ++a) {
      m[i - 1] = a;
      m[i] = p + q - 1 - a;
      out.add_term(m, sgn);
    }
  }
  return out;
}

// pi_i f = partial_i (x_i f); idempotent, satisfies the braid relations.
inline IntPolynomial isobaric(int i, const IntPolynomial& f) {
  IntPolynomial xf;
  for (const auto& [e, c] : f.terms()) {
    IntPolynomial::Exponent m = e;
    if (static_cast<int>(m.size()) < i) m.resize(i, 0);
    ++m[i - 1];
    xf.add_term(std::move(m), c);
  }
  return divided_difference(i, xf);
}

// Operator words act as compositions with the rightmost factor applied first.
inline IntPolynomial apply_pi_word(const Word& w, IntPolynomial f) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = isobaric(*it, f);
  return f;
}

inline IntPolynomial apply_partial_word(const Word& w, IntPolynomial f) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) f = divided_difference(*it, f);
  return f;
}

// Some reduced word of w (result of apply_pi_perm is word-independent because
// the pi_i satisfy the braid relations).
inline Word any_reduced_word(Permutation w) {
  Word peeled;
  while (!w.is_identity()) {
    int i = 1;
    while (!w.right_descent(i)) ++i;
    peeled.push_back(i);
    w = w.times_s(i);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

inline IntPolynomial apply_pi_perm(const Permutation& w, IntPolynomial f) {
  return apply_pi_word(any_reduced_word(w), std::move(f));
}

// pi_{t downto s} = pi_{t-1} pi_{t-2} ... pi_s (identity when t == s).
inline IntPolynomial apply_pi_descending(int t, int s, IntPolynomial f) {
  if (s < 1 || t < s) throw std::invalid_argument("apply_pi_descending: need 1 <= s <= t");
  for (int j = s; j < t; ++j) f = isobaric(j, f);
  return f;
}

// A chain of descending runs, composed with the last entry acting first.
inline IntPolynomial apply_pi_chain(const std::vector<std::pair<int, int>>& chain, IntPolynomial f) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    f = apply_pi_descending(it->first, it->second, std::move(f));
  return f;
}

// kappa_alpha = pi_w x^lambda where alpha . w = lambda is the decreasing sort
// of alpha and w has minimal length.
inline IntPolynomial key_polynomial(const WeakComposition& alpha) {
  auto [lambda, w] = sort_and_minimal_sorter(alpha);
  return apply_pi_perm(w, IntPolynomial::monomial(lambda));
}

} // namespace flagkey
