#pragma once
// Crystal structure on reduced factorizations (block-pairing operators) and on
// flagged key tableaux (column-word operators), Demazure operators and
// subcrystals, crystal graphs with characters, canonical isomorphism tests,
// and DOT export.

#include <climits>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "flagkey/eg.hpp"
#include "flagkey/polynomial.hpp"
#include "flagkey/tableau.hpp"
#include "flagkey/weak_eg.hpp"

namespace flagkey {

// ---------------------------------------------------------------------------
// Operators on reduced factorizations

struct RfPairing {
  std::vector<int> right_unpaired; // letters of block i, decreasing
  std::vector<int> left_unpaired;  // letters of block i+1, increasing
};

// Letters of block i, largest first, each grab the smallest unpaired larger
// letter of block i+1.
inline RfPairing rf_pairing(const IncreasingFactorization& f, int i) {
  if (i < 1 || i + 1 > f.block_count()) throw std::invalid_argument("rf_pairing: index out of range");
  const Word& right = f.block(i);
  const Word& left = f.block(i + 1);
  std::vector<bool> used(left.size(), false);
  RfPairing out;
  for (int t = static_cast<int>(right.size()) - 1; t >= 0; --t) {
    int b = right[t];
    int pick = -1;
    for (int u = 0; u < static_cast<int>(left.size()); ++u)
      if (!used[u] && left[u] > b) {
        pick = u;
        break;
      }
    if (pick >= 0)
      used[pick] = true;
    else
      out.right_unpaired.push_back(b);
  }
  for (int u = 0; u < static_cast<int>(left.size()); ++u)
    if (!used[u]) out.left_unpaired.push_back(left[u]);
  return out;
}

namespace detail {
inline Word sorted_insert(Word w, int x) {
  auto it = std::lower_bound(w.begin(), w.end(), x);
  if (it != w.end() && *it == x) throw std::logic_error("crystal operator: letter already present");
  w.insert(it, x);
  return w;
}
inline Word erased(Word w, int x) {
  auto it = std::lower_bound(w.begin(), w.end(), x);
  if (it == w.end() || *it != x) throw std::logic_error("crystal operator: letter missing");
  w.erase(it);
  return w;
}
inline bool contains(const Word& w, int x) { return std::binary_search(w.begin(), w.end(), x); }
} // namespace detail

// Lowering operator f_i: the smallest unpaired letter b of block i slides to
// block i+1, landing at the bottom of its run b, b-1, ....
inline std::optional<IncreasingFactorization> rf_lower(const IncreasingFactorization& f, int i) {
  RfPairing pr = rf_pairing(f, i);
  if (pr.right_unpaired.empty()) return std::nullopt;
  int b = pr.right_unpaired.back();
  const Word& right = f.block(i);
  int t = 0;
  while (detail::contains(right, b - t - 1)) ++t;
  return f.with_block(i, detail::erased(right, b))
      .with_block(i + 1, detail::sorted_insert(f.block(i + 1), b - t));
}

// Raising operator e_i: the largest unpaired letter a of block i+1 slides to
// block i, landing at the top of its run a, a+1, ....
inline std::optional<IncreasingFactorization> rf_raise(const IncreasingFactorization& f, int i) {
  RfPairing pr = rf_pairing(f, i);
  if (pr.left_unpaired.empty()) return std::nullopt;
  int a = pr.left_unpaired.back();
  const Word& left = f.block(i + 1);
  int s = 0;
  while (detail::contains(left, a + s + 1)) ++s;
  return f.with_block(i + 1, detail::erased(left, a))
      .with_block(i, detail::sorted_insert(f.block(i), a + s));
}

inline bool is_highest_weight_rf(const IncreasingFactorization& f) {
  for (int i = 1; i < f.block_count(); ++i)
    if (rf_raise(f, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Operators on key tableaux

struct ColCell {
  int row, col, value;
};

inline std::vector<ColCell> col_cells(const Tableau& T) {
  int width = 0;
  for (const Word& r : T.rows()) width = std::max(width, static_cast<int>(r.size()));
  std::vector<ColCell> out;
  for (int c = width; c >= 1; --c)
    for (int r = T.top_row(); r >= T.base_row(); --r)
      if (T.has_box(r, c)) out.push_back({r, c, T.entry(r, c)});
  return out;
}

// Suffix statistics of the column word: m_i(j) counts (occurrences of i+1)
// minus (occurrences of i) in positions j..end.  Returns the maximum and every
// position attaining it, ascending.
inline std::pair<int, std::vector<int>> kt_m(const Word& colw, int i) {
  int best = INT_MIN, cnt = 0;
  std::vector<int> arg;
  std::vector<int> vals(colw.size());
  for (int j = static_cast<int>(colw.size()); j >= 1; --j) {
    if (colw[j - 1] == i + 1) ++cnt;
    if (colw[j - 1] == i) --cnt;
    vals[j - 1] = cnt;
    best = std::max(best, cnt);
  }
  if (colw.empty()) return {0, {}};
  for (int j = 1; j <= static_cast<int>(colw.size()); ++j)
    if (vals[j - 1] == best) arg.push_back(j);
  return {best, arg};
}

// Raising operator on a key tableau.  The last position attaining the maximal
// suffix statistic holds an i+1; that box's row is rewritten from its column
// rightward (i+1 -> i), and the original i entries in the touched columns
// become i+1.
inline std::optional<Tableau> kt_raise(const Tableau& T, int i) {
  if (i < 1) throw std::invalid_argument("kt_raise: index must be positive");
  if (!is_key_tableau(T)) throw std::invalid_argument("kt_raise: not a key tableau");
  auto cells = col_cells(T);
  Word colw;
  colw.reserve(cells.size());
  for (const ColCell& c : cells) colw.push_back(c.value);
  auto [best, arg] = kt_m(colw, i);
  if (best <= 0) return std::nullopt;
  const ColCell& pivot = cells[arg.back() - 1];
  if (pivot.value != i + 1) throw std::logic_error("kt_raise: pivot does not hold i+1");

  std::vector<Word> rows = T.rows();
  auto at = [&](int r, int c) -> int& { return rows[r - T.base_row()][c - 1]; };
  std::vector<int> touched;
  for (int c = pivot.col; c <= static_cast<int>(T.row(pivot.row).size()); ++c)
    if (T.entry(pivot.row, c) == i + 1) {
      at(pivot.row, c) = i;
      touched.push_back(c);
    }
  for (int c : touched)
    for (int r = T.base_row(); r <= T.top_row(); ++r)
      if (r != pivot.row && T.has_box(r, c) && T.entry(r, c) == i) at(r, c) = i + 1;

  Tableau out = Tableau::from_rows(T.base_row(), std::move(rows));
  if (!is_key_tableau(out)) throw std::logic_error("kt_raise: left the key tableau family");
  return out;
}

// Lowering operator realized as the inverse of kt_raise over an ambient set.
inline std::optional<Tableau> kt_lower(const Tableau& T, int i, const std::vector<Tableau>& ambient) {
  std::optional<Tableau> found;
  for (const Tableau& U : ambient) {
    auto up = kt_raise(U, i);
    if (up && *up == T) {
      if (found) throw std::logic_error("kt_lower: raising is not injective here");
      found = U;
    }
  }
  return found;
}

inline bool is_highest_weight_kt(const Tableau& T, int rank) {
  for (int i = 1; i < rank; ++i)
    if (kt_raise(T, i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Demazure operators on sets of factorizations

// D_i X: every ambient element whose e_i chain meets X.
inline std::set<IncreasingFactorization> rf_demazure(const std::set<IncreasingFactorization>& X,
                                                     int i,
                                                     const std::vector<IncreasingFactorization>& ambient) {
  std::set<IncreasingFactorization> out;
  for (const IncreasingFactorization& b : ambient) {
    IncreasingFactorization cur = b;
    for (;;) {
      if (X.count(cur)) {
        out.insert(b);
        break;
      }
      auto up = rf_raise(cur, i);
      if (!up) break;
      cur = std::move(*up);
    }
  }
  return out;
}

// D_{t downto s} = D_{t-1} ... D_s, the lowest index acting first.
inline std::set<IncreasingFactorization> rf_demazure_descending(
    std::set<IncreasingFactorization> X, int t, int s,
    const std::vector<IncreasingFactorization>& ambient) {
  if (s < 1 || t < s) throw std::invalid_argument("rf_demazure_descending: need 1 <= s <= t");
  for (int j = s; j < t; ++j) X = rf_demazure(X, j, ambient);
  return X;
}

// D applied along an operator word, rightmost letter first.
inline std::set<IncreasingFactorization> rf_demazure_word(
    std::set<IncreasingFactorization> X, const Word& word,
    const std::vector<IncreasingFactorization>& ambient) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) X = rf_demazure(X, *it, ambient);
  return X;
}

// The Demazure subcrystal D_sigma{u} of a highest-weight element.
inline std::set<IncreasingFactorization> demazure_subcrystal(
    const IncreasingFactorization& u, const Permutation& sigma,
    const std::vector<IncreasingFactorization>& ambient) {
  if (!is_highest_weight_rf(u))
    throw std::invalid_argument("demazure_subcrystal: seed is not highest weight");
  return rf_demazure_word({u}, any_reduced_word(sigma), ambient);
}

// ---------------------------------------------------------------------------
// Crystal graphs

template <class Elem>
struct CrystalGraph {
  struct Edge {
    int from, to, label;
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Elem> verts; // sorted
  std::vector<Edge> edges; // sorted; edge u -i-> v means f_i(u) = v
  int rank = 1;            // labels range over [1, rank-1]

  int index_of(const Elem& e) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), e);
    if (it == verts.end() || !(*it == e)) return -1;
    return static_cast<int>(it - verts.begin());
  }
};

// Build the graph on an explicit vertex set from the raising operator; an edge
// u -> v with label i records e_i(v) = u (both endpoints inside the set).
template <class Elem, class RaiseFn>
CrystalGraph<Elem> crystal_graph(std::vector<Elem> verts, int rank, RaiseFn raise) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  CrystalGraph<Elem> g;
  g.verts = std::move(verts);
  g.rank = rank;
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
    for (int i = 1; i < rank; ++i) {
      auto up = raise(g.verts[v], i);
      if (!up) continue;
      int u = g.index_of(*up);
      if (u >= 0) g.edges.push_back({u, v, i});
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

inline WeakComposition crystal_weight(const IncreasingFactorization& f) {
  return trimmed(f.weight());
}
inline WeakComposition crystal_weight(const Tableau& T) { return T.weight(); }

template <class Elem>
IntPolynomial character(const std::vector<Elem>& verts) {
  IntPolynomial out;
  for (const Elem& v : verts) out += IntPolynomial::monomial(crystal_weight(v));
  return out;
}

template <class Elem>
IntPolynomial character(const std::set<Elem>& verts) {
  IntPolynomial out;
  for (const Elem& v : verts) out += IntPolynomial::monomial(crystal_weight(v));
  return out;
}

// Connected components under both edge directions; each is a sorted vertex
// index list.
template <class Elem>
std::vector<std::vector<int>> components(const CrystalGraph<Elem>& g) {
  int n = static_cast<int>(g.verts.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<std::vector<int>> out;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v}, members;
    comp[v] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = comp[v];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// Vertices with no incoming edge (e_i kills them for every i inside the set).
template <class Elem>
std::vector<int> highest_vertices(const CrystalGraph<Elem>& g) {
  std::vector<bool> has_in(g.verts.size(), false);
  for (const auto& e : g.edges) has_in[e.to] = true;
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

// Canonical form: each component is encoded by a deterministic traversal from
// a highest-weight vertex (weights and labeled edges by discovery index), and
// the component codes are sorted.  Two graphs are isomorphic as weighted
// labeled crystals iff their forms agree.
template <class Elem>
std::string canonical_form(const CrystalGraph<Elem>& g) {
  int n = static_cast<int>(g.verts.size());
  std::vector<std::map<int, int>> down(n), up(n); // label -> neighbor
  for (const auto& e : g.edges) {
    down[e.from][e.label] = e.to;
    up[e.to][e.label] = e.from;
  }
  auto encode_from = [&](int root, const std::vector<int>& member_set) {
    std::set<int> allowed(member_set.begin(), member_set.end());
    std::vector<int> order{root};
    std::map<int, int> pos{{root, 0}};
    for (size_t q = 0; q < order.size(); ++q) {
      int v = order[q];
      for (int i = 1; i < g.rank; ++i)
        for (const auto* m : {&down[v], &up[v]}) {
          auto it = m->find(i);
          if (it != m->end() && allowed.count(it->second) && !pos.count(it->second)) {
            pos[it->second] = static_cast<int>(order.size());
            order.push_back(it->second);
          }
        }
    }
    std::ostringstream os;
    for (int v : order) {
      os << "[";
      for (int x : crystal_weight(g.verts[v])) os << x << ",";
      os << "|";
      for (int i = 1; i < g.rank; ++i) {
        auto it = down[v].find(i);
        if (it != down[v].end() && pos.count(it->second))
          os << i << ">" << pos[it->second] << ";";
      }
      os << "]";
    }
    return os.str();
  };
  std::vector<bool> has_in(n, false);
  for (const auto& e : g.edges) has_in[e.to] = true;
  std::vector<std::string> codes;
  for (const auto& comp : components(g)) {
    std::string best;
    bool first = true;
    for (int v : comp) {
      if (has_in[v]) continue;
      std::string code = encode_from(v, comp);
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
    }
    if (first) throw std::logic_error("canonical_form: component without highest-weight vertex");
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const std::string& c : codes) out += c + "#";
  return out;
}

template <class A, class B>
bool is_isomorphic(const CrystalGraph<A>& a, const CrystalGraph<B>& b) {
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <class Elem, class LabelFn>
void write_dot(std::ostream& os, const CrystalGraph<Elem>& g, LabelFn label) {
  os << "digraph crystal {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
    os << "  v" << v << " [label=\"" << dot_escape(label(g.verts[v])) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
}

} // namespace flagkey
