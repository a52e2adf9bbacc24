#include <catch2/catch_amalgamated.hpp>

#include <flagkey/flagkey.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

using namespace flagkey;

namespace {

IncreasingFactorization fac(std::vector<Word> display) {
  return IncreasingFactorization(std::move(display));
}

} // namespace

TEST_CASE("pairing and operators on factorizations", "[crystal]") {
  IncreasingFactorization f = fac({{2, 6, 8}, {1, 4}, {3, 4, 5}});

  RfPairing p1 = rf_pairing(f, 1); // block 1 = 345, block 2 = 14
  CHECK(p1.right_unpaired == std::vector<int>{5, 4});
  CHECK(p1.left_unpaired == std::vector<int>{1});

  CHECK(rf_lower(f, 1) == fac({{2, 6, 8}, {1, 3, 4}, {3, 5}}));
  CHECK(rf_raise(f, 1) == fac({{2, 6, 8}, {4}, {1, 3, 4, 5}}));
  CHECK_FALSE(rf_lower(f, 2).has_value()); // block 2 fully paired into 268
  CHECK(rf_raise(f, 2) == fac({{2, 6}, {1, 4, 8}, {3, 4, 5}}));

  CHECK_FALSE(rf_raise(fac({{}, {}, {1, 3}}), 1).has_value());
  CHECK(is_highest_weight_rf(fac({{}, {}, {1, 3}})));
  CHECK_FALSE(is_highest_weight_rf(fac({{}, {1}, {}})));
}

TEST_CASE("raising and lowering invert each other", "[crystal][oracle]") {
  for (const Permutation& w :
       {Permutation::from_oneline({2, 1, 4, 3}), Permutation::from_oneline({3, 2, 1})}) {
    for (const IncreasingFactorization& f : enumerate_rf(w, 3))
      for (int i = 1; i <= 2; ++i) {
        if (auto up = rf_raise(f, i)) CHECK(rf_lower(*up, i) == f);
        if (auto down = rf_lower(f, i)) CHECK(rf_raise(*down, i) == f);
      }
  }
}

TEST_CASE("operators commute with shifting", "[crystal]") {
  IncreasingFactorization f = fac({{2, 6, 8}, {1, 4}, {3, 4, 5}});
  for (int i = 1; i <= 2; ++i) {
    auto down = rf_lower(f, i), up = rf_raise(f, i);
    if (down) CHECK(rf_lower(f.shifted(3), i) == down->shifted(3));
    if (up) CHECK(rf_raise(f.shifted(3), i) == up->shifted(3));
  }
}

TEST_CASE("column word statistics", "[crystal]") {
  Tableau T0 = Tableau::from_rows(1, {{2, 2, 2, 2, 2}, {3, 1, 1}, {}, {4, 4}});
  Word colw;
  for (const ColCell& c : col_cells(T0)) colw.push_back(c.value);
  CHECK(colw == Word{2, 2, 1, 2, 4, 1, 2, 4, 3, 2});

  auto [m, arg] = kt_m(colw, 1);
  CHECK(m == 3);
  CHECK(arg == std::vector<int>{1});
  CHECK(kt_m({}, 1) == std::pair<int, std::vector<int>>{0, {}});
  CHECK(kt_m({1, 2}, 1).first == 1); // suffix "2" scores one
}

TEST_CASE("raising chain on a key tableau", "[crystal]") {
  Tableau T0 = Tableau::from_rows(1, {{2, 2, 2, 2, 2}, {3, 1, 1}, {}, {4, 4}});
  Tableau T1 = Tableau::from_rows(1, {{2, 2, 2, 2, 1}, {3, 1, 1}, {}, {4, 4}});
  Tableau T2 = Tableau::from_rows(1, {{2, 1, 1, 1, 1}, {3, 2, 2}, {}, {4, 4}});
  Tableau T3 = Tableau::from_rows(1, {{1, 1, 1, 1, 1}, {3, 2, 2}, {}, {4, 4}});

  CHECK(kt_raise(T0, 1) == T1);
  CHECK(kt_raise(T1, 1) == T2);
  CHECK(kt_raise(T2, 1) == T3);
  CHECK_FALSE(kt_raise(T3, 1).has_value());
  CHECK_THROWS_AS(kt_raise(Tableau::from_rows(1, {{1, 2}}), 1), std::invalid_argument);
}

TEST_CASE("lowering inverts raising over the flagged family", "[crystal][oracle]") {
  std::vector<Tableau> family = enumerate_sskt({1, 2, 0, 1}, Flag({2, 3, 4, 4}));
  REQUIRE(family.size() == 11);
  for (const Tableau& T : family)
    for (int i = 1; i <= 3; ++i) {
      auto up = kt_raise(T, i);
      if (up) {
        // raising stays inside the family and inverts back
        CHECK(std::count(family.begin(), family.end(), *up) == 1);
        CHECK(kt_lower(*up, i, family) == T);
      }
      auto down = kt_lower(T, i, family);
      if (down) CHECK(kt_raise(*down, i) == T);
    }
}

TEST_CASE("the flagged family is one crystal with one highest vertex", "[crystal]") {
  std::vector<Tableau> family = enumerate_sskt({1, 2, 0, 1}, Flag({2, 3, 4, 4}));
  auto g = crystal_graph(family, 4, [](const Tableau& t, int i) { return kt_raise(t, i); });
  CHECK(g.verts.size() == 11);
  CHECK(components(g).size() == 1);
  std::vector<int> tops = highest_vertices(g);
  REQUIRE(tops.size() == 1);
  CHECK(g.verts[tops[0]] == highest_weight_sskt({1, 2, 0, 1}));
  CHECK(is_highest_weight_kt(g.verts[tops[0]], 4));

  CHECK(character(family) == flagged_key_pichain({1, 2, 0, 1}, Flag({2, 3, 4, 4})));
}

TEST_CASE("factorization crystals match tableau crystals", "[crystal][oracle]") {
  // w = 2143, standard flag: components (2) and (1,0,1)
  {
    Permutation w = Permutation::from_oneline({2, 1, 4, 3});
    auto rf = crystal_graph(enumerate_rfc(w, Flag::standard(), 3), 3,
                            [](const IncreasingFactorization& f, int i) { return rf_raise(f, i); });
    std::vector<Tableau> kts = enumerate_sskt({2}, Flag::standard());
    for (const Tableau& t : enumerate_sskt({1, 0, 1}, Flag::standard())) kts.push_back(t);
    auto kt = crystal_graph(kts, 3, [](const Tableau& t, int i) { return kt_raise(t, i); });
    CHECK(components(rf).size() == 2);
    CHECK(is_isomorphic(rf, kt));
    CHECK(character(rf.verts) == character(kt.verts));
  }
  // w = 321 with flag (2,3): a single component of shape (2,1)
  {
    Permutation w = Permutation::from_oneline({3, 2, 1});
    Flag phi({2, 3});
    auto rf = crystal_graph(enumerate_rfc(w, phi, default_block_count(w, phi)), 3,
                            [](const IncreasingFactorization& f, int i) { return rf_raise(f, i); });
    CHECK(rf.verts.size() == 5);
    auto kt = crystal_graph(enumerate_sskt({2, 1}, phi), 3,
                            [](const Tableau& t, int i) { return kt_raise(t, i); });
    CHECK(is_isomorphic(rf, kt));
  }
  // sanity: different weights cannot be isomorphic
  auto a = crystal_graph(enumerate_sskt({2}, Flag::standard()), 2,
                         [](const Tableau& t, int i) { return kt_raise(t, i); });
  auto b = crystal_graph(enumerate_sskt({1}, Flag::standard()), 2,
                         [](const Tableau& t, int i) { return kt_raise(t, i); });
  CHECK_FALSE(is_isomorphic(a, b));
}

TEST_CASE("Demazure operators on factorization sets", "[crystal]") {
  Permutation w = Permutation::from_word({1});
  std::vector<IncreasingFactorization> ambient = enumerate_rf(w, 3);
  std::set<IncreasingFactorization> seed = {fac({{}, {}, {1}})};

  std::set<IncreasingFactorization> d1 = rf_demazure(seed, 1, ambient);
  CHECK(d1 == std::set<IncreasingFactorization>{fac({{}, {}, {1}}), fac({{}, {1}, {}})});
  CHECK(character(d1) ==
        IntPolynomial::monomial({1}) + IntPolynomial::monomial({0, 1}));

  // idempotent, monotone, word independent
  CHECK(rf_demazure(d1, 1, ambient) == d1);
  std::set<IncreasingFactorization> full = rf_demazure(d1, 2, ambient);
  CHECK(full.size() == 3);
  CHECK(rf_demazure_word(seed, {1, 2, 1}, ambient) ==
        rf_demazure_word(seed, {2, 1, 2}, ambient));
  CHECK(rf_demazure_descending(seed, 1, 1, ambient) == seed); // empty run
  CHECK(rf_demazure_descending(seed, 3, 1, ambient) ==
        rf_demazure(rf_demazure(seed, 1, ambient), 2, ambient));

  CHECK(demazure_subcrystal(fac({{}, {}, {1}}), Permutation::s(1), ambient) == d1);
  CHECK_THROWS_AS(demazure_subcrystal(fac({{}, {1}, {}}), Permutation::s(1), ambient),
                  std::invalid_argument);
}

TEST_CASE("crystal graph bookkeeping", "[crystal]") {
  std::vector<Tableau> family = enumerate_sskt({1, 0, 1}, Flag::standard());
  auto g = crystal_graph(family, 3, [](const Tableau& t, int i) { return kt_raise(t, i); });
  REQUIRE(g.verts.size() == 2);
  CHECK(g.index_of(family[0]) >= 0);
  CHECK(g.index_of(Tableau()) == -1);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].label == 2);

  std::ostringstream os;
  write_dot(os, g, [](const Tableau&) { return std::string("T\"x"); });
  std::string dot = os.str();
  CHECK(dot.find("digraph crystal {") == 0);
  CHECK(dot.find("v0 -> v1") != std::string::npos);
  CHECK(dot.find("T\\\"x") != std::string::npos);
}
