#include <catch2/catch_amalgamated.hpp>

#include <flagkey/flagkey.hpp>

#include <algorithm>
#include <vector>

using namespace flagkey;

TEST_CASE("from_rows normalizes the stored window", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{}, {2}});
  CHECK(t.base_row() == 2);
  CHECK(t.rows() == std::vector<Word>{{2}});

  CHECK(Tableau::from_rows(2, {{3}, {}}) == Tableau::from_rows(2, {{3}}));
  CHECK(Tableau::from_rows(5, {}).empty());
  CHECK(Tableau::from_rows(5, {}).base_row() == 1);

  Tableau gap = Tableau::from_rows(1, {{1}, {}, {3}}); // interior empty row survives
  CHECK(gap.base_row() == 1);
  CHECK(gap.top_row() == 3);
  CHECK(gap.row(2).empty());
  CHECK(gap.row(7).empty()); // out of window reads as empty
}

TEST_CASE("box access, shape and weight", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{2, 1}, {3}});
  CHECK(t.has_box(1, 2));
  CHECK_FALSE(t.has_box(1, 3));
  CHECK(t.entry(2, 1) == 3);
  CHECK_THROWS_AS(t.entry(2, 2), std::invalid_argument);
  CHECK(t.box_count() == 3);
  CHECK(t.shape() == WeakComposition{2, 1});
  CHECK(t.weight() == WeakComposition{1, 1, 1});

  Tableau gap = Tableau::from_rows(1, {{1}, {}, {3, 3}});
  CHECK(gap.shape() == WeakComposition{1, 0, 2});
  CHECK(gap.weight() == WeakComposition{1, 0, 2});

  CHECK_THROWS_AS(Tableau::from_rows(0, {{1}}).shape(), std::invalid_argument);
  CHECK(Tableau().shape() == WeakComposition{});
}

TEST_CASE("reading words", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{2, 1}, {3}});
  CHECK(row_word(t) == Word{3, 2, 1});

  // column word: rightmost column first, top to bottom inside a column
  Tableau u = Tableau::from_rows(1, {{2, 5, 7}, {}, {3, 6, 9, 9}, {6}});
  CHECK(col_word(u) == Word{9, 9, 7, 6, 5, 6, 3, 2});
  CHECK(col_word(Tableau()) == Word{});
}

TEST_CASE("key tableau conditions", "[tableau]") {
  Tableau key = Tableau::from_rows(1, {{2, 1}, {3}, {5, 4}});
  CHECK(rows_weakly_decreasing(key));
  CHECK(columns_distinct(key));
  CHECK(key_covering_rule(key));
  CHECK(is_key_tableau(key));
  CHECK(col_word(key) == Word{4, 1, 5, 3, 2});

  CHECK_FALSE(rows_weakly_decreasing(Tableau::from_rows(1, {{1, 2}})));
  CHECK_FALSE(columns_distinct(Tableau::from_rows(1, {{1}, {1}})));

  // a larger lower entry needs a right neighbor beating the upper entry
  CHECK_FALSE(is_key_tableau(Tableau::from_rows(1, {{3}, {2, 1}})));
  CHECK(is_key_tableau(Tableau::from_rows(1, {{3, 3}, {2}})));
  CHECK(is_key_tableau(Tableau()));
}

TEST_CASE("flag membership checks row bounds", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{1}, {2, 1}, {}, {3}});
  CHECK(is_flagged(t, Flag::standard())); // row 4 entry 3 <= 4
  CHECK(is_flagged(t, Flag({2, 3, 4, 4})));
  CHECK_FALSE(is_flagged(Tableau::from_rows(1, {{2}}), Flag::standard()));
  CHECK(is_flagged(Tableau::from_rows(1, {{2}}), Flag({2})));
}

TEST_CASE("increasing and semistandard predicates", "[tableau]") {
  CHECK(is_increasing_tableau(Tableau::from_rows(1, {{1, 3, 4, 7}, {2, 6}, {5}})));
  CHECK_FALSE(is_increasing_tableau(Tableau::from_rows(1, {{1, 1}})));
  CHECK(is_ssyt(Tableau::from_rows(1, {{1, 1}, {2}})));
  CHECK_FALSE(is_ssyt(Tableau::from_rows(1, {{1, 1}, {1}}))); // column repeats
  CHECK_FALSE(is_ssyt(Tableau::from_rows(1, {{2, 1}})));
}

TEST_CASE("flagged key tableaux of a shape enumerate exactly", "[tableau]") {
  std::vector<Tableau> expect = {
      Tableau::from_rows(1, {{1}, {2, 1}, {}, {3}}),
      Tableau::from_rows(1, {{1}, {2, 2}, {}, {3}}),
      Tableau::from_rows(1, {{1}, {2, 1}, {}, {4}}),
      Tableau::from_rows(1, {{1}, {2, 2}, {}, {4}}),
  };
  std::sort(expect.begin(), expect.end());
  CHECK(enumerate_sskt({1, 2, 0, 1}, Flag::standard()) == expect);

  std::vector<Tableau> wide = enumerate_sskt({1, 2, 0, 1}, Flag({2, 3, 4, 4}));
  CHECK(wide.size() == 11);
  for (const Tableau& t : wide) {
    CHECK(is_key_tableau(t));
    CHECK(is_flagged(t, Flag({2, 3, 4, 4})));
    CHECK(t.shape() == WeakComposition{1, 2, 0, 1});
  }
  // the standard-flag members appear inside the wider enumeration
  for (const Tableau& t : expect) CHECK(std::count(wide.begin(), wide.end(), t) == 1);

  CHECK(enumerate_sskt({}, Flag::standard()) == std::vector<Tableau>{Tableau()});
  CHECK(enumerate_sskt({2}, Flag({3})).size() == 6);
}

TEST_CASE("key standardization", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{}, {5, 4, 3, 1}, {2, 2}, {}, {}, {}, {3}});
  CHECK(std_key(t) == Tableau::from_rows(1, {{}, {7, 6, 4, 1}, {3, 2}, {}, {}, {}, {5}}));
  CHECK_THROWS_AS(std_key(Tableau::from_rows(1, {{1, 2}})), std::invalid_argument);
  CHECK(std_key(Tableau()) == Tableau());
}

TEST_CASE("the key of a composition stacks nested columns", "[tableau]") {
  Tableau k = key_of({1, 2, 0, 1});
  CHECK(k == Tableau::from_rows(1, {{1, 2}, {2}, {4}}));
  CHECK(is_ssyt(k));
  CHECK(k.weight() == WeakComposition{1, 2, 0, 1});
  CHECK(std_ssyt(k) == Tableau::from_rows(1, {{1, 3}, {2}, {4}}));

  CHECK(key_of({2, 2}) == Tableau::from_rows(1, {{1, 1}, {2, 2}}));
  CHECK(key_of({}) == Tableau());

  Tableau big = key_of({1, 2, 5, 3, 0, 1});
  CHECK(big == Tableau::from_rows(1, {{1, 2, 3, 3, 3}, {2, 3, 4}, {3, 4}, {4}, {6}}));
  CHECK(std_ssyt(big) ==
        Tableau::from_rows(1, {{1, 3, 6, 7, 8}, {2, 5, 11}, {4, 10}, {9}, {12}}));
}

TEST_CASE("highest weight member of a flagged family", "[tableau]") {
  Tableau h = highest_weight_sskt({1, 2, 0, 1});
  CHECK(h == Tableau::from_rows(1, {{1}, {2, 1}, {}, {3}}));
  CHECK(is_key_tableau(h));
  CHECK(h.shape() == WeakComposition{1, 2, 0, 1});
  CHECK(is_partition(trimmed(h.weight())));
  std::vector<Tableau> all = enumerate_sskt({1, 2, 0, 1}, Flag({2, 3, 4, 4}));
  CHECK(std::count(all.begin(), all.end(), h) == 1);
}

TEST_CASE("tableau shifting", "[tableau]") {
  Tableau t = Tableau::from_rows(1, {{2, 1}});
  CHECK(shift_tableau(t, 2, true) == Tableau::from_rows(3, {{4, 3}}));
  CHECK(shift_tableau(t, 2, false) == Tableau::from_rows(3, {{2, 1}}));
  CHECK(shift_tableau(Tableau(), 3, true) == Tableau());
}
