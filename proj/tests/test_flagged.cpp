#include <catch2/catch_amalgamated.hpp>

#include <flagkey/flagkey.hpp>

#include <vector>

using namespace flagkey;

namespace {

IntPolynomial poly(const std::vector<std::pair<IntPolynomial::Exponent, long long>>& terms) {
  IntPolynomial out;
  for (const auto& [e, c] : terms) out += IntPolynomial::monomial(e, c);
  return out;
}

const IntPolynomial kappa_1201 = poly({
    {{2, 1, 1}, 1},
    {{1, 2, 1}, 1},
    {{2, 1, 0, 1}, 1},
    {{1, 2, 0, 1}, 1},
});

// same composition with flag (2,3,4,4): six more monomials and a doubled one
const IntPolynomial kappa_1201_f2344 = kappa_1201 + poly({
                                           {{1, 1, 2}, 1},
                                           {{1, 0, 2, 1}, 1},
                                           {{1, 1, 1, 1}, 2},
                                           {{2, 0, 1, 1}, 1},
                                           {{0, 1, 2, 1}, 1},
                                           {{0, 2, 1, 1}, 1},
                                       });

} // namespace

TEST_CASE("four routes to a flagged key polynomial agree", "[flagged][oracle]") {
  WeakComposition alpha = {1, 2, 0, 1};
  Flag std_flag = Flag::standard();
  Flag phi({2, 3, 4, 4});

  CHECK(flagged_key_enum(alpha, std_flag) == kappa_1201);
  CHECK(flagged_key_pichain(alpha, std_flag) == kappa_1201);
  CHECK(flagged_key_recursive(alpha, std_flag) == kappa_1201);
  CHECK(flagged_key_rs(alpha, std_flag) == kappa_1201);

  CHECK(flagged_key_enum(alpha, phi) == kappa_1201_f2344);
  CHECK(flagged_key_pichain(alpha, phi) == kappa_1201_f2344);
  CHECK(flagged_key_recursive(alpha, phi) == kappa_1201_f2344);
  CHECK(flagged_key_rs(alpha, phi) == kappa_1201_f2344);
}

TEST_CASE("flag recursion rewrites the index", "[flagged]") {
  CHECK(recursive_key_index({1, 2, 0, 1}, Flag({2, 3, 4, 4})) == WeakComposition{0, 1, 2, 1});
  // strictly increasing flag leaves the composition alone
  CHECK(recursive_key_index({1, 2, 0, 1}, Flag::standard()) == WeakComposition{1, 2, 0, 1});
  CHECK(recursive_key_index({}, Flag({3})).empty());
  // the swap fires only when the left part is larger
  CHECK(recursive_key_index({0, 2}, Flag({2, 2})) == WeakComposition{0, 2});
  CHECK(recursive_key_index({2, 0}, Flag({2, 2})) == WeakComposition{0, 2});
  CHECK(flagged_key_recursive({2, 0}, Flag({2, 2})) == flagged_key_pichain({2, 0}, Flag({2, 2})));
}

TEST_CASE("weakly increasing factorizations", "[flagged]") {
  WeaklyIncreasingFactorization u({{3}, {}, {1, 2}, {1}});
  CHECK(u.block_count() == 4);
  CHECK(u.block(1) == Word{1});
  CHECK(u.block(2) == Word{1, 2});
  CHECK(u.block(3).empty());
  CHECK(u.block(4) == Word{3});
  CHECK(u.word() == Word{3, 1, 2, 1});
  CHECK(u.weight() == WeakComposition{2, 1, 1});
  CHECK(has_maximal_components(u)); // 3 > 1 and 2 > 1
  CHECK_FALSE(has_maximal_components(WeaklyIncreasingFactorization({{1}, {1}})));
  CHECK(has_maximal_components(WeaklyIncreasingFactorization({{}, {1}})));
  CHECK_THROWS_AS(WeaklyIncreasingFactorization({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeaklyIncreasingFactorization(std::vector<Word>{{0}}), std::invalid_argument);
}

TEST_CASE("the factorization model lists the flagged family", "[flagged]") {
  using W = WeaklyIncreasingFactorization;
  std::vector<W> std_model = {
      W({{3}, {}, {1, 2}, {1}}),
      W({{3}, {}, {2, 2}, {1}}),
      W({{4}, {}, {1, 2}, {1}}),
      W({{4}, {}, {2, 2}, {1}}),
  };
  std::sort(std_model.begin(), std_model.end());
  CHECK(enumerate_w_model({1, 2, 0, 1}, Flag::standard()) == std_model);

  std::vector<W> flagged_model = std_model;
  for (W u : {
           W({{3}, {}, {2, 3}, {1}}),
           W({{4}, {}, {3, 3}, {1}}),
           W({{4}, {}, {2, 3}, {1}}),
           W({{4}, {}, {1, 3}, {2}}),
           W({{4}, {}, {1, 3}, {1}}),
           W({{4}, {}, {3, 3}, {2}}),
           W({{4}, {}, {2, 3}, {2}}),
       })
    flagged_model.push_back(u);
  std::sort(flagged_model.begin(), flagged_model.end());
  CHECK(enumerate_w_model({1, 2, 0, 1}, Flag({2, 3, 4, 4})) == flagged_model);
}

TEST_CASE("Schubert polynomials from flagged factorizations", "[flagged]") {
  CHECK(schubert(Permutation::from_oneline({2, 1})) == IntPolynomial::monomial({1}));
  CHECK(schubert(Permutation::from_oneline({1, 3, 2})) ==
        poly({{{1}, 1}, {{0, 1}, 1}}));
  CHECK(schubert(Permutation::from_oneline({3, 2, 1})) == IntPolynomial::monomial({2, 1}));
  CHECK(schubert(Permutation::from_oneline({2, 1, 4, 3})) ==
        poly({{{2}, 1}, {{1, 1}, 1}, {{1, 0, 1}, 1}}));
  CHECK(schubert(Permutation()) == IntPolynomial::one());
}

TEST_CASE("key expansion of a Schubert polynomial", "[flagged][oracle]") {
  {
    std::map<WeakComposition, int> exp = key_expansion(Permutation::from_oneline({3, 2, 1}));
    CHECK(exp == std::map<WeakComposition, int>{{{2, 1}, 1}});
  }
  {
    std::map<WeakComposition, int> exp = key_expansion(Permutation::from_oneline({2, 1, 4, 3}));
    CHECK(exp == std::map<WeakComposition, int>{{{2}, 1}, {{1, 0, 1}, 1}});
  }
  // the expansion refines every flagging of the Schubert polynomial
  for (std::vector<int> line :
       {std::vector<int>{2, 1, 4, 3}, {3, 2, 1}, {1, 3, 2}, {2, 4, 1, 3}}) {
    Permutation w = Permutation::from_oneline(line);
    auto exp = key_expansion(w);
    for (const Flag& phi : {Flag::standard(), Flag({2, 3, 4, 4})}) {
      IntPolynomial sum;
      for (const auto& [a, mult] : exp)
        sum += static_cast<long long>(mult) * flagged_key_pichain(a, phi);
      CHECK(flagged_schubert(w, phi) == sum);
    }
  }
}
