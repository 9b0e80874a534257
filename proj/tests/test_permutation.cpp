#include "doctest.h"

#include <algorithm>
#include <set>

#include "schurtl/permutation.hpp"

using namespace schurtl;

TEST_CASE("one-line validation and word evaluation") {
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), std::invalid_argument);
  std::vector<int> word{1, 2, 1};
  CHECK(Permutation::from_word(word, 3).one_line() == std::vector<int>{3, 2, 1});
}

TEST_CASE("canonical reduced word") {
  CHECK(Permutation::identity(4).reduced_word().empty());
  CHECK(Permutation::from_one_line({2, 1}).reduced_word() == std::vector<int>{1});

  // Every permutation of S_5: word length equals inversions and re-evaluates
  // to the permutation.
  for (const auto& v : all_permutations(5)) {
    auto word = v.reduced_word();
    CHECK(static_cast<int>(word.size()) == v.inversions());
    CHECK(Permutation::from_word(word, 5) == v);
  }
}

TEST_CASE("reduced word enumeration") {
  auto words = enumerate_reduced_words(Permutation::from_one_line({3, 2, 1}), 100);
  std::set<std::vector<int>> expected{{1, 2, 1}, {2, 1, 2}};
  CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == expected);

  auto capped = enumerate_reduced_words(Permutation::from_one_line({3, 2, 1}), 1);
  CHECK(capped.size() == 1);

  // Each enumerated word is reduced and evaluates back to v (spot check S_4).
  for (const auto& v : all_permutations(4)) {
    auto all = enumerate_reduced_words(v, 10000);
    std::set<std::vector<int>> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& w : all) {
      CHECK(static_cast<int>(w.size()) == v.inversions());
      CHECK(Permutation::from_word(w, 4) == v);
    }
  }
}

TEST_CASE("321-avoidance matches the pattern definition") {
  CHECK_FALSE(Permutation::from_one_line({3, 2, 1}).is_321_avoiding());
  CHECK(Permutation::identity(5).is_321_avoiding());
  CHECK(Permutation::from_one_line({3, 1, 4, 2}).is_321_avoiding());

  // Brute-force cross-check over S_5.
  for (const auto& v : all_permutations(5)) {
    bool has_pattern = false;
    for (int i = 1; i <= 5 && !has_pattern; ++i)
      for (int j = i + 1; j <= 5 && !has_pattern; ++j)
        for (int k = j + 1; k <= 5 && !has_pattern; ++k)
          if (v(i) > v(j) && v(j) > v(k)) has_pattern = true;
    CHECK(v.is_321_avoiding() == !has_pattern);
  }
}

TEST_CASE("321-avoiding permutations are counted by Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const auto& v : all_permutations(n))
      if (v.is_321_avoiding()) ++count;
    CHECK(count == catalan[n]);
  }
}
