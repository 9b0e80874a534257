#include "doctest.h"

#include <random>
#include <set>

#include "schurtl/tl.hpp"

using namespace schurtl;

namespace {

// Deterministic small-entry matrix; avoids distribution implementation
// differences between standard libraries.
SquareMatrix<CheckedInt> random_int_matrix(int n, std::uint64_t seed, int lo = -3, int hi = 3) {
  std::mt19937_64 rng(seed);
  SquareMatrix<CheckedInt> X(n);
  const int span = hi - lo + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      X.at(i, j) = CheckedInt{static_cast<Coeff>(lo + static_cast<int>(rng() % span))};
  return X;
}

std::vector<SubsetOfN> subsets_of_size(int n, int r) {
  std::vector<SubsetOfN> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(n, cur);
      return;
    }
    for (int x = next; x <= n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

TEST_CASE("generator and identity diagrams") {
  auto t1 = NonCrossingMatching::generator(1, 2);
  CHECK(t1.pairs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

  auto t2 = NonCrossingMatching::generator(2, 3);
  CHECK(t2.pairs() == std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {4, 5}});

  auto id = NonCrossingMatching::identity(3);
  CHECK(id.pairs() == std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 4}});

  CHECK_THROWS_AS(NonCrossingMatching::generator(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(NonCrossingMatching::from_pairs(2, {{1, 3}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("TL relations at loop weight 2") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      TLElement ti = TLElement::generator_t(i, n);
      CHECK(ti * ti == ti.times(2));
      for (int j = 1; j < n; ++j) {
        TLElement tj = TLElement::generator_t(j, n);
        if (std::abs(i - j) == 1) CHECK(ti * tj * ti == ti);
        if (std::abs(i - j) >= 2) CHECK(ti * tj == tj * ti);
      }
    }
  }
}

TEST_CASE("diagram multiplication is associative") {
  for (int n = 2; n <= 3; ++n) {
    auto basis = all_noncrossing_matchings(n);
    for (const auto& a : basis)
      for (const auto& b : basis)
        for (const auto& c : basis) {
          TLElement ta = TLElement::basis(a), tb = TLElement::basis(b), tc = TLElement::basis(c);
          CHECK((ta * tb) * tc == ta * (tb * tc));
        }
  }
  // Sampled at n = 4.
  auto basis4 = all_noncrossing_matchings(4);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = basis4[rng() % basis4.size()];
    const auto& b = basis4[rng() % basis4.size()];
    const auto& c = basis4[rng() % basis4.size()];
    TLElement ta = TLElement::basis(a), tb = TLElement::basis(b), tc = TLElement::basis(c);
    CHECK((ta * tb) * tc == ta * (tb * tc));
  }
}

TEST_CASE("non-crossing matchings are counted by Catalan numbers") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) CHECK(all_noncrossing_matchings(n).size() == catalan[n]);
}

TEST_CASE("t_w to matching is a bijection on 321-avoiding permutations") {
  for (int n = 1; n <= 6; ++n) {
    std::set<NonCrossingMatching> images;
    int avoiding = 0;
    for (const auto& w : all_permutations(n)) {
      if (!w.is_321_avoiding()) continue;
      ++avoiding;
      images.insert(matching_of_permutation(w));
    }
    CHECK(images.size() == static_cast<std::size_t>(avoiding));
    CHECK(images.size() == all_noncrossing_matchings(n).size());
  }
  CHECK(matching_of_permutation(Permutation::from_one_line({2, 1})) ==
        NonCrossingMatching::generator(1, 2));
  CHECK_THROWS_AS(matching_of_permutation(Permutation::from_one_line({3, 2, 1})),
                  std::invalid_argument);
}

TEST_CASE("f coefficients on explicit words") {
  auto f_id = f_coefficients(Permutation::identity(2));
  CHECK(f_id.size() == 1);
  CHECK(f_id.at(NonCrossingMatching::identity(2)) == 1);

  auto f_s1 = f_coefficients(Permutation::from_one_line({2, 1}));
  CHECK(f_s1.size() == 2);
  CHECK(f_s1.at(NonCrossingMatching::generator(1, 2)) == 1);
  CHECK(f_s1.at(NonCrossingMatching::identity(2)) == -1);

  // (t_1 - 1)(t_2 - 1)(t_1 - 1) = t_1 + t_2 - t_1 t_2 - t_2 t_1 - 1.
  auto f = f_coefficients(Permutation::from_one_line({3, 2, 1}));
  auto m = [&](std::vector<int> word) {
    return matching_of_permutation(Permutation::from_word(word, 3));
  };
  CHECK(f.size() == 5);
  CHECK(f.at(m({1})) == 1);
  CHECK(f.at(m({2})) == 1);
  CHECK(f.at(m({1, 2})) == -1);
  CHECK(f.at(m({2, 1})) == -1);
  CHECK(f.at(m({})) == -1);
}

TEST_CASE("f coefficients are independent of the reduced word (S_4)") {
  for (const auto& v : all_permutations(4)) {
    auto words = enumerate_reduced_words(v, 100000);
    auto reference = f_coefficients_from_word(words.front(), 4);
    for (std::size_t i = 1; i < words.size(); ++i)
      CHECK(f_coefficients_from_word(words[i], 4) == reference);
    CHECK(f_coefficients(v) == reference);
  }
}

TEST_CASE("basis property: diagram of a reduced word has no loops") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      if (!w.is_321_avoiding()) continue;
      auto f = f_coefficients(w);
      // The leading term of the expansion is t_w itself with coefficient 1.
      CHECK(f.at(matching_of_permutation(w)) == 1);
    }

  // Every reduced word of a 321-avoiding w multiplies out to the same single
  // diagram with no loop factor.
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      if (!w.is_321_avoiding()) continue;
      auto expected = matching_of_permutation(w);
      for (const auto& word : enumerate_reduced_words(w, 1u << 20)) {
        NonCrossingMatching result = NonCrossingMatching::identity(n);
        int loops = 0;
        for (int i : word) {
          GluedProduct glued = concat_diagrams(result, NonCrossingMatching::generator(i, n));
          result = glued.matching;
          loops += glued.loops;
        }
        CHECK(loops == 0);
        CHECK(result == expected);
      }
    }
}

TEST_CASE("theta on explicit color sets") {
  CHECK(theta(ColorSet(2, {1})).empty());
  CHECK(theta(ColorSet(2, {1, 2, 3})).empty());

  auto th = theta(ColorSet(2, {1, 2}));
  REQUIRE(th.size() == 1);
  CHECK(th.front() == NonCrossingMatching::identity(2));

  // Counting argument: brute-force filter matches theta for every S, n <= 4.
  for (int n = 1; n <= 4; ++n) {
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
      std::set<int> members;
      for (int v = 1; v <= 2 * n; ++v)
        if (mask & (1 << (v - 1))) members.insert(v);
      ColorSet S(n, members);
      std::vector<NonCrossingMatching> brute;
      for (const auto& m : all_noncrossing_matchings(n))
        if (is_compatible(m, S)) brute.push_back(m);
      CHECK(theta(S) == brute);
      CHECK(theta(S) == theta(S.complement()));
    }
  }
}

TEST_CASE("immanant of the identity matching is the determinant") {
  for (int n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto X = random_int_matrix(n, seed);
      CHECK(tl_immanant(NonCrossingMatching::identity(n), X).value == determinant(X).value);
    }
}

TEST_CASE("immanants on the 2x2 identity matrix") {
  SquareMatrix<CheckedInt> I2(2);
  I2.at(1, 1) = CheckedInt{1};
  I2.at(2, 2) = CheckedInt{1};
  CHECK(tl_immanant(NonCrossingMatching::identity(2), I2).value == 1);
  CHECK(tl_immanant(NonCrossingMatching::generator(1, 2), I2).value == 0);
}

TEST_CASE("minor decomposition color set of the worked example") {
  ColorSet S = decomposition_color_set(SubsetOfN(4, {1, 2}), SubsetOfN(4, {1, 3}));
  CHECK(S.members() == std::set<int>{1, 3, 5, 6});
}

TEST_CASE("complementary minor decomposition on the symbolic 4x4 matrix") {
  // Free generators h_{10i+j} stand in for algebraically independent entries
  // x_{ij}, so equality here is a fully symbolic identity.
  SquareMatrix<HPolynomial> X(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) X.at(i, j) = HPolynomial::h(10 * i + j);
  auto dec = minor_product_decomposition(X, SubsetOfN(4, {1, 2}), SubsetOfN(4, {1, 3}));
  CHECK(dec.color_set.members() == std::set<int>{1, 3, 5, 6});
  CHECK(dec.identity_holds);
  CHECK(dec.minor_product == dec.immanant_sum);
}

TEST_CASE("complementary minor decomposition on random integer matrices") {
  for (int n = 2; n <= 3; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto row_sets = subsets_of_size(n, r);
      for (const auto& I : row_sets)
        for (const auto& J : row_sets)
          for (std::uint64_t seed = 0; seed < 2; ++seed) {
            auto X = random_int_matrix(n, seed * 31 + static_cast<std::uint64_t>(n));
            auto dec = minor_product_decomposition(X, I, J);
            CHECK(dec.identity_holds);
          }
    }
  }
}
