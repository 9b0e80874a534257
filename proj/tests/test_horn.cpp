#include "doctest.h"

#include <set>

#include "schurtl/horn.hpp"
#include "schurtl/schur.hpp"

using namespace schurtl;

TEST_CASE("triple membership basics") {
  CHECK(triple_in_T(Triple(2, SubsetOfN(2, {1}), SubsetOfN(2, {1}), SubsetOfN(2, {1}))));
  CHECK_FALSE(triple_in_T(Triple(3, SubsetOfN(3, {1}), SubsetOfN(3, {1}), SubsetOfN(3, {2}))));
  CHECK(triple_in_T(Triple(4, SubsetOfN(4, {2}), SubsetOfN(4, {2}), SubsetOfN(4, {3}))));
  CHECK_THROWS_AS(Triple(3, SubsetOfN(3, {1}), SubsetOfN(3, {1, 2}), SubsetOfN(3, {1})),
                  std::invalid_argument);
}

TEST_CASE("T_1^n matches the single-row rule") {
  // In T_1^n the only option is k = i + j - 1 (single-row LR coefficients).
  for (int n = 2; n <= 5; ++n) {
    const auto& triples = enumerate_triples(1, n);
    std::set<std::tuple<int, int, int>> got;
    for (const Triple& t : triples)
      got.insert({t.I.elements()[0], t.J.elements()[0], t.K.elements()[0]});
    std::set<std::tuple<int, int, int>> expected;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i + j - 1 <= n) expected.insert({i, j, i + j - 1});
    CHECK(got == expected);
  }
  CHECK(enumerate_triples(1, 2).size() == 3);
  CHECK(enumerate_triples(1, 3).size() == 6);
}

TEST_CASE("triple sets are symmetric in I and J") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r < n; ++r) {
      const auto& triples = enumerate_triples(r, n);
      std::set<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> set_of;
      for (const Triple& t : triples)
        set_of.insert({t.I.elements(), t.J.elements(), t.K.elements()});
      for (const Triple& t : triples) {
        CHECK(set_of.contains({t.J.elements(), t.I.elements(), t.K.elements()}));
        // Sizes must be consistent with a nonvanishing LR coefficient.
        CHECK(partition_from_subset(t.K).size() ==
              partition_from_subset(t.I).size() + partition_from_subset(t.J).size());
      }
    }
}

TEST_CASE("hk inequality explicit values") {
  Triple t(3, SubsetOfN(3, {1}), SubsetOfN(3, {1}), SubsetOfN(3, {1}));
  CHECK(hk_inequality(Partition{}, Partition{}, Partition{}, t));
  CHECK(hk_inequality(Partition({1}), Partition({1}), Partition({1}), t));
  CHECK(hk_inequality(Partition({1}), Partition({1}), Partition({2}), t));
  CHECK_FALSE(hk_inequality(Partition({1}), Partition({1}), Partition({3}), t));
}

TEST_CASE("positivity oracle on explicit cases") {
  CHECK(lr_positive_via_hk(Partition({1}), Partition({1}), Partition({2}), 2));
  CHECK_FALSE(lr_positive_via_hk(Partition({1}), Partition({1}), Partition({3}), 2));
  CHECK(lr_positive_via_hk(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1}), 3));
}

namespace {

void gen_bounded_partitions(int rows, Coeff max_part, std::vector<Coeff>& prefix,
                            std::vector<Partition>& out) {
  out.push_back(Partition(prefix));
  if (static_cast<int>(prefix.size()) == rows) return;
  Coeff hi = prefix.empty() ? max_part : prefix.back();
  for (Coeff next = 1; next <= hi; ++next) {
    prefix.push_back(next);
    gen_bounded_partitions(rows, max_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("oracle equivalence with the LR rule at n = 3, parts <= 3") {
  // The full bound-4 scan is in the acceptance suite; this is the fast version.
  std::vector<Partition> shapes;
  std::vector<Coeff> prefix;
  gen_bounded_partitions(3, 3, prefix, shapes);
  for (const Partition& a : shapes)
    for (const Partition& b : shapes)
      for (const Partition& g : shapes) {
        if (g.size() != a.size() + b.size()) continue;
        CHECK(lr_positive_via_hk(a, b, g, 3) == (lr_coefficient(a, b, g) > 0));
      }
}

TEST_CASE("swap variants") {
  Pairing p{{2}, {5}};
  auto variants = swap_variants(p, 6);
  REQUIRE(variants.size() == 2);
  CHECK(variants[0].first.elements() == std::vector<int>{2});
  CHECK(variants[0].second.elements() == std::vector<int>{5});
  CHECK(variants[1].first.elements() == std::vector<int>{5});
  CHECK(variants[1].second.elements() == std::vector<int>{2});

  Pairing p2{{1, 3}, {2, 4}};
  CHECK(swap_variants(p2, 4).size() == 4);

  // The no-swap variant is always (I, J) itself.
  auto v2 = swap_variants(p2, 4);
  CHECK(v2[0].first.elements() == std::vector<int>{1, 3});
  CHECK(v2[0].second.elements() == std::vector<int>{2, 4});
}

TEST_CASE("transfer inequality chain") {
  // nu = lambda, rho = mu reduces to the plain Horn-Klyachko inequality.
  DominantWeight lambda = reduce_mod_ones(Partition({12, 7}), 3);
  DominantWeight mu = reduce_mod_ones(Partition({4, 2}), 3);
  DominantWeight nu = reduce_mod_ones(Partition({5, 2}), 3);
  DominantWeight rho = reduce_mod_ones(Partition({11, 7}), 3);

  // gamma in the support of chi_lambda * chi_mu lifted back to a partition:
  // (12,7) + (4,2) has top weight (16,9,0).
  Partition gamma({16, 9});
  for (const Triple& t : enumerate_triples(1, 3)) {
    Pairing p{{t.I.elements()[0]}, {t.J.elements()[0]}};
    CHECK(transfer_inequality(lambda, mu, lambda, mu, p, gamma, t) ==
          hk_inequality(Partition({12, 7}), Partition({4, 2}), gamma, t));
    CHECK(transfer_inequality(lambda, mu, nu, rho, p, gamma, t));
  }

  // Degenerate lambda = mu: both min arguments coincide.
  for (const Triple& t : enumerate_triples(1, 3)) {
    Pairing p{{t.I.elements()[0]}, {t.J.elements()[0]}};
    CHECK(transfer_inequality(lambda, lambda, lambda, lambda, p, Partition({24, 14}), t) ==
          hk_inequality(Partition({12, 7}), Partition({12, 7}), Partition({24, 14}), t));
  }

  // Precondition violations are hard errors.
  Pairing p{{1}, {1}};
  Triple t(3, SubsetOfN(3, {1}), SubsetOfN(3, {1}), SubsetOfN(3, {1}));
  CHECK_THROWS_AS(transfer_inequality(lambda, mu, nu, lambda, p, gamma, t),
                  std::invalid_argument);
}
