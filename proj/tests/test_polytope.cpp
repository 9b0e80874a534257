#include "doctest.h"

#include <set>

#include "schurtl/polytope.hpp"

using namespace schurtl;

namespace {

DominantWeight weight(int n, std::initializer_list<Coeff> parts) {
  return reduce_mod_ones(Partition(std::vector<Coeff>(parts)), n);
}

}  // namespace

TEST_CASE("membership at the corners and beyond") {
  PolytopeSpec box{weight(3, {12, 7}), weight(3, {4, 2})};
  CHECK(in_minimal_alcoved(weight(3, {12, 7}), box));
  CHECK(in_minimal_alcoved(weight(3, {4, 2}), box));
  CHECK(in_minimal_alcoved(weight(3, {5, 2}), box));
  CHECK(in_minimal_alcoved(weight(3, {11, 7}), box));
  CHECK_FALSE(in_minimal_alcoved(weight(3, {13}), box));
  CHECK_THROWS_AS(in_minimal_alcoved(weight(2, {1}), box), std::invalid_argument);
}

TEST_CASE("membership is symmetric in the corners") {
  for (Coeff a = 0; a <= 3; ++a)
    for (Coeff b = 0; b <= a; ++b)
      for (Coeff c = 0; c <= 3; ++c)
        for (Coeff d = 0; d <= c; ++d) {
          PolytopeSpec fwd{weight(3, {a, b}), weight(3, {c, d})};
          PolytopeSpec rev{weight(3, {c, d}), weight(3, {a, b})};
          for (Coeff x = 0; x <= 4; ++x)
            for (Coeff y = 0; y <= x; ++y) {
              DominantWeight tau = weight(3, {x, y});
              CHECK(in_minimal_alcoved(tau, fwd) == in_minimal_alcoved(tau, rev));
            }
        }
}

TEST_CASE("complementary pairs contain the corners and the example pair") {
  PolytopeSpec box{weight(3, {12, 7}), weight(3, {4, 2})};
  auto pairs = enumerate_complementary_pairs(box);
  auto has = [&](const DominantWeight& nu, const DominantWeight& rho) {
    for (const auto& [a, b] : pairs)
      if (a == nu && b == rho) return true;
    return false;
  };
  CHECK(has(weight(3, {12, 7}), weight(3, {4, 2})));
  CHECK(has(weight(3, {11, 7}), weight(3, {5, 2})));
  CHECK(has(weight(3, {5, 2}), weight(3, {11, 7})));

  // Enumeration is symmetric and every member satisfies the membership test.
  for (const auto& [nu, rho] : pairs) {
    CHECK(has(rho, nu));
    CHECK(in_minimal_alcoved(nu, box));
    CHECK(in_minimal_alcoved(rho, box));
  }
}

TEST_CASE("point polytope when the corners coincide") {
  PolytopeSpec box{weight(3, {3, 1}), weight(3, {3, 1})};
  auto pairs = enumerate_complementary_pairs(box);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == weight(3, {3, 1}));
  CHECK(pairs[0].second == weight(3, {3, 1}));
}

TEST_CASE("pair count matches a brute-force box scan at n = 3") {
  for (Coeff a = 0; a <= 4; ++a)
    for (Coeff b = 0; b <= a; ++b)
      for (Coeff c = 0; c <= 4; ++c)
        for (Coeff d = 0; d <= c; ++d) {
          PolytopeSpec box{weight(3, {a, b}), weight(3, {c, d})};
          auto pairs = enumerate_complementary_pairs(box);
          // Brute force over a generous coordinate window.
          std::set<std::pair<std::vector<Coeff>, std::vector<Coeff>>> brute;
          for (Coeff x = 0; x <= 8; ++x)
            for (Coeff y = 0; y <= x; ++y) {
              std::vector<Coeff> nu{x, y, 0};
              std::vector<Coeff> rho{a + c - x, b + d - y, 0};
              if (rho[0] < rho[1] || rho[1] < 0) continue;
              DominantWeight nu_w = weight(3, {x, y});
              DominantWeight rho_w = weight(3, {rho[0], rho[1]});
              if (!in_minimal_alcoved(nu_w, box) || !in_minimal_alcoved(rho_w, box)) continue;
              brute.insert({nu, rho});
            }
          CHECK(pairs.size() == brute.size());
        }
}
