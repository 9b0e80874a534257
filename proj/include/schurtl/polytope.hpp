#pragma once

#include <utility>
#include <vector>

#include "schurtl/partition.hpp"

namespace schurtl {

/// The minimal alcoved polytope P_{lambda,mu}: the parallelepiped of weights
/// tau with every difference tau_i - tau_j weakly between lambda_i - lambda_j
/// and mu_i - mu_j. Differences are well defined on the quotient lattice.
struct PolytopeSpec {
  DominantWeight lambda, mu;
  int rank() const { return lambda.rank(); }
};

bool in_minimal_alcoved(const DominantWeight& tau, const PolytopeSpec& spec);

/// All ordered pairs (nu, rho) of dominant weights with nu + rho = lambda + mu
/// on canonical representatives and both members inside P_{lambda,mu}.
/// Deterministic (lexicographic in nu) order.
std::vector<std::pair<DominantWeight, DominantWeight>> enumerate_complementary_pairs(
    const PolytopeSpec& spec);

}  // namespace schurtl
