#pragma once

#include <vector>

#include "schurtl/partition.hpp"

namespace schurtl {

/// Triple (I,J,K) of equal-cardinality subsets of {1,...,n}; membership in
/// T_r^n means the LR coefficient c_{lambda(I),lambda(J)}^{lambda(K)} is
/// positive.
struct Triple {
  int n;
  SubsetOfN I, J, K;

  Triple(int ambient, SubsetOfN i, SubsetOfN j, SubsetOfN k);
  int r() const { return I.size(); }
  auto operator<=>(const Triple&) const = default;
};

bool triple_in_T(const Triple& t);

/// All of T_r^n in lexicographic (I,J,K) order. Cached per (r,n).
const std::vector<Triple>& enumerate_triples(int r, int n);

/// The inequality sum_{k in K} g_k <= sum_{i in I} a_i + sum_{j in J} b_j,
/// partitions zero-padded to length n.
bool hk_inequality(const Partition& a, const Partition& b, const Partition& g, const Triple& t);

/// Positivity oracle: c_{a,b}^{g} > 0 iff |g| = |a|+|b| and every inequality
/// for every triple in every T_r^n, r < n, holds.
bool lr_positive_via_hk(const Partition& a, const Partition& b, const Partition& g, int n);

/// Aligned permutations (l_1..l_r) of I and (m_1..m_r) of J.
struct Pairing {
  std::vector<int> l, m;
  int r() const { return static_cast<int>(l.size()); }
};

/// The 2^r subset-swap variants (I', J') of a pairing, as sorted subsets of
/// {1..n}; duplicates are retained (they arise when l_p = m_p).
std::vector<std::pair<SubsetOfN, SubsetOfN>> swap_variants(const Pairing& p, int n);

/// Numeric check of the two-step inequality chain used to transfer a
/// Horn-Klyachko inequality from (lambda, mu) to (nu, rho):
///   sum_p (nu_{l_p} + rho_{m_p})
///     >= sum_p min(lambda_{l_p} + mu_{m_p}, lambda_{m_p} + mu_{l_p})
///     >= sum_{k in K} gamma_k.
/// Preconditions (lambda+mu = nu+rho coordinatewise; nu, rho inside the
/// minimal alcoved polytope of lambda, mu) are enforced with errors.
bool transfer_inequality(const DominantWeight& lambda, const DominantWeight& mu,
                         const DominantWeight& nu, const DominantWeight& rho, const Pairing& p,
                         const Partition& gamma, const Triple& t);

}  // namespace schurtl
