#include "schurtl/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurtl {

bool in_minimal_alcoved(const DominantWeight& tau, const PolytopeSpec& spec) {
  const int n = spec.rank();
  if (spec.mu.rank() != n) throw std::invalid_argument("polytope corners have different ranks");
  if (tau.rank() != n) throw std::invalid_argument("polytope membership: rank mismatch");
  auto tv = tau.coordinates(), lv = spec.lambda.coordinates(), mv = spec.mu.coordinates();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Coeff td = checked_sub(tv[static_cast<std::size_t>(i)], tv[static_cast<std::size_t>(j)]);
      Coeff ld = checked_sub(lv[static_cast<std::size_t>(i)], lv[static_cast<std::size_t>(j)]);
      Coeff md = checked_sub(mv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(j)]);
      if (td < std::min(ld, md) || td > std::max(ld, md)) return false;
    }
  return true;
}

std::vector<std::pair<DominantWeight, DominantWeight>> enumerate_complementary_pairs(
    const PolytopeSpec& spec) {
  const int n = spec.rank();
  if (spec.mu.rank() != n) throw std::invalid_argument("polytope corners have different ranks");
  auto lv = spec.lambda.coordinates(), mv = spec.mu.coordinates();

  // Canonical representatives all have last coordinate 0, so nu + rho =
  // lambda + mu holds coordinatewise on representatives.
  std::vector<Coeff> target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    target[static_cast<std::size_t>(i)] =
        checked_add(lv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(i)]);

  std::vector<std::pair<DominantWeight, DominantWeight>> out;
  std::vector<Coeff> nu(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n - 1) {
      DominantWeight nu_w = reduce_mod_ones(std::span<const Coeff>(nu), n);
      if (!in_minimal_alcoved(nu_w, spec)) return;
      std::vector<Coeff> rho(static_cast<std::size_t>(n));
      for (int t = 0; t < n; ++t)
        rho[static_cast<std::size_t>(t)] =
            checked_sub(target[static_cast<std::size_t>(t)], nu[static_cast<std::size_t>(t)]);
      for (int t = 1; t < n; ++t)
        if (rho[static_cast<std::size_t>(t - 1)] < rho[static_cast<std::size_t>(t)]) return;
      if (rho.back() != 0) return;
      DominantWeight rho_w = reduce_mod_ones(std::span<const Coeff>(rho), n);
      if (!in_minimal_alcoved(rho_w, spec)) return;
      out.emplace_back(std::move(nu_w), std::move(rho_w));
      return;
    }
    // Membership against coordinate n (which is 0) bounds nu_i between
    // lambda_i and mu_i; dominance bounds it by the previous coordinate.
    Coeff lo = std::min(lv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(i)]);
    Coeff hi = std::max(lv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(i)]);
    if (i > 0) hi = std::min(hi, nu[static_cast<std::size_t>(i) - 1]);
    for (Coeff value = lo; value <= hi; ++value) {
      nu[static_cast<std::size_t>(i)] = value;
      self(self, i + 1);
    }
    nu[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schurtl
