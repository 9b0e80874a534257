#include "schurtl/horn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "schurtl/polytope.hpp"
#include "schurtl/schur.hpp"

namespace schurtl {

Triple::Triple(int ambient, SubsetOfN i, SubsetOfN j, SubsetOfN k)
    : n(ambient), I(std::move(i)), J(std::move(j)), K(std::move(k)) {
  if (I.n() != n || J.n() != n || K.n() != n)
    throw std::invalid_argument("triple: subset ambient size mismatch");
  if (I.size() != J.size() || I.size() != K.size())
    throw std::invalid_argument("triple: subsets must have equal cardinality");
  if (I.size() >= n) throw std::invalid_argument("triple: need r < n");
  if (I.size() < 1) throw std::invalid_argument("triple: need r >= 1");
}

bool triple_in_T(const Triple& t) {
  return lr_coefficient(partition_from_subset(t.I), partition_from_subset(t.J),
                        partition_from_subset(t.K)) > 0;
}

namespace {

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

const std::vector<Triple>& enumerate_triples(int r, int n) {
  if (r < 1 || r >= n) throw std::invalid_argument("enumerate_triples needs 1 <= r < n");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Triple>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find({r, n});
  if (it != cache.end()) return it->second;

  std::vector<Triple> out;
  auto subsets = subsets_of_size(n, r);
  for (const auto& I : subsets)
    for (const auto& J : subsets)
      for (const auto& K : subsets) {
        Triple t(n, I, J, K);
        if (triple_in_T(t)) out.push_back(std::move(t));
      }
  return cache.emplace(std::make_pair(r, n), std::move(out)).first->second;
}

bool hk_inequality(const Partition& a, const Partition& b, const Partition& g, const Triple& t) {
  Coeff lhs = 0, rhs = 0;
  for (int k : t.K.elements()) lhs = checked_add(lhs, g.part(static_cast<std::size_t>(k)));
  for (int i : t.I.elements()) rhs = checked_add(rhs, a.part(static_cast<std::size_t>(i)));
  for (int j : t.J.elements()) rhs = checked_add(rhs, b.part(static_cast<std::size_t>(j)));
  return lhs <= rhs;
}

bool lr_positive_via_hk(const Partition& a, const Partition& b, const Partition& g, int n) {
  if (n < 1) throw std::invalid_argument("lr_positive_via_hk needs n >= 1");
  if (a.length() > static_cast<std::size_t>(n) || b.length() > static_cast<std::size_t>(n) ||
      g.length() > static_cast<std::size_t>(n))
    throw std::invalid_argument("lr_positive_via_hk: partition longer than n");
  if (g.size() != checked_add(a.size(), b.size())) return false;
  for (int r = 1; r < n; ++r)
    for (const Triple& t : enumerate_triples(r, n))
      if (!hk_inequality(a, b, g, t)) return false;
  return true;
}

std::vector<std::pair<SubsetOfN, SubsetOfN>> swap_variants(const Pairing& p, int n) {
  if (p.l.size() != p.m.size()) throw std::invalid_argument("pairing: length mismatch");
  const int r = p.r();
  std::vector<std::pair<SubsetOfN, SubsetOfN>> out;
  out.reserve(static_cast<std::size_t>(1) << r);
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> left, right;
    for (int pos = 0; pos < r; ++pos) {
      bool swapped = (mask >> pos) & 1;
      left.push_back(swapped ? p.m[static_cast<std::size_t>(pos)] : p.l[static_cast<std::size_t>(pos)]);
      right.push_back(swapped ? p.l[static_cast<std::size_t>(pos)] : p.m[static_cast<std::size_t>(pos)]);
    }
    out.emplace_back(SubsetOfN(n, std::move(left)), SubsetOfN(n, std::move(right)));
  }
  return out;
}

bool transfer_inequality(const DominantWeight& lambda, const DominantWeight& mu,
                         const DominantWeight& nu, const DominantWeight& rho, const Pairing& p,
                         const Partition& gamma, const Triple& t) {
  const int n = lambda.rank();
  if (mu.rank() != n || nu.rank() != n || rho.rank() != n)
    throw std::invalid_argument("transfer_inequality: rank mismatch");
  if (t.n != n) throw std::invalid_argument("transfer_inequality: triple ambient mismatch");
  if (static_cast<int>(p.l.size()) != t.I.size())
    throw std::invalid_argument("transfer_inequality: pairing size mismatch");

  auto lv = lambda.coordinates(), mv = mu.coordinates(), nv = nu.coordinates(),
       rv = rho.coordinates();
  for (int i = 0; i < n; ++i)
    if (checked_add(lv[static_cast<std::size_t>(i)], mv[static_cast<std::size_t>(i)]) !=
        checked_add(nv[static_cast<std::size_t>(i)], rv[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("transfer_inequality: lambda+mu != nu+rho");
  PolytopeSpec box{lambda, mu};
  if (!in_minimal_alcoved(nu, box) || !in_minimal_alcoved(rho, box))
    throw std::invalid_argument("transfer_inequality: nu or rho outside the minimal polytope");

  {
    std::vector<int> ls = p.l, ms = p.m, is = t.I.elements(), js = t.J.elements();
    std::sort(ls.begin(), ls.end());
    std::sort(ms.begin(), ms.end());
    if (ls != is || ms != js)
      throw std::invalid_argument("transfer_inequality: pairing does not permute I and J");
  }

  Coeff upper = 0, mid = 0, lower = 0;
  for (int pos = 0; pos < p.r(); ++pos) {
    const std::size_t lp = static_cast<std::size_t>(p.l[static_cast<std::size_t>(pos)]) - 1;
    const std::size_t mp = static_cast<std::size_t>(p.m[static_cast<std::size_t>(pos)]) - 1;
    upper = checked_add(upper, checked_add(nv[lp], rv[mp]));
    mid = checked_add(mid, std::min(checked_add(lv[lp], mv[mp]), checked_add(lv[mp], mv[lp])));
  }
  for (int k : t.K.elements()) lower = checked_add(lower, gamma.part(static_cast<std::size_t>(k)));
  return upper >= mid && mid >= lower;
}

}  // namespace schurtl
