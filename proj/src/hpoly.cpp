#include "schurtl/hpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schurtl/memo.hpp"

namespace schurtl {

HPolynomial HPolynomial::one() {
  HPolynomial p;
  p.terms_.emplace(HMonomial{}, 1);
  return p;
}

HPolynomial HPolynomial::h(Coeff k) {
  if (k < 0) return zero();
  if (k == 0) return one();
  HPolynomial p;
  p.terms_.emplace(HMonomial{k}, 1);
  return p;
}

HPolynomial HPolynomial::constant(Coeff c) {
  HPolynomial p;
  if (c != 0) p.terms_.emplace(HMonomial{}, c);
  return p;
}

HPolynomial HPolynomial::monomial(HMonomial m, Coeff c) {
  for (Coeff k : m)
    if (k <= 0) throw std::invalid_argument("h-monomial indices must be positive");
  std::sort(m.begin(), m.end(), std::greater<Coeff>{});
  HPolynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

Coeff HPolynomial::coefficient(const HMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void HPolynomial::add_term(HMonomial m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HPolynomial& HPolynomial::operator-=(const HPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_sub(0, c));
  return *this;
}

HPolynomial HPolynomial::times(Coeff scalar) const {
  HPolynomial out;
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, scalar));
  return out;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
  HPolynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      HMonomial merged;
      merged.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged),
                 std::greater<Coeff>{});
      out.add_term(std::move(merged), checked_mul(ca, cb));
    }
  }
  return out;
}

std::string HPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Coeff mag = c < 0 ? checked_sub(0, c) : c;
    std::string mono;
    for (Coeff k : m) {
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(k);
    }
    if (mono.empty()) out += std::to_string(mag);
    else if (mag == 1) out += mono;
    else out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

SquareMatrix<HPolynomial> generalized_jacobi_trudi(const std::vector<Coeff>& V,
                                                   const std::vector<Coeff>& U) {
  if (V.size() != U.size()) throw std::invalid_argument("jacobi-trudi: |V| != |U|");
  for (std::size_t i = 1; i < V.size(); ++i)
    if (V[i - 1] < V[i]) throw std::invalid_argument("jacobi-trudi: V not nonincreasing");
  for (std::size_t j = 1; j < U.size(); ++j)
    if (U[j - 1] < U[j]) throw std::invalid_argument("jacobi-trudi: U not nonincreasing");
  const int n = static_cast<int>(V.size());
  SquareMatrix<HPolynomial> X(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      X.at(i, j) = HPolynomial::h(V[static_cast<std::size_t>(i) - 1] -
                                  U[static_cast<std::size_t>(j) - 1]);
  return X;
}

namespace {

MemoCache<HMonomial, SchurVector, VectorHash>& monomial_cache() {
  static MemoCache<HMonomial, SchurVector, VectorHash> cache;
  return cache;
}

SchurVector expand_monomial(const HMonomial& m) {
  if (auto hit = monomial_cache().find(m)) return *hit;
  SchurVector v = SchurVector::basis(Partition{});
  for (Coeff k : m) v = pieri_h_multiply(k, v);
  monomial_cache().insert(m, v);
  return v;
}

}  // namespace

SchurVector h_poly_to_schur(const HPolynomial& p) {
  SchurVector out;
  for (const auto& [m, c] : p.terms()) out += expand_monomial(m).times(c);
  return out;
}

}  // namespace schurtl
