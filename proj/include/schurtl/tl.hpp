#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "schurtl/hpoly.hpp"
#include "schurtl/partition.hpp"
#include "schurtl/permutation.hpp"

namespace schurtl {

/// Non-crossing perfect matching on [2n], the diagram basis of TL_n(2).
/// Vertex convention: left endpoints are 1..n top to bottom, right endpoints
/// 2n..n+1 top to bottom; non-crossing means no a < b < partner(a) < partner(b)
/// in the linear vertex order. Ordered lexicographically on the partner array.
class NonCrossingMatching {
 public:
  static NonCrossingMatching identity(int n);
  /// Cup-cap diagram of t_i: pairs (i, i+1) and (2n-i, 2n+1-i).
  static NonCrossingMatching generator(int i, int n);
  static NonCrossingMatching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int half_size() const { return n_; }
  int vertices() const { return 2 * n_; }
  /// 1-based partner lookup.
  int partner(int v) const { return partner_[static_cast<std::size_t>(v) - 1] + 1; }
  /// Strands as (a, b) with a < b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;

  /// Debug dump, one strand per line "a-b".
  std::string to_ascii() const;

  auto operator<=>(const NonCrossingMatching&) const = default;

 private:
  NonCrossingMatching(int n, std::vector<int> partner)
      : n_(n), partner_(std::move(partner)) {}
  int n_ = 0;
  std::vector<int> partner_;  // 0-based internally
};

/// Diagram concatenation a.b (a glued on the left of b) together with the
/// number of closed loops formed.
struct GluedProduct {
  NonCrossingMatching matching;
  int loops;
};
GluedProduct concat_diagrams(const NonCrossingMatching& a, const NonCrossingMatching& b);

/// Integer combination of diagram basis elements of TL_n(2). Multiplication
/// counts closed loops explicitly and weights each by the loop value 2, so a
/// generic-xi variant is one constant away.
class TLElement {
 public:
  static constexpr Coeff kLoopWeight = 2;

  explicit TLElement(int n) : n_(n) {}
  static TLElement unit(int n);
  static TLElement generator_t(int i, int n);
  static TLElement basis(const NonCrossingMatching& m);

  int half_size() const { return n_; }
  const std::map<NonCrossingMatching, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const NonCrossingMatching& m) const;

  void add_term(const NonCrossingMatching& m, Coeff c);
  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  TLElement times(Coeff scalar) const;
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  bool operator==(const TLElement&) const = default;

 private:
  int n_;
  std::map<NonCrossingMatching, Coeff> terms_;
};

/// All non-crossing matchings on [2n] in canonical (lexicographic) order;
/// there are Catalan(n) of them.
std::vector<NonCrossingMatching> all_noncrossing_matchings(int n);

/// Diagram of t_w for 321-avoiding w: evaluates the generator product over a
/// reduced word; the result is a single matching with coefficient 1.
NonCrossingMatching matching_of_permutation(const Permutation& w);

/// Basis expansion of (t_{i_1}-1)...(t_{i_l}-1) over a reduced word of v;
/// f_w(v) is the coefficient at the matching of t_w. Memoized per v.
std::map<NonCrossingMatching, Coeff> f_coefficients(const Permutation& v);
std::map<NonCrossingMatching, Coeff> f_coefficients_from_word(std::span<const int> word, int n);

/// Subset of [2n] acting as the black vertex set of a two-coloring.
class ColorSet {
 public:
  ColorSet(int half_size, std::set<int> members);
  int half_size() const { return n_; }
  const std::set<int>& members() const { return members_; }
  bool contains(int v) const { return members_.contains(v); }
  /// Complement within [2n].
  ColorSet complement() const;
  auto operator<=>(const ColorSet&) const = default;

 private:
  int n_;
  std::set<int> members_;
};

/// True iff every strand of m has exactly one endpoint in S.
bool is_compatible(const NonCrossingMatching& m, const ColorSet& S);

/// Theta(S): all S-compatible non-crossing matchings, canonical order.
/// Empty whenever |S| != n.
std::vector<NonCrossingMatching> theta(const ColorSet& S);

/// Temperley-Lieb immanant of an n x n ring matrix at basis matching m:
/// sum over v in S_n of f_m(v) * x_{1,v(1)} ... x_{n,v(n)}.
template <typename Ring>
Ring tl_immanant(const NonCrossingMatching& m, const SquareMatrix<Ring>& X);

/// All immanants of X at once: one sweep over S_n, entry products shared.
template <typename Ring>
std::map<NonCrossingMatching, Ring> tl_immanants_all(const SquareMatrix<Ring>& X);

/// Theorem-of-complementary-minors data: for |I| = |J|, the product
/// Delta_{I,J}(X) * Delta_{Ibar,Jbar}(X) equals the sum of the Theta(S)
/// immanants for S = J u (Ibar)^wedge, with I^wedge = {2n+1-i}.
template <typename Ring>
struct MinorDecomposition {
  ColorSet color_set;
  std::vector<std::pair<NonCrossingMatching, Ring>> immanants;
  Ring minor_product;
  Ring immanant_sum;
  bool identity_holds;
};

ColorSet decomposition_color_set(const SubsetOfN& I, const SubsetOfN& J);

template <typename Ring>
MinorDecomposition<Ring> minor_product_decomposition(const SquareMatrix<Ring>& X,
                                                     const SubsetOfN& I, const SubsetOfN& J);

// ---- template implementations ----

template <typename Ring>
std::map<NonCrossingMatching, Ring> tl_immanants_all(const SquareMatrix<Ring>& X) {
  const int n = X.n();
  std::map<NonCrossingMatching, Ring> acc;
  for (const NonCrossingMatching& m : all_noncrossing_matchings(n))
    acc.emplace(m, Ring::zero());
  for (const Permutation& v : all_permutations(n)) {
    Ring product = Ring::one();
    bool zero = false;
    for (int i = 1; i <= n && !zero; ++i) {
      const Ring& entry = X.at(i, v(i));
      if (entry.is_zero()) zero = true;
      else product = product * entry;
    }
    if (zero) continue;
    for (const auto& [m, coeff] : f_coefficients(v)) {
      auto it = acc.find(m);
      it->second = it->second + product.times(coeff);
    }
  }
  return acc;
}

template <typename Ring>
Ring tl_immanant(const NonCrossingMatching& m, const SquareMatrix<Ring>& X) {
  if (X.n() != m.half_size()) throw std::invalid_argument("immanant: size mismatch");
  const int n = X.n();
  Ring acc = Ring::zero();
  for (const Permutation& v : all_permutations(n)) {
    Coeff coeff = 0;
    {
      const auto f = f_coefficients(v);
      auto it = f.find(m);
      if (it == f.end()) continue;
      coeff = it->second;
    }
    Ring product = Ring::one();
    bool zero = false;
    for (int i = 1; i <= n && !zero; ++i) {
      const Ring& entry = X.at(i, v(i));
      if (entry.is_zero()) zero = true;
      else product = product * entry;
    }
    if (zero) continue;
    acc = acc + product.times(coeff);
  }
  return acc;
}

template <typename Ring>
MinorDecomposition<Ring> minor_product_decomposition(const SquareMatrix<Ring>& X,
                                                     const SubsetOfN& I, const SubsetOfN& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor decomposition: |I| != |J|");
  if (I.n() != X.n() || J.n() != X.n())
    throw std::invalid_argument("minor decomposition: subset ambient size mismatch");
  ColorSet S = decomposition_color_set(I, J);

  Ring lhs = minor_det(X, I.elements(), J.elements()) *
             minor_det(X, I.complement().elements(), J.complement().elements());

  auto all = tl_immanants_all(X);
  MinorDecomposition<Ring> out{S, {}, lhs, Ring::zero(), false};
  for (const NonCrossingMatching& m : theta(S)) {
    const Ring& imm = all.at(m);
    out.immanant_sum = out.immanant_sum + imm;
    out.immanants.emplace_back(m, imm);
  }
  out.identity_holds = out.minor_product == out.immanant_sum;
  return out;
}

}  // namespace schurtl
