#pragma once

#include <map>
#include <string>

#include "schurtl/partition.hpp"
#include "schurtl/schur.hpp"

namespace schurtl {

/// Integer combination of sl_n characters chi_lambda, keyed by the canonical
/// weight representative (a partition with fewer than n nonzero parts).
class CharacterVector {
 public:
  explicit CharacterVector(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<Partition, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const DominantWeight& w) const;

  void add_term(const DominantWeight& w, Coeff c);
  CharacterVector& operator+=(const CharacterVector& other);
  CharacterVector& operator-=(const CharacterVector& other);

  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) { return a += b; }
  friend CharacterVector operator-(CharacterVector a, const CharacterVector& b) { return a -= b; }
  bool operator==(const CharacterVector&) const = default;

  bool all_nonnegative() const;
  std::string to_string() const;

 private:
  int rank_;
  std::map<Partition, Coeff> terms_;
};

/// chi_l * chi_m: Schur product of the representatives, terms with more than
/// n parts discarded, surviving keys reduced modulo (1,...,1).
CharacterVector character_product(const DominantWeight& l, const DominantWeight& m);

}  // namespace schurtl
