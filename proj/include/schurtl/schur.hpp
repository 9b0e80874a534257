#pragma once

#include <map>
#include <string>

#include "schurtl/partition.hpp"

namespace schurtl {

/// Finite integer combination of Schur functions, keyed by partition.
/// Zero coefficients are never stored.
class SchurVector {
 public:
  SchurVector() = default;
  static SchurVector basis(const Partition& p) { return SchurVector{{{p, 1}}}; }

  const std::map<Partition, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Partition& p) const;

  void add_term(const Partition& p, Coeff c);
  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);
  SchurVector times(Coeff scalar) const;

  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
  bool operator==(const SchurVector&) const = default;

  /// True iff every stored coefficient is the same |key| (vacuously true when empty).
  bool is_homogeneous() const;
  bool all_nonnegative() const;

  std::string to_string() const;

 private:
  explicit SchurVector(std::map<Partition, Coeff> terms) : terms_(std::move(terms)) {}
  std::map<Partition, Coeff> terms_;
};

/// Littlewood-Richardson coefficient c_{a,b}^{c}: counts column-strict skew
/// fillings of c/a with content b whose reverse reading word is a lattice
/// word. Returns 0 whenever |c| != |a|+|b| or a is not contained in c.
/// Memoized on canonical (a,b,c).
Coeff lr_coefficient(const Partition& a, const Partition& b, const Partition& c);

/// s_a * s_b expanded in the Schur basis. Memoized on (a,b).
SchurVector schur_product(const Partition& a, const Partition& b);

/// Pieri rule: h_k * v, adding horizontal strips of size k to every term.
SchurVector pieri_h_multiply(Coeff k, const SchurVector& v);

}  // namespace schurtl
