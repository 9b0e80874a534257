#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurtl/partition.hpp"
#include "schurtl/schur.hpp"

namespace schurtl {

/// Monomial in the homogeneous symmetric functions: a multiset of positive
/// h-indices stored sorted nonincreasing. The empty monomial is the ring unit.
using HMonomial = std::vector<Coeff>;

/// Element of the ring generated by h_1, h_2, ... over the integers (a free
/// commutative polynomial ring; no relations between the h_k).
class HPolynomial {
 public:
  HPolynomial() = default;
  static HPolynomial zero() { return {}; }
  static HPolynomial one();
  /// h_k: unit for k = 0, zero for k < 0.
  static HPolynomial h(Coeff k);
  static HPolynomial constant(Coeff c);
  static HPolynomial monomial(HMonomial m, Coeff c = 1);

  const std::map<HMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const HMonomial& m) const;

  void add_term(HMonomial m, Coeff c);
  HPolynomial& operator+=(const HPolynomial& other);
  HPolynomial& operator-=(const HPolynomial& other);
  HPolynomial times(Coeff scalar) const;

  friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
  friend HPolynomial operator-(HPolynomial a, const HPolynomial& b) { return a -= b; }
  friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
  bool operator==(const HPolynomial&) const = default;

  std::string to_string() const;

 private:
  std::map<HMonomial, Coeff> terms_;
};

/// Integer ring element with overflow-checked arithmetic; used as the matrix
/// entry type for exact integer minors and immanants.
struct CheckedInt {
  Coeff value = 0;
  CheckedInt() = default;
  CheckedInt(Coeff v) : value(v) {}  // NOLINT: implicit by design
  static CheckedInt zero() { return {0}; }
  static CheckedInt one() { return {1}; }
  bool is_zero() const { return value == 0; }
  CheckedInt times(Coeff scalar) const { return {checked_mul(value, scalar)}; }
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return {checked_add(a.value, b.value)}; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return {checked_sub(a.value, b.value)}; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return {checked_mul(a.value, b.value)}; }
  bool operator==(const CheckedInt&) const = default;
};

/// Square matrix over a commutative ring (HPolynomial or CheckedInt).
/// Entry access is 1-based to match the mathematical conventions used
/// throughout the library.
template <typename Ring>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  int n() const { return n_; }
  Ring& at(int i, int j) { return data_[idx(i, j)]; }
  const Ring& at(int i, int j) const { return data_[idx(i, j)]; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }
  int n_;
  std::vector<Ring> data_;
};

/// Determinant of the square submatrix on `rows` x `cols` (both sorted
/// ascending, equal cardinality) by cofactor expansion. Empty sets give one.
template <typename Ring>
Ring minor_det(const SquareMatrix<Ring>& X, const std::vector<int>& rows,
               const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row/col size mismatch");
  const std::size_t k = rows.size();
  if (k == 0) return Ring::one();
  if (k == 1) return X.at(rows[0], cols[0]);
  Ring det = Ring::zero();
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  std::vector<int> sub_cols;
  sub_cols.reserve(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    const Ring& pivot = X.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Ring contribution = pivot * minor_det(X, sub_rows, sub_cols);
    det = (j % 2 == 0) ? det + contribution : det - contribution;
  }
  return det;
}

template <typename Ring>
Ring determinant(const SquareMatrix<Ring>& X) {
  std::vector<int> all(static_cast<std::size_t>(X.n()));
  for (int i = 1; i <= X.n(); ++i) all[static_cast<std::size_t>(i) - 1] = i;
  return minor_det(X, all, all);
}

/// Generalized Jacobi-Trudi matrix: entry (i,j) = h_{V_i - U_j} with h_0 = 1
/// and h_{<0} = 0. V and U must be nonincreasing and of equal length.
SquareMatrix<HPolynomial> generalized_jacobi_trudi(const std::vector<Coeff>& V,
                                                   const std::vector<Coeff>& U);

/// Expands an h-polynomial in the Schur basis by iterated Pieri
/// multiplication starting from s_0. Memoized per monomial.
SchurVector h_poly_to_schur(const HPolynomial& p);

}  // namespace schurtl
