#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurtl/checked.hpp"

namespace schurtl {

/// Integer partition: weakly decreasing nonnegative parts, stored trimmed
/// (no trailing zeros). The empty partition is the zero partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Coeff> parts);

  /// Parses "12,7,0" (trailing zeros accepted, trimmed). Empty string or "0"
  /// gives the zero partition.
  static Partition parse(std::string_view text);

  const std::vector<Coeff>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Zero-padded part access, 1-based.
  Coeff part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  /// |lambda|, overflow-checked.
  Coeff size() const;

  /// Containment of Young diagrams: inner fits inside *this row by row.
  bool contains(const Partition& inner) const;

  std::string to_string() const;
  /// Fixed-width form "a,b,0" zero-padded to `width` parts (for rank-n weights).
  std::string to_string_padded(std::size_t width) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Coeff> parts_;
};

enum class Dominance { LessEq, Greater, Incomparable };

/// Dominance order: a <= b iff |a| == |b| and all prefix sums of a are <= those
/// of b. Unequal sizes compare Incomparable rather than erroring.
Dominance dominance_compare(const Partition& a, const Partition& b);

/// Strictly increasing subset of {1,...,n}, 1-based.
class SubsetOfN {
 public:
  SubsetOfN(int n, std::vector<int> elements);
  int n() const { return n_; }
  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;
  /// Complement within {1,...,n}.
  SubsetOfN complement() const;
  auto operator<=>(const SubsetOfN&) const = default;

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// lambda(I) = (i_1 - r, i_2 - (r-1), ..., i_r - 1) for I = {i_1 > ... > i_r};
/// the empty set gives the zero partition.
Partition partition_from_subset(const SubsetOfN& I);

/// Dominant sl_n weight: canonical representative is a partition with fewer
/// than `rank` nonzero parts (last coordinate pinned to 0).
class DominantWeight {
 public:
  DominantWeight(int rank, Partition rep);
  int rank() const { return rank_; }
  const Partition& rep() const { return rep_; }
  /// Representative lifted to exactly `rank` coordinates (zero-padded).
  std::vector<Coeff> coordinates() const;
  auto operator<=>(const DominantWeight&) const = default;

 private:
  int rank_ = 2;
  Partition rep_;
};

/// Canonical representative of v modulo (1,...,1): subtracts the last
/// coordinate. v must be weakly decreasing with at most n entries.
DominantWeight reduce_mod_ones(std::span<const Coeff> v, int n);
DominantWeight reduce_mod_ones(const Partition& p, int n);

}  // namespace schurtl
