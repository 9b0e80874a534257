#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace schurtl {

/// Permutation of {1,...,n} in one-line notation. Generator words use
/// 1-based indices: letter i stands for the adjacent transposition s_i.
class Permutation {
 public:
  static Permutation identity(int n);
  static Permutation from_one_line(std::vector<int> image);
  /// Evaluates s_{w[0]} s_{w[1]} ... s_{w[l-1]} (left-to-right position swaps).
  static Permutation from_word(std::span<const int> word, int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& one_line() const { return image_; }

  int inversions() const;
  bool is_identity() const;

  /// True iff no i<j<k with v(i)>v(j)>v(k).
  bool is_321_avoiding() const;

  /// Canonical reduced word (selection-sort word): repeatedly move the largest
  /// misplaced value to its slot; length always equals the inversion count.
  std::vector<int> reduced_word() const;

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

/// Up to `limit` distinct reduced words of v (all of them if limit is large
/// enough), in a deterministic order.
std::vector<std::vector<int>> enumerate_reduced_words(const Permutation& v, std::size_t limit);

/// All permutations of {1,...,n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schurtl
