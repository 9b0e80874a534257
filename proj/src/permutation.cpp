#include "schurtl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurtl {

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_line(std::vector<int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : image) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("one-line notation is not a bijection of [n]");
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::from_word(std::span<const int> word, int n) {
  Permutation v = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    std::swap(v.image_[static_cast<std::size_t>(i) - 1], v.image_[static_cast<std::size_t>(i)]);
  }
  return v;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const { return inversions() == 0; }

bool Permutation::is_321_avoiding() const {
  const std::size_t n = image_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (image_[i] <= image_[j]) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (image_[j] > image_[k]) return false;
    }
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  // Sort a copy to the identity by moving the largest misplaced value right
  // into its slot; each adjacent swap removes exactly one inversion. The
  // recorded swap positions, reversed, form a reduced word for *this.
  std::vector<int> a = image_;
  const int n = static_cast<int>(a.size());
  std::vector<int> sort_word;
  for (int value = n; value >= 1; --value) {
    int pos = static_cast<int>(std::find(a.begin(), a.end(), value) - a.begin()) + 1;
    for (int j = pos; j < value; ++j) {
      std::swap(a[static_cast<std::size_t>(j) - 1], a[static_cast<std::size_t>(j)]);
      sort_word.push_back(j);
    }
  }
  std::reverse(sort_word.begin(), sort_word.end());
  return sort_word;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation::from_one_line(std::move(inv));
}

namespace {

void collect_reduced_words(const Permutation& v, std::vector<int>& suffix,
                           std::vector<std::vector<int>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (v.is_identity()) {
    std::vector<int> word(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(word));
    return;
  }
  // Right descents i (v(i) > v(i+1)) are exactly the possible last letters.
  for (int i = 1; i < v.n(); ++i) {
    if (v(i) <= v(i + 1)) continue;
    std::vector<int> shorter = v.one_line();
    std::swap(shorter[static_cast<std::size_t>(i) - 1], shorter[static_cast<std::size_t>(i)]);
    suffix.push_back(i);
    collect_reduced_words(Permutation::from_one_line(std::move(shorter)), suffix, out, limit);
    suffix.pop_back();
    if (out.size() >= limit) return;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_reduced_words(const Permutation& v, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (limit == 0) return out;
  std::vector<int> suffix;
  collect_reduced_words(v, suffix, out, limit);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace schurtl
