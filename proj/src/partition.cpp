#include "schurtl/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace schurtl {

Partition::Partition(std::vector<Coeff> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<Coeff> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    Coeff value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed partition string: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Coeff Partition::size() const {
  Coeff total = 0;
  for (Coeff p : parts_) total = checked_add(total, p);
  return total;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_string_padded(std::size_t width) const {
  std::string out;
  for (std::size_t i = 1; i <= std::max(width, parts_.size()); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(part(i));
  }
  return out;
}

Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return Dominance::Incomparable;
  std::size_t len = std::max(a.length(), b.length());
  bool a_le_b = true, b_le_a = true;
  Coeff pa = 0, pb = 0;
  for (std::size_t i = 1; i <= len; ++i) {
    pa = checked_add(pa, a.part(i));
    pb = checked_add(pb, b.part(i));
    if (pa > pb) a_le_b = false;
    if (pb > pa) b_le_a = false;
  }
  if (a_le_b) return Dominance::LessEq;
  if (b_le_a) return Dominance::Greater;
  return Dominance::Incomparable;
}

SubsetOfN::SubsetOfN(int n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("subset ambient size must be >= 1");
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n_) throw std::invalid_argument("subset element out of range");
    if (i > 0 && elems_[i] == elems_[i - 1]) throw std::invalid_argument("subset element repeated");
  }
}

bool SubsetOfN::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

SubsetOfN SubsetOfN::complement() const {
  std::vector<int> rest;
  for (int x = 1; x <= n_; ++x)
    if (!contains(x)) rest.push_back(x);
  return SubsetOfN(n_, std::move(rest));
}

Partition partition_from_subset(const SubsetOfN& I) {
  const auto& elems = I.elements();
  const int r = static_cast<int>(elems.size());
  std::vector<Coeff> parts(elems.size());
  // elems is ascending; lambda_k = i_k - (r+1-k) with i_1 > ... > i_r descending.
  for (int k = 0; k < r; ++k) parts[k] = elems[r - 1 - k] - (r - k);
  return Partition(std::move(parts));
}

DominantWeight::DominantWeight(int rank, Partition rep) : rank_(rank), rep_(std::move(rep)) {
  if (rank_ < 2) throw std::invalid_argument("weight rank must be >= 2");
  if (rep_.length() >= static_cast<std::size_t>(rank_))
    throw std::invalid_argument("weight representative must have fewer than rank nonzero parts");
}

std::vector<Coeff> DominantWeight::coordinates() const {
  std::vector<Coeff> v(static_cast<std::size_t>(rank_), 0);
  for (std::size_t i = 0; i < rep_.length(); ++i) v[i] = rep_.parts()[i];
  return v;
}

DominantWeight reduce_mod_ones(std::span<const Coeff> v, int n) {
  if (n < 2) throw std::invalid_argument("weight rank must be >= 2");
  if (v.size() > static_cast<std::size_t>(n))
    throw std::invalid_argument("vector longer than rank");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) throw std::invalid_argument("vector not weakly decreasing");
  Coeff last = v.size() == static_cast<std::size_t>(n) ? v.back() : 0;
  std::vector<Coeff> rep;
  rep.reserve(v.size());
  for (Coeff x : v) rep.push_back(checked_sub(x, last));
  return DominantWeight(n, Partition(std::move(rep)));
}

DominantWeight reduce_mod_ones(const Partition& p, int n) {
  return reduce_mod_ones(std::span<const Coeff>(p.parts()), n);
}

}  // namespace schurtl
