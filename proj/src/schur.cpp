#include "schurtl/schur.hpp"

#include <algorithm>

#include "schurtl/memo.hpp"

namespace schurtl {

Coeff SchurVector::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SchurVector::add_term(const Partition& p, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, checked_sub(0, c));
  return *this;
}

SchurVector SchurVector::times(Coeff scalar) const {
  SchurVector out;
  if (scalar == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, checked_mul(c, scalar));
  return out;
}

bool SchurVector::is_homogeneous() const {
  if (terms_.empty()) return true;
  Coeff degree = terms_.begin()->first.size();
  for (const auto& [p, c] : terms_)
    if (p.size() != degree) return false;
  return true;
}

bool SchurVector::all_nonnegative() const {
  for (const auto& [p, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "s(" + p.to_string() + ")";
  }
  return out;
}

namespace {

struct SkewCell {
  int row;        // 1-based
  Coeff col;      // 1-based
  int right;      // index of the cell to the right in the same row, -1 if none
  int above;      // index of the skew cell directly above, -1 if none
};

// Cells of c/a in reverse reading order: rows top to bottom, right to left
// within each row. This is exactly the order in which the lattice condition
// is checked prefix by prefix.
std::vector<SkewCell> skew_cells(const Partition& a, const Partition& c) {
  std::vector<SkewCell> cells;
  std::vector<std::vector<int>> index_at(c.length() + 1);
  for (int r = 1; r <= static_cast<int>(c.length()); ++r) {
    Coeff lo = a.part(static_cast<std::size_t>(r));
    Coeff hi = c.part(static_cast<std::size_t>(r));
    index_at[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(hi) + 1, -1);
    for (Coeff col = hi; col > lo; --col) {
      SkewCell cell{r, col, -1, -1};
      if (col < hi) cell.right = index_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(col) + 1];
      if (r > 1 && col > a.part(static_cast<std::size_t>(r) - 1)) {
        const auto& prev = index_at[static_cast<std::size_t>(r) - 1];
        if (static_cast<std::size_t>(col) < prev.size()) cell.above = prev[static_cast<std::size_t>(col)];
      }
      index_at[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = static_cast<int>(cells.size());
      cells.push_back(cell);
    }
  }
  return cells;
}

Coeff count_lr_fillings(const std::vector<SkewCell>& cells, const Partition& b) {
  const int rows_b = static_cast<int>(b.length());
  std::vector<Coeff> used(static_cast<std::size_t>(rows_b) + 1, 0);
  std::vector<int> value(cells.size(), 0);
  Coeff total = 0;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      total = checked_add(total, 1);
      return;
    }
    const SkewCell& cell = cells[idx];
    for (int t = 1; t <= rows_b; ++t) {
      if (used[static_cast<std::size_t>(t)] >= b.part(static_cast<std::size_t>(t))) continue;
      // Lattice word: after placing t, #t must not exceed #(t-1).
      if (t > 1 && used[static_cast<std::size_t>(t) - 1] <= used[static_cast<std::size_t>(t)]) continue;
      if (cell.right >= 0 && t > value[static_cast<std::size_t>(cell.right)]) continue;
      if (cell.above >= 0 && t <= value[static_cast<std::size_t>(cell.above)]) continue;
      value[idx] = t;
      ++used[static_cast<std::size_t>(t)];
      self(self, idx + 1);
      --used[static_cast<std::size_t>(t)];
    }
  };
  rec(rec, 0);
  return total;
}

std::vector<Coeff> encode_partitions(std::initializer_list<const Partition*> ps) {
  std::vector<Coeff> key;
  for (const Partition* p : ps) {
    key.push_back(static_cast<Coeff>(p->length()));
    for (Coeff x : p->parts()) key.push_back(x);
  }
  return key;
}

MemoCache<std::vector<Coeff>, Coeff, VectorHash>& lr_cache() {
  static MemoCache<std::vector<Coeff>, Coeff, VectorHash> cache;
  return cache;
}

MemoCache<std::vector<Coeff>, SchurVector, VectorHash>& product_cache() {
  static MemoCache<std::vector<Coeff>, SchurVector, VectorHash> cache;
  return cache;
}

}  // namespace

Coeff lr_coefficient(const Partition& a, const Partition& b, const Partition& c) {
  if (c.size() != checked_add(a.size(), b.size())) return 0;
  if (!c.contains(a)) return 0;
  if (c.length() > a.length() + b.length()) return 0;
  auto key = encode_partitions({&a, &b, &c});
  if (auto hit = lr_cache().find(key)) return *hit;
  Coeff result = count_lr_fillings(skew_cells(a, c), b);
  lr_cache().insert(key, result);
  return result;
}

namespace {

// All partitions c of |a|+|b| that can carry a nonzero LR coefficient:
// c contains a, at most len(a)+len(b) rows, first part at most a_1+b_1.
void enumerate_product_shapes(const Partition& a, const Partition& b,
                              std::vector<Coeff>& prefix, Coeff remaining, Coeff max_part,
                              std::size_t max_rows, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  if (prefix.size() == max_rows) return;
  std::size_t row = prefix.size() + 1;
  Coeff lo = std::max<Coeff>(a.part(row), 1);
  Coeff hi = std::min(max_part, remaining);
  // Remaining rows must be able to absorb what is left.
  for (Coeff next = hi; next >= lo; --next) {
    Coeff rows_left = static_cast<Coeff>(max_rows - prefix.size() - 1);
    if (remaining - next > checked_mul(rows_left, next)) continue;
    prefix.push_back(next);
    enumerate_product_shapes(a, b, prefix, remaining - next, next, max_rows, out);
    prefix.pop_back();
  }
}

}  // namespace

SchurVector schur_product(const Partition& a, const Partition& b) {
  auto key = encode_partitions({&a, &b});
  if (auto hit = product_cache().find(key)) return *hit;

  SchurVector out;
  Coeff total = checked_add(a.size(), b.size());
  if (total == 0) {
    out.add_term(Partition{}, 1);
  } else {
    std::vector<Partition> shapes;
    std::vector<Coeff> prefix;
    enumerate_product_shapes(a, b, prefix, total, checked_add(a.part(1), b.part(1)),
                             a.length() + b.length(), shapes);
    for (const Partition& c : shapes) out.add_term(c, lr_coefficient(a, b, c));
  }
  product_cache().insert(key, out);
  return out;
}

namespace {

// Shapes b ⊇ a with b/a a horizontal strip of size k: interlacing
// b_1 >= a_1 >= b_2 >= a_2 >= ...
void enumerate_horizontal_strips(const Partition& a, Coeff k, std::size_t row,
                                 std::vector<Coeff>& prefix, Coeff remaining,
                                 std::vector<Partition>& out) {
  std::size_t rows_total = a.length() + 1;
  if (row > rows_total) {
    if (remaining == 0) out.push_back(Partition(prefix));
    return;
  }
  Coeff lo = a.part(row);
  Coeff hi = row == 1 ? checked_add(a.part(1), k) : a.part(row - 1);
  hi = std::min(hi, checked_add(lo, remaining));
  for (Coeff next = hi; next >= lo; --next) {
    prefix.push_back(next);
    enumerate_horizontal_strips(a, k, row + 1, prefix, remaining - (next - lo), out);
    prefix.pop_back();
  }
}

}  // namespace

SchurVector pieri_h_multiply(Coeff k, const SchurVector& v) {
  if (k < 0) return SchurVector{};
  if (k == 0) return v;
  SchurVector out;
  for (const auto& [a, coeff] : v.terms()) {
    std::vector<Partition> shapes;
    std::vector<Coeff> prefix;
    enumerate_horizontal_strips(a, k, 1, prefix, k, shapes);
    for (const Partition& b : shapes) out.add_term(b, coeff);
  }
  return out;
}

}  // namespace schurtl
