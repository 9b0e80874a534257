#include "schurtl/character.hpp"

#include <stdexcept>

#include "schurtl/memo.hpp"

namespace schurtl {

Coeff CharacterVector::coefficient(const DominantWeight& w) const {
  if (w.rank() != rank_) return 0;
  auto it = terms_.find(w.rep());
  return it == terms_.end() ? 0 : it->second;
}

void CharacterVector::add_term(const DominantWeight& w, Coeff c) {
  if (w.rank() != rank_) throw std::invalid_argument("character term rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w.rep(), c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("character rank mismatch");
  for (const auto& [rep, c] : other.terms_) add_term(DominantWeight(rank_, rep), c);
  return *this;
}

CharacterVector& CharacterVector::operator-=(const CharacterVector& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("character rank mismatch");
  for (const auto& [rep, c] : other.terms_) add_term(DominantWeight(rank_, rep), checked_sub(0, c));
  return *this;
}

bool CharacterVector::all_nonnegative() const {
  for (const auto& [rep, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string CharacterVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [rep, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "chi(" + rep.to_string_padded(static_cast<std::size_t>(rank_)) + ")";
  }
  return out;
}

CharacterVector character_product(const DominantWeight& l, const DominantWeight& m) {
  if (l.rank() != m.rank()) throw std::invalid_argument("character product rank mismatch");
  const int n = l.rank();
  CharacterVector out(n);
  SchurVector product = schur_product(l.rep(), m.rep());
  for (const auto& [c, coeff] : product.terms()) {
    if (c.length() > static_cast<std::size_t>(n)) continue;  // vanishes in n variables
    out.add_term(reduce_mod_ones(c, n), coeff);
  }
  return out;
}

}  // namespace schurtl
