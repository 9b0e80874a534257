#include "schurtl/tl.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "schurtl/memo.hpp"

namespace schurtl {

NonCrossingMatching NonCrossingMatching::identity(int n) {
  if (n < 1) throw std::invalid_argument("matching half-size must be >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int v = 1; v <= 2 * n; ++v) partner[static_cast<std::size_t>(v) - 1] = 2 * n - v;
  return NonCrossingMatching(n, std::move(partner));
}

NonCrossingMatching NonCrossingMatching::generator(int i, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  auto link = [&](int a, int b) {
    partner[static_cast<std::size_t>(a) - 1] = b - 1;
    partner[static_cast<std::size_t>(b) - 1] = a - 1;
  };
  for (int v = 1; v <= n; ++v) link(v, 2 * n + 1 - v);
  link(i, i + 1);
  link(2 * n - i, 2 * n + 1 - i);
  return NonCrossingMatching(n, std::move(partner));
}

NonCrossingMatching NonCrossingMatching::from_pairs(int n,
                                                    const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1) throw std::invalid_argument("matching half-size must be >= 1");
  if (pairs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("matching needs exactly n strands");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
      throw std::invalid_argument("matching pair out of range");
    if (partner[static_cast<std::size_t>(a) - 1] != -1 ||
        partner[static_cast<std::size_t>(b) - 1] != -1)
      throw std::invalid_argument("matching vertex repeated");
    partner[static_cast<std::size_t>(a) - 1] = b - 1;
    partner[static_cast<std::size_t>(b) - 1] = a - 1;
  }
  NonCrossingMatching m(n, std::move(partner));
  for (int a = 1; a <= 2 * n; ++a) {
    int pa = m.partner(a);
    for (int b = a + 1; b < pa; ++b) {
      int pb = m.partner(b);
      if (b < pa && pa < pb) throw std::invalid_argument("matching is crossing");
    }
  }
  return m;
}

std::vector<std::pair<int, int>> NonCrossingMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= 2 * n_; ++v) {
    int p = partner(v);
    if (v < p) out.emplace_back(v, p);
  }
  return out;
}

std::string NonCrossingMatching::to_ascii() const {
  std::string out;
  for (auto [a, b] : pairs()) {
    out += std::to_string(a) + "-" + std::to_string(b) + "\n";
  }
  return out;
}

GluedProduct concat_diagrams(const NonCrossingMatching& a, const NonCrossingMatching& b) {
  if (a.half_size() != b.half_size()) throw std::invalid_argument("diagram size mismatch");
  const int n = a.half_size();
  const int N = 2 * n;
  // Node ids: 0..N-1 are a's vertices, N..2N-1 are b's. a's right column is
  // glued to b's left column: a-vertex 2n+1-h meets b-vertex h at height h.
  auto partner_of = [&](int node) {
    if (node < N) return a.partner(node + 1) - 1;
    return N + b.partner(node - N + 1) - 1;
  };
  auto is_final = [&](int node) {
    if (node < N) return node + 1 <= n;  // a's left endpoints survive
    return node - N + 1 > n;             // b's right endpoints survive
  };
  auto glue = [&](int node) {
    if (node < N) return N + (2 * n + 1 - (node + 1)) - 1;
    return (2 * n + 1 - (node - N + 1)) - 1;
  };

  std::vector<int> result_partner(static_cast<std::size_t>(N), -1);
  std::vector<char> visited(static_cast<std::size_t>(2 * N), 0);
  for (int start = 0; start < 2 * N; ++start) {
    if (!is_final(start) || visited[static_cast<std::size_t>(start)]) continue;
    visited[static_cast<std::size_t>(start)] = 1;
    int cur = partner_of(start);
    while (!is_final(cur)) {
      visited[static_cast<std::size_t>(cur)] = 1;
      int g = glue(cur);
      visited[static_cast<std::size_t>(g)] = 1;
      cur = partner_of(g);
    }
    visited[static_cast<std::size_t>(cur)] = 1;
    int u = start < N ? start + 1 : start - N + 1;
    int w = cur < N ? cur + 1 : cur - N + 1;
    result_partner[static_cast<std::size_t>(u) - 1] = w - 1;
    result_partner[static_cast<std::size_t>(w) - 1] = u - 1;
  }
  int loops = 0;
  for (int node = 0; node < 2 * N; ++node) {
    if (visited[static_cast<std::size_t>(node)]) continue;
    ++loops;
    int cur = node;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = 1;
      int g = glue(cur);
      visited[static_cast<std::size_t>(g)] = 1;
      cur = partner_of(g);
    }
  }
  std::vector<std::pair<int, int>> strands;
  for (int v = 1; v <= N; ++v) {
    int p = result_partner[static_cast<std::size_t>(v) - 1] + 1;
    if (v < p) strands.emplace_back(v, p);
  }
  return {NonCrossingMatching::from_pairs(n, strands), loops};
}

TLElement TLElement::unit(int n) { return basis(NonCrossingMatching::identity(n)); }

TLElement TLElement::generator_t(int i, int n) {
  return basis(NonCrossingMatching::generator(i, n));
}

TLElement TLElement::basis(const NonCrossingMatching& m) {
  TLElement e(m.half_size());
  e.terms_.emplace(m, 1);
  return e;
}

Coeff TLElement::coefficient(const NonCrossingMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TLElement::add_term(const NonCrossingMatching& m, Coeff c) {
  if (m.half_size() != n_) throw std::invalid_argument("TL term size mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("TL size mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("TL size mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, checked_sub(0, c));
  return *this;
}

TLElement TLElement::times(Coeff scalar) const {
  TLElement out(n_);
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, scalar));
  return out;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.half_size() != b.half_size()) throw std::invalid_argument("TL size mismatch");
  TLElement out(a.half_size());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      GluedProduct glued = concat_diagrams(ma, mb);
      Coeff weight = checked_mul(ca, cb);
      for (int l = 0; l < glued.loops; ++l) weight = checked_mul(weight, TLElement::kLoopWeight);
      out.add_term(glued.matching, weight);
    }
  }
  return out;
}

namespace {

void gen_matchings(int lo, int hi, std::vector<std::pair<int, int>>& acc,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (lo > hi) {
    out.push_back(acc);
    return;
  }
  for (int p = lo + 1; p <= hi; p += 2) {
    acc.emplace_back(lo, p);
    // Everything strictly inside (lo, p) must match among itself.
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> tmp;
    gen_matchings(lo + 1, p - 1, tmp, inner);
    for (const auto& in : inner) {
      std::size_t mark = acc.size();
      acc.insert(acc.end(), in.begin(), in.end());
      gen_matchings(p + 1, hi, acc, out);
      acc.resize(mark);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<NonCrossingMatching> all_noncrossing_matchings(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<NonCrossingMatching>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<std::pair<int, int>> acc;
  gen_matchings(1, 2 * n, acc, raw);
  std::vector<NonCrossingMatching> out;
  out.reserve(raw.size());
  for (const auto& pairs : raw) out.push_back(NonCrossingMatching::from_pairs(n, pairs));
  std::sort(out.begin(), out.end());
  cache.emplace(n, out);
  return out;
}

NonCrossingMatching matching_of_permutation(const Permutation& w) {
  if (!w.is_321_avoiding())
    throw std::invalid_argument("matching_of_permutation needs a 321-avoiding permutation");
  const int n = w.n();
  NonCrossingMatching result = NonCrossingMatching::identity(n);
  int loops = 0;
  for (int i : w.reduced_word()) {
    GluedProduct glued = concat_diagrams(result, NonCrossingMatching::generator(i, n));
    result = glued.matching;
    loops += glued.loops;
  }
  if (loops != 0)
    throw InternalError("reduced word of a 321-avoiding permutation produced loops");
  return result;
}

std::map<NonCrossingMatching, Coeff> f_coefficients_from_word(std::span<const int> word, int n) {
  TLElement acc = TLElement::unit(n);
  for (int i : word) {
    TLElement next = acc * TLElement::generator_t(i, n);
    next -= acc;
    acc = std::move(next);
  }
  return acc.terms();
}

namespace {

MemoCache<std::vector<int>, std::map<NonCrossingMatching, Coeff>, VectorHash>& f_cache() {
  static MemoCache<std::vector<int>, std::map<NonCrossingMatching, Coeff>, VectorHash> cache;
  return cache;
}

}  // namespace

std::map<NonCrossingMatching, Coeff> f_coefficients(const Permutation& v) {
  if (auto hit = f_cache().find(v.one_line())) return *hit;
  auto word = v.reduced_word();
  auto result = f_coefficients_from_word(word, v.n());
  f_cache().insert(v.one_line(), result);
  return result;
}

ColorSet::ColorSet(int half_size, std::set<int> members)
    : n_(half_size), members_(std::move(members)) {
  if (n_ < 1) throw std::invalid_argument("color set half-size must be >= 1");
  for (int v : members_)
    if (v < 1 || v > 2 * n_) throw std::invalid_argument("color set vertex out of range");
}

ColorSet ColorSet::complement() const {
  std::set<int> rest;
  for (int v = 1; v <= 2 * n_; ++v)
    if (!members_.contains(v)) rest.insert(v);
  return ColorSet(n_, std::move(rest));
}

bool is_compatible(const NonCrossingMatching& m, const ColorSet& S) {
  if (m.half_size() != S.half_size()) throw std::invalid_argument("compatibility size mismatch");
  for (auto [a, b] : m.pairs())
    if (S.contains(a) == S.contains(b)) return false;
  return true;
}

std::vector<NonCrossingMatching> theta(const ColorSet& S) {
  std::vector<NonCrossingMatching> out;
  if (static_cast<int>(S.members().size()) != S.half_size()) return out;
  for (const NonCrossingMatching& m : all_noncrossing_matchings(S.half_size()))
    if (is_compatible(m, S)) out.push_back(m);
  return out;
}

ColorSet decomposition_color_set(const SubsetOfN& I, const SubsetOfN& J) {
  if (I.n() != J.n()) throw std::invalid_argument("color set: ambient size mismatch");
  const int n = I.n();
  std::set<int> members(J.elements().begin(), J.elements().end());
  const SubsetOfN i_bar = I.complement();
  for (int x : i_bar.elements()) members.insert(2 * n + 1 - x);
  return ColorSet(n, std::move(members));
}

}  // namespace schurtl
