#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "schurtl/checked.hpp"

namespace schurtl {

/// Global cap on entries per memo table; 0 = unlimited. Set from the CLI
/// --memo-cap flag or the SCHURTL_MEMO_CAP environment variable.
void set_memo_cap(std::size_t cap);
std::size_t memo_cap();

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VectorHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t seed = v.size();
    for (const T& x : v) hash_combine(seed, std::hash<T>{}(static_cast<T>(x)));
    return seed;
  }
};

/// Thread-safe memo table for pure functions: results never depend on which
/// thread populated an entry. Inserts stop once the global cap is reached.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class MemoCache {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    std::unique_lock lock(mu_);
    std::size_t cap = memo_cap();
    if (cap != 0 && map_.size() >= cap && !map_.contains(key)) return;
    map_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace schurtl
