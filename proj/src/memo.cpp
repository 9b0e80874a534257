#include "schurtl/memo.hpp"

#include <atomic>
#include <cstdlib>

namespace schurtl {

namespace {

std::atomic<std::size_t>& cap_storage() {
  static std::atomic<std::size_t> cap = [] {
    if (const char* env = std::getenv("SCHURTL_MEMO_CAP"))
      return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    return std::size_t{0};
  }();
  return cap;
}

}  // namespace

void set_memo_cap(std::size_t cap) { cap_storage().store(cap); }
std::size_t memo_cap() { return cap_storage().load(); }

}  // namespace schurtl
