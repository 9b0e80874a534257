#pragma once

#include <cstdint>
#include <stdexcept>

namespace schurtl {

// All coefficient arithmetic in the library is int64 with mandatory overflow
// detection; silent wraparound would corrupt exact results.
using Coeff = std::int64_t;

class ArithmeticOverflow : public std::runtime_error {
 public:
  explicit ArithmeticOverflow(const char* what) : std::runtime_error(what) {}
};

// Consistency failure inside the library itself (a validated identity broke,
// an impossible case was reached). Maps to CLI exit code 3.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 add overflow");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 sub overflow");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 mul overflow");
  return r;
}

inline Coeff checked_pow2(int e) {
  if (e < 0 || e >= 63) throw ArithmeticOverflow("2^e out of int64 range");
  return Coeff{1} << e;
}

}  // namespace schurtl
