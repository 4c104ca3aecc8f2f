#pragma once

#include <cstdint>

#include "oscover/errors.hpp"

namespace oscover {

// Coefficient arithmetic that reports overflow instead of wrapping.
// Everything in the engine is exact; a wrapped product would silently
// corrupt intersection numbers.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("coefficient overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("coefficient overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("coefficient overflow in multiplication");
  return out;
}

}  // namespace oscover
