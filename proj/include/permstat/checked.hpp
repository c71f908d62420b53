#pragma once

#include <cstdint>
#include <stdexcept>

namespace permstat {

/// 64-bit arithmetic that refuses to wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

}  // namespace permstat
