#include "ptower/hyperops.hpp"

#include <stdexcept>

namespace ptower {

namespace {

using u64 = std::uint64_t;
using maybe_u64 = std::optional<u64>;

maybe_u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

maybe_u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

// Square-and-multiply; bails out as soon as any intermediate overflows.
maybe_u64 checked_pow(u64 base, u64 exp) {
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) {
      const auto r = checked_mul(result, base);
      if (!r) return std::nullopt;
      result = *r;
    }
    exp >>= 1;
    if (exp > 0) {
      const auto b = checked_mul(base, base);
      if (!b) return std::nullopt;
      base = *b;
    }
  }
  return result;
}

maybe_u64 checked_tower(u64 base, u64 height) {
  u64 result = 1;  // empty tower
  for (u64 level = 0; level < height; ++level) {
    const auto r = checked_pow(base, result);
    if (!r) return std::nullopt;
    result = *r;
  }
  return result;
}

}  // namespace

std::optional<std::uint64_t> hyperop(int grade, std::uint64_t n, std::uint64_t m) {
  switch (grade) {
    case 0:
      return checked_add(n, 1);
    case 1:
      return checked_add(n, m);
    case 2:
      return checked_mul(n, m);
    case 3:
      return checked_pow(n, m);
    case 4:
      return checked_tower(n, m);
    default:
      throw std::domain_error("hyperop: grade must be in 0..4");
  }
}

}  // namespace ptower
