#pragma once

#include <cstdint>
#include <optional>

namespace ptower {

/// The hyperoperation ladder on natural numbers, with checked 64-bit
/// arithmetic:
///   grade 0: successor n+1 (m ignored)
///   grade 1: addition n+m
///   grade 2: multiplication n*m
///   grade 3: exponentiation n^m
///   grade 4: tetration, the m-level tower of n (height 0 gives 1)
/// Returns nullopt when the result overflows std::uint64_t. Throws
/// std::domain_error for grades outside 0..4.
std::optional<std::uint64_t> hyperop(int grade, std::uint64_t n, std::uint64_t m);

}  // namespace ptower
