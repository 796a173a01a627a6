#pragma once

#include <cstdint>
#include <limits>

namespace divdfa {

inline constexpr std::uint64_t kUint64Max =
    std::numeric_limits<std::uint64_t>::max();

/// Multiplication that clamps to 2^64-1 instead of wrapping.
constexpr std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > kUint64Max ? kUint64Max : static_cast<std::uint64_t>(p);
}

/// Addition that clamps to 2^64-1 instead of wrapping.
constexpr std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? kUint64Max : s;
}

/// base^exp, clamped to 2^64-1.
constexpr std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == kUint64Max) break;
  }
  return r;
}

/// (a * b) mod m via a 128-bit intermediate; m >= 1.
constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// base^exp mod m; m >= 1.
constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  std::uint64_t b = base % m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1;
  }
  return r;
}

/// Solution set of coeff*x == rhs (mod modulus) over 0 <= x < modulus.
/// When solvable, the solutions are first, first+step, ..., `count` of them,
/// equally spaced with step = modulus / gcd(coeff, modulus).
struct CongruenceSolutions {
  bool solvable = false;
  std::uint64_t first = 0;
  std::uint64_t step = 0;
  std::uint64_t count = 0;
};

CongruenceSolutions solve_linear_congruence(std::uint64_t coeff,
                                            std::uint64_t rhs,
                                            std::uint64_t modulus);

}  // namespace divdfa
