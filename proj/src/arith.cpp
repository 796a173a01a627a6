#include "divdfa/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace divdfa {

namespace {

// Modular inverse of a mod m for gcd(a, m) == 1, m >= 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0;
  __int128 next_t = 1;
  __int128 r = m;
  __int128 next_r = a % m;
  while (next_r != 0) {
    const __int128 q = r / next_r;
    t = std::exchange(next_t, t - q * next_t);
    r = std::exchange(next_r, r - q * next_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

CongruenceSolutions solve_linear_congruence(std::uint64_t coeff,
                                            std::uint64_t rhs,
                                            std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("congruence modulus must be >= 1");
  coeff %= modulus;
  rhs %= modulus;
  const std::uint64_t g = std::gcd(coeff, modulus);  // gcd(0, m) == m
  if (rhs % g != 0) return {};
  const std::uint64_t reduced_mod = modulus / g;
  if (reduced_mod == 1) return {true, 0, 1, modulus};
  const std::uint64_t inv = mod_inverse(coeff / g, reduced_mod);
  const std::uint64_t x0 = mul_mod(rhs / g % reduced_mod, inv, reduced_mod);
  return {true, x0, reduced_mod, g};
}

}  // namespace divdfa
