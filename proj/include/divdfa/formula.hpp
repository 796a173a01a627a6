#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "divdfa/dfa.hpp"

namespace divdfa {

/// lambda(x, y) = x / gcd(x, y). Asymmetric; lambda(x,y) == lambda(y,x) only
/// when x == y. Throws std::domain_error on a zero argument.
std::uint64_t lam(std::uint64_t x, std::uint64_t y);

/// The sequence gcd(k, b^alpha) for alpha = 0, 1, ..., computed by the
/// recurrence g_{alpha+1} = g_alpha * gcd(k / g_alpha, b) and emitted until
/// gcd(k / g_alpha, b) = 1. The last value is gcd(k, b^infinity). The
/// stabilization index is at most ceil(log2 k).
struct GcdPowers {
  std::vector<std::uint64_t> gcds;  // gcds[alpha] = gcd(k, b^alpha)
  std::uint32_t stabilization_index = 0;

  /// gcd(k, b^alpha), constant past stabilization.
  std::uint64_t at(std::uint32_t alpha) const {
    return alpha < gcds.size() ? gcds[alpha] : gcds.back();
  }
};

GcdPowers gcd_pow_sequence(const DivSpec& spec);

/// lambda(k, b^infinity): the largest divisor of k coprime to b.
std::uint64_t lam_inf(const DivSpec& spec);

/// One row of the state-count table at index alpha.
/// lam_bk = lambda(b^alpha, k) saturates at 2^64-1; once it exceeds k it can
/// never be a chosen minimum, so clamping keeps every returned sum exact.
struct BreakdownRow {
  std::uint64_t lam_bk = 0;   // lambda(b^alpha, k)
  std::uint64_t lam_kb = 0;   // lambda(k, b^alpha)
  std::uint64_t diff = 0;     // lambda(k, b^alpha) - lambda(k, b^(alpha+1))
  std::uint64_t chosen = 0;   // min(lam_bk, diff)

  bool operator==(const BreakdownRow&) const = default;
};

/// Per-alpha table behind the three equivalent state-count expressions:
///   f = lam_k_binf + sum over alpha of min(lam_bk, diff)
///     = min over A >= 0 of (lambda(k,b^A) + sum_{alpha<A} lambda(b^alpha,k))
///     = lambda(k,b^A0) + sum_{alpha<A0} lambda(b^alpha,k)
/// where a_zero (A0) is the least alpha with diff < lam_bk. Rows run through
/// alpha_max; past the gcd stabilization index every diff is 0, so the table
/// carries two extra settled rows for display without changing any sum.
struct FormulaBreakdown {
  DivSpec spec;
  std::vector<BreakdownRow> rows;       // indexed by alpha = 0..alpha_max
  std::uint32_t alpha_max = 0;
  std::uint32_t stabilization_index = 0;
  std::uint32_t a_zero = 0;
  std::uint64_t lam_k_binf = 0;
  std::uint64_t f = 0;
};

FormulaBreakdown breakdown(const DivSpec& spec);

/// Minimal-DFA state count f_b(k) by one of the three expressions
/// (expr in {1, 2, 3}); all three agree for every valid spec.
std::uint64_t f_count(const DivSpec& spec, int expr);

/// f_b(k) by the cutoff expression (expr 3).
std::uint64_t f_count(const DivSpec& spec);

/// (k, 1 + k/gcd(k,b), 1 + b/gcd(b,k) + k/gcd(k,b^2)); each bounds f_b(k)
/// from above, being a partial path of the minimum expression.
std::array<std::uint64_t, 3> upper_bounds(const DivSpec& spec);

/// True iff the canonical k-state automaton is already minimal, i.e.
/// gcd(k, b) == 1 or k == 2. Equivalent to f_b(k) == k.
bool canonical_is_minimal(const DivSpec& spec);

/// f for b = p^n and k = p^m * x with gcd(x, p) = 1: x + ceil(m / n).
/// Completely characterizes f_b(k) when p is prime. Throws std::domain_error
/// unless p >= 2, n >= 1, x >= 1 and gcd(x, p) == 1.
std::uint64_t prime_power_f(std::uint64_t p, std::uint64_t n, std::uint64_t m,
                            std::uint64_t x);

/// Closed form for base 6 and modulus 2^z:
/// 1 + sum_{alpha=0}^{z-1} min(3^alpha, 2^(z-alpha-1)).
std::uint64_t f6_power2_closed_form(std::uint32_t z);

}  // namespace divdfa
