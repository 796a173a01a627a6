#include "divdfa/formula.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "divdfa/arith.hpp"

namespace divdfa {

std::uint64_t lam(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0)
    throw std::domain_error("lam requires positive arguments");
  return x / std::gcd(x, y);
}

GcdPowers gcd_pow_sequence(const DivSpec& spec) {
  spec.validate();
  GcdPowers out;
  std::uint64_t g = 1;
  out.gcds.push_back(g);
  for (;;) {
    const std::uint64_t step = std::gcd(spec.modulus / g, spec.base);
    if (step == 1) break;
    g *= step;  // g divides k throughout, no overflow
    out.gcds.push_back(g);
  }
  out.stabilization_index = static_cast<std::uint32_t>(out.gcds.size()) - 1;
  return out;
}

std::uint64_t lam_inf(const DivSpec& spec) {
  return spec.modulus / gcd_pow_sequence(spec).gcds.back();
}

FormulaBreakdown breakdown(const DivSpec& spec) {
  const GcdPowers gp = gcd_pow_sequence(spec);
  const std::uint64_t k = spec.modulus;

  FormulaBreakdown bd;
  bd.spec = spec;
  bd.stabilization_index = gp.stabilization_index;
  // Two settled rows past stabilization make the constant tail and the zero
  // differences visible in the rendered table; they contribute nothing.
  bd.alpha_max = gp.stabilization_index == 0 ? 0 : gp.stabilization_index + 2;
  bd.lam_k_binf = k / gp.gcds.back();

  std::uint64_t lam_bk = 1;  // lambda(b^0, k)
  for (std::uint32_t alpha = 0; alpha <= bd.alpha_max; ++alpha) {
    BreakdownRow row;
    row.lam_bk = lam_bk;
    row.lam_kb = k / gp.at(alpha);
    row.diff = row.lam_kb - k / gp.at(alpha + 1);
    bd.rows.push_back(row);
    lam_bk = sat_mul(lam_bk, spec.base / (gp.at(alpha + 1) / gp.at(alpha)));
  }

  bd.a_zero = bd.alpha_max;  // diff hits 0 by stabilization, so this is found
  for (std::uint32_t alpha = 0; alpha <= bd.alpha_max; ++alpha) {
    if (bd.rows[alpha].diff < bd.rows[alpha].lam_bk) {
      bd.a_zero = alpha;
      break;
    }
  }
  for (std::uint32_t alpha = 0; alpha <= bd.alpha_max; ++alpha) {
    BreakdownRow& row = bd.rows[alpha];
    row.chosen = alpha < bd.a_zero ? row.lam_bk : row.diff;
  }

  // Cutoff expression; every term here is <= k, so the sum is exact.
  std::uint64_t f = bd.rows[bd.a_zero].lam_kb;
  for (std::uint32_t alpha = 0; alpha < bd.a_zero; ++alpha)
    f += bd.rows[alpha].lam_bk;
  bd.f = f;
  return bd;
}

std::uint64_t f_count(const DivSpec& spec, int expr) {
  const FormulaBreakdown bd = breakdown(spec);
  switch (expr) {
    case 1: {
      std::uint64_t sum = bd.lam_k_binf;
      for (const BreakdownRow& row : bd.rows)
        sum += std::min(row.lam_bk, row.diff);
      return sum;
    }
    case 2: {
      // Explicit minimum over the truncated paths; past stabilization the
      // tail value is constant while the prefix sum grows.
      std::uint64_t best = bd.rows[0].lam_kb;  // the A = 0 path
      std::uint64_t prefix = 0;
      for (std::uint32_t a = 1; a <= bd.alpha_max; ++a) {
        prefix = sat_add(prefix, bd.rows[a - 1].lam_bk);
        best = std::min(best, sat_add(prefix, bd.rows[a].lam_kb));
      }
      return best;
    }
    case 3:
      return bd.f;
    default:
      throw std::invalid_argument("expression selector must be 1, 2 or 3");
  }
}

std::uint64_t f_count(const DivSpec& spec) { return breakdown(spec).f; }

std::array<std::uint64_t, 3> upper_bounds(const DivSpec& spec) {
  spec.validate();
  const std::uint64_t k = spec.modulus;
  const std::uint64_t b = spec.base;
  const GcdPowers gp = gcd_pow_sequence(spec);
  return {k, sat_add(1, k / gp.at(1)),
          sat_add(sat_add(1, b / std::gcd(b, k)), k / gp.at(2))};
}

bool canonical_is_minimal(const DivSpec& spec) {
  spec.validate();
  return std::gcd(spec.modulus, spec.base) == 1 || spec.modulus == 2;
}

std::uint64_t prime_power_f(std::uint64_t p, std::uint64_t n, std::uint64_t m,
                            std::uint64_t x) {
  if (p < 2) throw std::domain_error("p must be >= 2");
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (x < 1) throw std::domain_error("x must be >= 1");
  if (std::gcd(x, p) != 1)
    throw std::domain_error("x = " + std::to_string(x) +
                            " must be coprime to p = " + std::to_string(p));
  return sat_add(x, (m + n - 1) / n);
}

std::uint64_t f6_power2_closed_form(std::uint32_t z) {
  std::uint64_t sum = 1;
  for (std::uint32_t alpha = 0; alpha < z; ++alpha)
    sum = sat_add(sum, std::min(sat_pow(3, alpha), sat_pow(2, z - alpha - 1)));
  return sum;
}

}  // namespace divdfa
