#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divdfa/dfa.hpp"

namespace divdfa {

/// A rectangular sweep over (base, modulus) pairs, both ranges inclusive.
struct SweepConfig {
  std::uint64_t base_lo = 2;
  std::uint64_t base_hi = 2;
  std::uint64_t modulus_lo = 1;
  std::uint64_t modulus_hi = 1;
  unsigned jobs = 1;
  bool fail_fast = false;
  std::uint64_t max_states = kDefaultMaxStates;
};

/// Outcome of all cross-checks for one (base, modulus) pair: the three
/// closed-form expressions, the Hopcroft and Nerode state counts, the
/// package-built DFA, partition equality, upper bounds and the
/// canonical-minimality criterion.
struct PairResult {
  std::uint64_t base = 0;
  std::uint64_t modulus = 0;
  bool computed = false;  // false when fail-fast stopped the sweep first
  bool pass = false;
  bool canonical_minimal = false;
  std::uint64_t f = 0;
  std::string reason;  // failed checks, empty when pass
  std::string detail;  // breakdown table for failing pairs
};

struct SweepReport {
  SweepConfig config;
  std::vector<PairResult> results;  // (base, modulus) row-major order
  std::size_t checked = 0;
  std::size_t failures = 0;

  bool pass() const { return failures == 0; }

  /// Deterministic text report; identical for any worker count.
  std::string render() const;
};

/// Runs every check for every pair in the ranges, fanning work out to
/// config.jobs workers. Results are merged in (base, modulus) order, so the
/// report does not depend on the worker count.
SweepReport run_verify_sweep(const SweepConfig& config);

}  // namespace divdfa
