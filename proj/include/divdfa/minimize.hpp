#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "divdfa/dfa.hpp"

namespace divdfa {

/// A partition of DFA states into disjoint nonempty blocks. Each block is
/// kept in ascending state order; block_of maps a state to its block index.
struct StatePartition {
  std::vector<std::vector<State>> blocks;
  std::vector<std::uint32_t> block_of;

  bool operator==(const StatePartition&) const = default;
};

/// Thrown by quotient() when the partition is not a congruence of the DFA:
/// either a block mixes accepting and non-accepting states, or two states of
/// a block move to different blocks on some symbol. Carries the witness.
class CongruenceViolation : public std::runtime_error {
 public:
  static constexpr std::uint32_t kNoSymbol = 0xFFFFFFFFu;

  CongruenceViolation(const std::string& msg, std::uint32_t block,
                      std::uint32_t symbol, State a, State b)
      : std::runtime_error(msg),
        block_(block),
        symbol_(symbol),
        state_a_(a),
        state_b_(b) {}

  std::uint32_t block() const { return block_; }
  std::uint32_t symbol() const { return symbol_; }  // kNoSymbol: acceptance
  State state_a() const { return state_a_; }
  State state_b() const { return state_b_; }

 private:
  std::uint32_t block_;
  std::uint32_t symbol_;
  State state_a_;
  State state_b_;
};

struct MinimizationResult {
  Dfa dfa;                   // minimal DFA, states in BFS order from start
  StatePartition partition;  // block i of the input = state i of the output
};

/// Hopcroft partition refinement. Requires every input state reachable.
/// Output state numbering is fixed by BFS from the start block with symbols
/// in increasing order, so equal inputs give bitwise-equal outputs.
MinimizationResult hopcroft_minimize(const Dfa& dfa);

/// Myhill-Nerode partition by Moore refinement: blocks are split by
/// (acceptance, successor-block signature) until a fixpoint. Independent of
/// hopcroft_minimize; used as its oracle. Requires all states reachable.
/// Blocks are numbered by first appearance (ascending minimal member).
StatePartition nerode_partition(const Dfa& dfa);

/// DFA over the blocks of a congruence partition. Block transitions must be
/// well defined; otherwise CongruenceViolation identifies a witness.
Dfa quotient(const Dfa& dfa, const StatePartition& p);

/// True iff the two partitions have the same blocks as a family of sets,
/// regardless of block order.
bool same_block_family(const StatePartition& a, const StatePartition& b);

}  // namespace divdfa
