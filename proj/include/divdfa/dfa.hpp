#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace divdfa {

using State = std::uint32_t;
using Symbol = std::uint64_t;

/// Default cap on the number of states of any materialized automaton.
/// Closed-form computations are not subject to it.
inline constexpr std::uint64_t kDefaultMaxStates = 5'000'000;

/// Thrown when a requested construction would exceed the configured
/// state cap or the 64-bit arithmetic width.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (base, modulus) divisibility problem instance: the language of base-b
/// digit strings whose value is divisible by k.
struct DivSpec {
  std::uint64_t base = 2;
  std::uint64_t modulus = 1;

  /// Requires base >= 2 and modulus >= 1.
  void validate() const;
};

using DigitString = std::vector<Symbol>;

/// A complete deterministic finite automaton over the alphabet
/// {0, ..., alphabet_size-1}. The transition table is dense and total.
class Dfa {
 public:
  /// Validates totality: the table must hold num_states * alphabet_size
  /// entries (row-major by state) with every target below num_states.
  Dfa(std::uint32_t num_states, std::uint32_t alphabet_size, State start,
      std::vector<State> transitions, std::vector<bool> accepting);

  std::uint32_t num_states() const { return num_states_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  State start() const { return start_; }

  State next(State s, std::uint32_t symbol) const {
    return transitions_[static_cast<std::size_t>(s) * alphabet_size_ + symbol];
  }
  bool is_accepting(State s) const { return accepting_[s]; }

  /// Accepting states in ascending order.
  std::vector<State> accepting_states() const;

  const std::vector<State>& transition_table() const { return transitions_; }
  const std::vector<bool>& accepting_mask() const { return accepting_; }

  bool operator==(const Dfa&) const = default;

 private:
  std::uint32_t num_states_;
  std::uint32_t alphabet_size_;
  State start_;
  std::vector<State> transitions_;
  std::vector<bool> accepting_;
};

/// Residue reached from residue r by reading one more digit: (b*r + d) mod k.
std::uint64_t concat_digit(std::uint64_t r, Symbol d, const DivSpec& spec);

/// The canonical k-state automaton tracking the value of the input mod k.
/// State r is residue r, the start state is 0 and the only accepting state
/// is 0 (the empty string has value 0 and is in the language).
Dfa build_canonical(const DivSpec& spec,
                    std::uint64_t max_states = kDefaultMaxStates);

/// Value of the digit string mod k, by left fold of concat_digit from 0.
std::uint64_t value_mod(std::span<const Symbol> digits, const DivSpec& spec);

/// Runs the DFA on the digit string.
bool accepts(const Dfa& dfa, std::span<const Symbol> digits);

/// True iff breadth-first canonical relabelings from the start states agree.
/// Exact for automata whose states are all reachable; automata with
/// different alphabet sizes are never isomorphic.
bool isomorphic(const Dfa& a, const Dfa& b);

/// States reachable from the start, ascending.
std::vector<State> reachable(const Dfa& dfa);

}  // namespace divdfa
