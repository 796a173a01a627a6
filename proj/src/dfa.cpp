#include "divdfa/dfa.hpp"

#include <algorithm>
#include <limits>

#include "divdfa/arith.hpp"

namespace divdfa {

void DivSpec::validate() const {
  if (base < 2)
    throw std::invalid_argument("base must be >= 2, got " +
                                std::to_string(base));
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
}

Dfa::Dfa(std::uint32_t num_states, std::uint32_t alphabet_size, State start,
         std::vector<State> transitions, std::vector<bool> accepting)
    : num_states_(num_states),
      alphabet_size_(alphabet_size),
      start_(start),
      transitions_(std::move(transitions)),
      accepting_(std::move(accepting)) {
  if (num_states_ == 0) throw std::invalid_argument("DFA needs >= 1 state");
  if (alphabet_size_ == 0)
    throw std::invalid_argument("DFA needs a nonempty alphabet");
  if (start_ >= num_states_)
    throw std::invalid_argument("start state out of range");
  const std::size_t expected =
      static_cast<std::size_t>(num_states_) * alphabet_size_;
  if (transitions_.size() != expected)
    throw std::invalid_argument(
        "transition table must be total: expected " + std::to_string(expected) +
        " entries, got " + std::to_string(transitions_.size()));
  for (State t : transitions_)
    if (t >= num_states_)
      throw std::invalid_argument("transition target " + std::to_string(t) +
                                  " out of range");
  if (accepting_.size() != num_states_)
    throw std::invalid_argument("accepting mask must cover all states");
}

std::vector<State> Dfa::accepting_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states_; ++s)
    if (accepting_[s]) out.push_back(s);
  return out;
}

std::uint64_t concat_digit(std::uint64_t r, Symbol d, const DivSpec& spec) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(spec.base) * r + d) % spec.modulus);
}

Dfa build_canonical(const DivSpec& spec, std::uint64_t max_states) {
  spec.validate();
  if (spec.modulus > max_states)
    throw CapacityError("modulus " + std::to_string(spec.modulus) +
                        " exceeds the explicit-state cap of " +
                        std::to_string(max_states));
  if (spec.base > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("alphabet of size " + std::to_string(spec.base) +
                        " cannot be materialized");
  const auto k = static_cast<std::uint32_t>(spec.modulus);
  const auto b = static_cast<std::uint32_t>(spec.base);
  std::vector<State> table(static_cast<std::size_t>(k) * b);
  for (State r = 0; r < k; ++r)
    for (std::uint32_t d = 0; d < b; ++d)
      table[static_cast<std::size_t>(r) * b + d] =
          static_cast<State>(concat_digit(r, d, spec));
  std::vector<bool> accepting(k, false);
  accepting[0] = true;
  return Dfa(k, b, 0, std::move(table), std::move(accepting));
}

std::uint64_t value_mod(std::span<const Symbol> digits, const DivSpec& spec) {
  spec.validate();
  std::uint64_t r = 0;
  for (Symbol d : digits) {
    if (d >= spec.base)
      throw std::invalid_argument("digit " + std::to_string(d) +
                                  " out of range for base " +
                                  std::to_string(spec.base));
    r = concat_digit(r, d, spec);
  }
  return r;
}

bool accepts(const Dfa& dfa, std::span<const Symbol> digits) {
  State s = dfa.start();
  for (Symbol d : digits) {
    if (d >= dfa.alphabet_size())
      throw std::invalid_argument("symbol " + std::to_string(d) +
                                  " out of range for alphabet of size " +
                                  std::to_string(dfa.alphabet_size()));
    s = dfa.next(s, static_cast<std::uint32_t>(d));
  }
  return dfa.is_accepting(s);
}

std::vector<State> reachable(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states(), false);
  std::vector<State> queue;
  queue.reserve(dfa.num_states());
  seen[dfa.start()] = true;
  queue.push_back(dfa.start());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const State u = queue[head];
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c) {
      const State v = dfa.next(u, c);
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

namespace {

struct CanonicalForm {
  std::uint32_t explored;
  std::vector<State> transitions;
  std::vector<bool> accepting;

  bool operator==(const CanonicalForm&) const = default;
};

// Relabels states by BFS discovery order from the start, symbols ascending.
CanonicalForm bfs_canonical(const Dfa& dfa) {
  constexpr State kUnset = 0xFFFFFFFFu;
  std::vector<State> new_id(dfa.num_states(), kUnset);
  std::vector<State> order;  // old ids in discovery order
  order.reserve(dfa.num_states());
  new_id[dfa.start()] = 0;
  order.push_back(dfa.start());
  CanonicalForm form;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const State u = order[head];
    form.accepting.push_back(dfa.is_accepting(u));
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c) {
      const State v = dfa.next(u, c);
      if (new_id[v] == kUnset) {
        new_id[v] = static_cast<State>(order.size());
        order.push_back(v);
      }
      form.transitions.push_back(new_id[v]);
    }
  }
  form.explored = static_cast<std::uint32_t>(order.size());
  return form;
}

}  // namespace

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) return false;
  if (a.num_states() != b.num_states()) return false;
  return bfs_canonical(a) == bfs_canonical(b);
}

}  // namespace divdfa
