#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "divdfa/dfa.hpp"
#include "divdfa/formula.hpp"
#include "divdfa/minimize.hpp"

using namespace divdfa;

namespace {

template <typename Fn>
void for_each_digit_string(std::uint64_t base, std::size_t max_len, Fn&& fn) {
  DigitString digits;
  fn(digits);
  for (std::size_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 0);
    for (;;) {
      fn(digits);
      std::size_t i = len;
      while (i > 0 && digits[i - 1] == base - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
}

}  // namespace

TEST_SUITE("minimize") {

TEST_CASE("hopcroft on canonical automata hits the known counts") {
  CHECK(hopcroft_minimize(build_canonical({6, 16})).dfa.num_states() == 8);
  CHECK(hopcroft_minimize(build_canonical({2, 3})).dfa.num_states() == 3);
  CHECK(hopcroft_minimize(build_canonical({6, 1024})).dfa.num_states() == 104);
}

TEST_CASE("unreachable states are a precondition error") {
  const Dfa dangling(3, 2, 0, {0, 1, 1, 0, 2, 2}, {true, false, false});
  CHECK_THROWS_WITH_AS(hopcroft_minimize(dangling),
                       doctest::Contains("unreachable: 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(nerode_partition(dangling), std::invalid_argument);
}

TEST_CASE("nerode partition on b=6 k=16 gives the eight known classes") {
  const StatePartition p = nerode_partition(build_canonical({6, 16}));
  REQUIRE(p.blocks.size() == 8);
  const std::vector<std::vector<State>> expected{
      {0},          {1, 9},        {2, 10}, {3, 7, 11, 15},
      {4, 12},      {5, 13},       {6, 14}, {8}};
  // Blocks are numbered by first appearance, i.e. ordered by minimal member.
  CHECK(p.blocks == expected);
  for (const auto& block : p.blocks)
    for (State s : block) CHECK(p.block_of[s] == p.block_of[block[0]]);
}

TEST_CASE("coprime canonical automata are already Nerode-discrete") {
  for (std::uint64_t b : {2ull, 3ull, 10ull})
    for (std::uint64_t k : {1ull, 3ull, 7ull, 9ull, 11ull}) {
      if (std::gcd(b, k) != 1) continue;
      const StatePartition p = nerode_partition(build_canonical({b, k}));
      CHECK(p.blocks.size() == k);
      for (const auto& block : p.blocks) CHECK(block.size() == 1);
    }
}

TEST_CASE("single-state automaton minimizes to itself") {
  const Dfa one = build_canonical({2, 1});
  CHECK(nerode_partition(one).blocks.size() == 1);
  const MinimizationResult r = hopcroft_minimize(one);
  CHECK(r.dfa.num_states() == 1);
  CHECK(r.dfa == one);
}

TEST_CASE("quotient by the nerode partition matches hopcroft") {
  const Dfa canonical = build_canonical({6, 16});
  const Dfa glued = quotient(canonical, nerode_partition(canonical));
  const MinimizationResult hop = hopcroft_minimize(canonical);
  CHECK(glued.num_states() == 8);
  CHECK(isomorphic(glued, hop.dfa));
}

TEST_CASE("quotient by singletons is the identity") {
  const Dfa dfa = build_canonical({3, 7});
  StatePartition p;
  for (State s = 0; s < dfa.num_states(); ++s) {
    p.blocks.push_back({s});
    p.block_of.push_back(s);
  }
  CHECK(quotient(dfa, p) == dfa);
}

TEST_CASE("quotient rejects a non-congruent merge with a witness") {
  const Dfa dfa = build_canonical({6, 16});
  StatePartition p;
  p.blocks.push_back({0, 1});
  p.block_of.assign(16, 0);
  for (State s = 2; s < 16; ++s) {
    p.blocks.push_back({s});
    p.block_of[s] = static_cast<std::uint32_t>(p.blocks.size()) - 1;
  }
  p.block_of[1] = 0;
  try {
    quotient(dfa, p);
    FAIL("expected CongruenceViolation");
  } catch (const CongruenceViolation& e) {
    CHECK(e.block() == 0);  // 0 is accepting, 1 is not
  }
}

TEST_CASE("quotient rejects malformed partitions") {
  const Dfa dfa = build_canonical({2, 3});
  StatePartition missing;
  missing.blocks = {{0}, {1}};
  missing.block_of = {0, 1, 1};
  CHECK_THROWS_AS(quotient(dfa, missing), std::invalid_argument);
}

TEST_CASE("hopcroft and nerode agree over the sweep") {
  for (std::uint64_t b = 2; b <= 6; ++b)
    for (std::uint64_t k = 1; k <= 60; ++k) {
      const Dfa canonical = build_canonical({b, k});
      const MinimizationResult hop = hopcroft_minimize(canonical);
      const StatePartition ner = nerode_partition(canonical);
      CHECK(hop.partition.blocks.size() == ner.blocks.size());
      CHECK(same_block_family(hop.partition, ner));
    }
}

TEST_CASE("hopcroft agrees with nerode on random automata") {
  std::uint64_t seed = 0x2545f4914f6cdd1dull;
  auto next = [&seed] {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  // Restricts a random machine to its reachable part.
  auto reachable_part = [](const Dfa& dfa) {
    const std::vector<State> live = reachable(dfa);
    std::vector<State> new_id(dfa.num_states(), 0);
    for (std::uint32_t i = 0; i < live.size(); ++i) new_id[live[i]] = i;
    std::vector<State> table;
    std::vector<bool> accepting;
    for (State s : live) {
      accepting.push_back(dfa.is_accepting(s));
      for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c)
        table.push_back(new_id[dfa.next(s, c)]);
    }
    return Dfa(static_cast<std::uint32_t>(live.size()), dfa.alphabet_size(),
               new_id[dfa.start()], std::move(table), std::move(accepting));
  };

  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = 2 + next() % 14;
    const std::uint32_t m = 2 + next() % 3;
    std::vector<State> table(static_cast<std::size_t>(n) * m);
    std::vector<bool> accepting(n);
    for (auto& t : table) t = next() % n;
    for (std::size_t s = 0; s < n; ++s) accepting[s] = next() % 2;
    const Dfa dfa = reachable_part(
        Dfa(n, m, static_cast<State>(next() % n), std::move(table),
            std::move(accepting)));

    const MinimizationResult hop = hopcroft_minimize(dfa);
    const StatePartition ner = nerode_partition(dfa);
    CHECK(hop.partition.blocks.size() == ner.blocks.size());
    CHECK(same_block_family(hop.partition, ner));
    CHECK(quotient(dfa, hop.partition) == hop.dfa);
    for_each_digit_string(m, 5, [&](const DigitString& d) {
      CHECK(accepts(dfa, d) == accepts(hop.dfa, d));
    });
  }
}

TEST_CASE("minimization preserves the language") {
  for (std::uint64_t b : {2ull, 3ull})
    for (std::uint64_t k = 1; k <= 12; ++k) {
      const Dfa canonical = build_canonical({b, k});
      const Dfa minimal = hopcroft_minimize(canonical).dfa;
      for_each_digit_string(b, 6, [&](const DigitString& d) {
        CHECK(accepts(canonical, d) == accepts(minimal, d));
      });
    }
}

TEST_CASE("minimization is idempotent") {
  for (std::uint64_t b = 2; b <= 5; ++b)
    for (std::uint64_t k = 1; k <= 40; ++k) {
      const Dfa minimal = hopcroft_minimize(build_canonical({b, k})).dfa;
      const Dfa again = hopcroft_minimize(minimal).dfa;
      CHECK(again.num_states() == minimal.num_states());
      CHECK(isomorphic(again, minimal));
    }
}

TEST_CASE("two runs produce identical outputs") {
  const Dfa canonical = build_canonical({6, 16});
  const MinimizationResult a = hopcroft_minimize(canonical);
  const MinimizationResult b = hopcroft_minimize(canonical);
  CHECK(a.dfa == b.dfa);
  CHECK(a.partition == b.partition);
}

TEST_CASE("hopcroft partition is the congruence that rebuilds the output") {
  for (std::uint64_t k : {5ull, 12ull, 16ull, 24ull}) {
    const Dfa canonical = build_canonical({6, k});
    const MinimizationResult hop = hopcroft_minimize(canonical);
    CHECK(quotient(canonical, hop.partition) == hop.dfa);
  }
}

}  // TEST_SUITE
