#include "divdfa/minimize.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace divdfa {

namespace {

void require_all_reachable(const Dfa& dfa, const char* op) {
  const std::vector<State> live = reachable(dfa);
  if (live.size() == dfa.num_states()) return;
  std::vector<bool> seen(dfa.num_states(), false);
  for (State s : live) seen[s] = true;
  std::string msg = std::string(op) + " requires all states reachable; unreachable:";
  int listed = 0;
  std::uint32_t missing = dfa.num_states() - static_cast<std::uint32_t>(live.size());
  for (State s = 0; s < dfa.num_states() && listed < 8; ++s) {
    if (!seen[s]) {
      msg += ' ' + std::to_string(s);
      ++listed;
    }
  }
  if (missing > 8) msg += " (and " + std::to_string(missing - 8) + " more)";
  throw std::invalid_argument(msg);
}

// Output numbering: BFS over final blocks from the start's block, symbols
// ascending. The final partition is unique, so this is representative-free.
MinimizationResult number_and_build(const Dfa& dfa,
                                    const std::vector<std::uint32_t>& blk,
                                    std::uint32_t num_blocks) {
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  const std::uint32_t m = dfa.alphabet_size();
  std::vector<State> member(num_blocks, 0);  // one representative per block
  for (State s = 0; s < dfa.num_states(); ++s) member[blk[s]] = s;

  std::vector<std::uint32_t> new_id(num_blocks, kUnset);
  std::vector<std::uint32_t> order;  // old block ids in BFS order
  order.reserve(num_blocks);
  new_id[blk[dfa.start()]] = 0;
  order.push_back(blk[dfa.start()]);
  std::vector<State> table;
  table.reserve(static_cast<std::size_t>(num_blocks) * m);
  std::vector<bool> accepting;
  accepting.reserve(num_blocks);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const State rep = member[order[head]];
    accepting.push_back(dfa.is_accepting(rep));
    for (std::uint32_t c = 0; c < m; ++c) {
      const std::uint32_t target = blk[dfa.next(rep, c)];
      if (new_id[target] == kUnset) {
        new_id[target] = static_cast<std::uint32_t>(order.size());
        order.push_back(target);
      }
      table.push_back(new_id[target]);
    }
  }

  StatePartition partition;
  partition.blocks.assign(num_blocks, {});
  partition.block_of.resize(dfa.num_states());
  for (State s = 0; s < dfa.num_states(); ++s) {
    const std::uint32_t q = new_id[blk[s]];
    partition.block_of[s] = q;
    partition.blocks[q].push_back(s);  // s ascending, so blocks stay sorted
  }
  Dfa minimal(num_blocks, m, 0, std::move(table), std::move(accepting));
  return {std::move(minimal), std::move(partition)};
}

}  // namespace

MinimizationResult hopcroft_minimize(const Dfa& dfa) {
  require_all_reachable(dfa, "hopcroft_minimize");
  const std::uint32_t n = dfa.num_states();
  const std::uint32_t m = dfa.alphabet_size();

  // Inverse transitions in CSR form, per symbol.
  std::vector<std::uint32_t> offsets(static_cast<std::size_t>(m) * n + 1, 0);
  for (State s = 0; s < n; ++s)
    for (std::uint32_t c = 0; c < m; ++c)
      ++offsets[static_cast<std::size_t>(c) * n + dfa.next(s, c) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<State> preds(static_cast<std::size_t>(m) * n);
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (State s = 0; s < n; ++s)
      for (std::uint32_t c = 0; c < m; ++c)
        preds[cursor[static_cast<std::size_t>(c) * n + dfa.next(s, c)]++] = s;
  }

  // Refinable partition: states of a block are contiguous in `elems`;
  // marked states are swapped to the front of their block's range.
  std::vector<State> elems(n);
  std::vector<std::uint32_t> pos(n), blk(n);
  std::vector<std::uint32_t> begin_of, end_of, marked;

  {
    std::vector<State> acc, rej;
    for (State s = 0; s < n; ++s)
      (dfa.is_accepting(s) ? acc : rej).push_back(s);
    std::uint32_t at = 0;
    for (const std::vector<State>* group : {&acc, &rej}) {
      if (group->empty()) continue;
      begin_of.push_back(at);
      for (State s : *group) {
        elems[at] = s;
        pos[s] = at;
        blk[s] = static_cast<std::uint32_t>(begin_of.size()) - 1;
        ++at;
      }
      end_of.push_back(at);
      marked.push_back(0);
    }
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;  // (block, symbol)
  for (std::uint32_t b = 0; b < begin_of.size(); ++b)
    for (std::uint32_t c = 0; c < m; ++c) work.emplace_back(b, c);

  std::vector<std::uint32_t> touched;
  std::vector<State> splitter;

  auto mark = [&](State s) {
    const std::uint32_t b = blk[s];
    const std::uint32_t dest = begin_of[b] + marked[b];
    if (pos[s] < dest) return;  // already marked
    if (marked[b] == 0) touched.push_back(b);
    const State other = elems[dest];
    std::swap(elems[pos[s]], elems[dest]);
    pos[other] = pos[s];
    pos[s] = dest;
    ++marked[b];
  };

  while (!work.empty()) {
    const auto [splitter_block, c] = work.back();
    work.pop_back();
    // Preimage of the splitter block's current contents under symbol c.
    splitter.assign(elems.begin() + begin_of[splitter_block],
                    elems.begin() + end_of[splitter_block]);
    for (State t : splitter) {
      const std::size_t row = static_cast<std::size_t>(c) * n + t;
      for (std::uint32_t i = offsets[row]; i < offsets[row + 1]; ++i)
        mark(preds[i]);
    }
    for (std::uint32_t b : touched) {
      const std::uint32_t mcount = marked[b];
      const std::uint32_t size = end_of[b] - begin_of[b];
      marked[b] = 0;
      if (mcount == size) continue;
      // Move the smaller half out under a fresh block id; on a tie, move
      // the half holding the block's lowest state id.
      bool move_marked;
      if (2 * mcount < size) {
        move_marked = true;
      } else if (2 * mcount > size) {
        move_marked = false;
      } else {
        State lowest = elems[begin_of[b]];
        for (std::uint32_t i = begin_of[b] + 1; i < end_of[b]; ++i)
          lowest = std::min(lowest, elems[i]);
        move_marked = pos[lowest] < begin_of[b] + mcount;
      }
      const auto nb = static_cast<std::uint32_t>(begin_of.size());
      if (move_marked) {
        begin_of.push_back(begin_of[b]);
        end_of.push_back(begin_of[b] + mcount);
        begin_of[b] += mcount;
      } else {
        begin_of.push_back(begin_of[b] + mcount);
        end_of.push_back(end_of[b]);
        end_of[b] = begin_of[b] + mcount;
      }
      marked.push_back(0);
      for (std::uint32_t i = begin_of[nb]; i < end_of[nb]; ++i)
        blk[elems[i]] = nb;
      for (std::uint32_t cc = 0; cc < m; ++cc) work.emplace_back(nb, cc);
    }
    touched.clear();
  }

  return number_and_build(dfa, blk, static_cast<std::uint32_t>(begin_of.size()));
}

StatePartition nerode_partition(const Dfa& dfa) {
  require_all_reachable(dfa, "nerode_partition");
  const std::uint32_t n = dfa.num_states();
  const std::uint32_t m = dfa.alphabet_size();

  // Block ids are assigned by first appearance scanning states upward, so
  // blocks come out ordered by their minimal member.
  std::vector<std::uint32_t> cur(n), nxt(n);
  std::uint32_t count;
  {
    std::uint32_t ids[2] = {0xFFFFFFFFu, 0xFFFFFFFFu};
    std::uint32_t next_id = 0;
    for (State s = 0; s < n; ++s) {
      auto& slot = ids[dfa.is_accepting(s) ? 1 : 0];
      if (slot == 0xFFFFFFFFu) slot = next_id++;
      cur[s] = slot;
    }
    count = next_id;
  }

  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> key(m + 1);
    for (State s = 0; s < n; ++s) {
      key[0] = cur[s];
      for (std::uint32_t c = 0; c < m; ++c) key[c + 1] = cur[dfa.next(s, c)];
      const auto [it, inserted] =
          ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
      nxt[s] = it->second;
    }
    const auto new_count = static_cast<std::uint32_t>(ids.size());
    cur.swap(nxt);
    if (new_count == count) break;
    count = new_count;
  }

  StatePartition partition;
  partition.blocks.assign(count, {});
  partition.block_of = cur;
  for (State s = 0; s < n; ++s) partition.blocks[cur[s]].push_back(s);
  return partition;
}

Dfa quotient(const Dfa& dfa, const StatePartition& p) {
  const std::uint32_t n = dfa.num_states();
  const std::uint32_t m = dfa.alphabet_size();
  if (p.block_of.size() != n)
    throw std::invalid_argument("partition covers " +
                                std::to_string(p.block_of.size()) +
                                " states, DFA has " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (std::uint32_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty())
      throw std::invalid_argument("partition block " + std::to_string(b) +
                                  " is empty");
    for (State s : p.blocks[b]) {
      if (s >= n || p.block_of[s] != b || seen[s])
        throw std::invalid_argument("partition is not a disjoint cover of the states");
      seen[s] = true;
    }
  }
  for (State s = 0; s < n; ++s)
    if (!seen[s])
      throw std::invalid_argument("state " + std::to_string(s) +
                                  " missing from partition");

  const auto nblocks = static_cast<std::uint32_t>(p.blocks.size());
  std::vector<State> table(static_cast<std::size_t>(nblocks) * m);
  std::vector<bool> accepting(nblocks, false);
  for (std::uint32_t b = 0; b < nblocks; ++b) {
    const State rep = p.blocks[b][0];
    accepting[b] = dfa.is_accepting(rep);
    for (State s : p.blocks[b]) {
      if (dfa.is_accepting(s) != accepting[b]) {
        throw CongruenceViolation(
            "block " + std::to_string(b) + " mixes accepting state " +
                std::to_string(accepting[b] ? rep : s) +
                " with non-accepting state " +
                std::to_string(accepting[b] ? s : rep),
            b, CongruenceViolation::kNoSymbol, rep, s);
      }
    }
    for (std::uint32_t c = 0; c < m; ++c) {
      const std::uint32_t target = p.block_of[dfa.next(rep, c)];
      for (State s : p.blocks[b]) {
        const std::uint32_t got = p.block_of[dfa.next(s, c)];
        if (got != target) {
          throw CongruenceViolation(
              "block " + std::to_string(b) + " is not congruent on symbol " +
                  std::to_string(c) + ": state " + std::to_string(rep) +
                  " moves to block " + std::to_string(target) + ", state " +
                  std::to_string(s) + " to block " + std::to_string(got),
              b, c, rep, s);
        }
      }
      table[static_cast<std::size_t>(b) * m + c] = target;
    }
  }
  return Dfa(nblocks, m, p.block_of[dfa.start()], std::move(table),
             std::move(accepting));
}

bool same_block_family(const StatePartition& a, const StatePartition& b) {
  auto normalize = [](const StatePartition& p) {
    auto family = p.blocks;
    for (auto& block : family) std::sort(block.begin(), block.end());
    std::sort(family.begin(), family.end());
    return family;
  };
  return normalize(a) == normalize(b);
}

}  // namespace divdfa
