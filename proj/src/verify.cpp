#include "divdfa/verify.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "divdfa/formula.hpp"
#include "divdfa/io.hpp"
#include "divdfa/minimize.hpp"
#include "divdfa/packages.hpp"

namespace divdfa {

namespace {

void append_reason(PairResult& r, const std::string& what) {
  if (!r.reason.empty()) r.reason += "; ";
  r.reason += what;
}

PairResult check_pair(const DivSpec& spec, std::uint64_t max_states) {
  PairResult r;
  r.base = spec.base;
  r.modulus = spec.modulus;
  r.computed = true;
  r.pass = true;
  try {
    const std::uint64_t f1 = f_count(spec, 1);
    const std::uint64_t f2 = f_count(spec, 2);
    const std::uint64_t f3 = f_count(spec, 3);
    r.f = f3;
    if (f1 != f2 || f2 != f3) {
      r.pass = false;
      append_reason(r, "expressions disagree: " + std::to_string(f1) + "/" +
                           std::to_string(f2) + "/" + std::to_string(f3));
    }

    const Dfa canonical = build_canonical(spec, max_states);
    const MinimizationResult hopcroft = hopcroft_minimize(canonical);
    if (hopcroft.dfa.num_states() != f3) {
      r.pass = false;
      append_reason(r, "hopcroft count " +
                           std::to_string(hopcroft.dfa.num_states()) +
                           " != f " + std::to_string(f3));
    }

    const StatePartition nerode = nerode_partition(canonical);
    if (nerode.blocks.size() != f3) {
      r.pass = false;
      append_reason(r, "nerode count " + std::to_string(nerode.blocks.size()) +
                           " != f " + std::to_string(f3));
    }
    if (!same_block_family(hopcroft.partition, nerode)) {
      r.pass = false;
      append_reason(r, "hopcroft and nerode partitions differ");
    }

    const PackageDfa packaged = minimal_dfa_from_packages(spec, max_states);
    if (packaged.dfa.num_states() != f3) {
      r.pass = false;
      append_reason(r, "package count " +
                           std::to_string(packaged.dfa.num_states()) +
                           " != f " + std::to_string(f3));
    }
    if (!isomorphic(packaged.dfa, hopcroft.dfa)) {
      r.pass = false;
      append_reason(r, "package DFA not isomorphic to hopcroft output");
    }

    // Package classes at the cutoff must be the Nerode blocks.
    {
      std::vector<std::vector<State>> classes;
      for (const ResidueClass* cls : packaged.partition.nonempty_classes())
        classes.emplace_back(cls->residues.begin(), cls->residues.end());
      StatePartition as_partition;
      as_partition.blocks = std::move(classes);
      as_partition.block_of.assign(canonical.num_states(), 0);
      for (std::uint32_t i = 0; i < as_partition.blocks.size(); ++i)
        for (State s : as_partition.blocks[i]) as_partition.block_of[s] = i;
      if (!same_block_family(as_partition, nerode)) {
        r.pass = false;
        append_reason(r, "package classes differ from nerode blocks");
      }
    }

    for (std::uint64_t bound : upper_bounds(spec)) {
      if (bound < f3) {
        r.pass = false;
        append_reason(r, "upper bound " + std::to_string(bound) +
                             " below f " + std::to_string(f3));
        break;
      }
    }

    r.canonical_minimal = canonical_is_minimal(spec);
    if (r.canonical_minimal != (f3 == spec.modulus)) {
      r.pass = false;
      append_reason(r, "canonical-minimality criterion disagrees with f");
    }
  } catch (const std::exception& e) {
    r.pass = false;
    append_reason(r, std::string("exception: ") + e.what());
  }
  if (!r.pass) {
    try {
      r.detail = render_breakdown(breakdown(spec));
    } catch (const std::exception&) {
      // breakdown itself failed; the reason already says why
    }
  }
  return r;
}

}  // namespace

std::string SweepReport::render() const {
  std::string out = "verify bases [" + std::to_string(config.base_lo) + "," +
                    std::to_string(config.base_hi) + "] moduli [" +
                    std::to_string(config.modulus_lo) + "," +
                    std::to_string(config.modulus_hi) + "]\n";
  for (const PairResult& r : results) {
    if (!r.computed || r.pass) continue;
    out += "FAIL b=" + std::to_string(r.base) + " k=" +
           std::to_string(r.modulus) + ": " + r.reason + '\n';
    // Indent the breakdown under the failing pair.
    std::size_t at = 0;
    while (at < r.detail.size()) {
      std::size_t nl = r.detail.find('\n', at);
      if (nl == std::string::npos) nl = r.detail.size();
      out += "  " + r.detail.substr(at, nl - at) + '\n';
      at = nl + 1;
    }
  }
  out += "checked " + std::to_string(checked) + " pairs: " +
         std::to_string(failures) + " failures\n";
  return out;
}

SweepReport run_verify_sweep(const SweepConfig& config) {
  if (config.base_lo < 2)
    throw std::invalid_argument("base range must start at 2 or above");
  if (config.modulus_lo < 1)
    throw std::invalid_argument("modulus range must start at 1 or above");
  if (config.base_hi < config.base_lo || config.modulus_hi < config.modulus_lo)
    throw std::invalid_argument("empty sweep range");
  if (config.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  const std::uint64_t num_bases = config.base_hi - config.base_lo + 1;
  const std::uint64_t num_moduli = config.modulus_hi - config.modulus_lo + 1;
  if (num_bases > std::numeric_limits<std::uint64_t>::max() / num_moduli)
    throw std::invalid_argument("sweep range too large");
  const std::uint64_t total = num_bases * num_moduli;

  SweepReport report;
  report.config = config;
  report.results.resize(total);

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= total) return;
      if (config.fail_fast && stop.load()) return;
      const DivSpec spec{config.base_lo + i / num_moduli,
                         config.modulus_lo + i % num_moduli};
      report.results[i] = check_pair(spec, config.max_states);
      if (!report.results[i].pass && config.fail_fast) stop.store(true);
    }
  };

  if (config.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < config.jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const PairResult& r : report.results) {
    if (!r.computed) continue;
    ++report.checked;
    if (!r.pass) ++report.failures;
  }
  return report;
}

}  // namespace divdfa
