#include "divdfa/packages.hpp"

#include <algorithm>
#include <limits>

#include "divdfa/arith.hpp"
#include "divdfa/formula.hpp"

namespace divdfa {

std::size_t PackagePartition::total_class_count() const {
  std::size_t n = 0;
  for (const auto& pkg : packages) n += pkg.size();
  return n;
}

std::size_t PackagePartition::nonempty_class_count() const {
  std::size_t n = 0;
  for (const auto& pkg : packages)
    for (const auto& cls : pkg)
      if (!cls.residues.empty()) ++n;
  return n;
}

std::vector<const ResidueClass*> PackagePartition::nonempty_classes() const {
  std::vector<const ResidueClass*> out;
  for (const auto& pkg : packages)
    for (const auto& cls : pkg)
      if (!cls.residues.empty()) out.push_back(&cls);
  return out;
}

namespace {

// Solutions of b^alpha * x + c == 0 (mod k) not claimed yet, ascending;
// claims what it returns. b^alpha is reduced mod k before solving.
std::vector<std::uint64_t> claim_class(std::uint64_t coeff_mod_k,
                                       std::uint64_t c, std::uint64_t k,
                                       std::vector<char>& claimed) {
  const std::uint64_t rhs = (k - c % k) % k;
  const CongruenceSolutions sol = solve_linear_congruence(coeff_mod_k, rhs, k);
  std::vector<std::uint64_t> residues;
  if (!sol.solvable) return residues;
  std::uint64_t x = sol.first;
  for (std::uint64_t t = 0; t < sol.count; ++t, x += sol.step) {
    if (!claimed[x]) {
      claimed[x] = 1;
      residues.push_back(x);
    }
  }
  return residues;
}

}  // namespace

PackagePartition build_packages(const DivSpec& spec, std::uint32_t a,
                                std::uint64_t max_states) {
  spec.validate();
  const std::uint64_t k = spec.modulus;
  if (k > max_states)
    throw CapacityError("modulus " + std::to_string(k) +
                        " exceeds the explicit-state cap of " +
                        std::to_string(max_states));

  const GcdPowers gp = gcd_pow_sequence(spec);
  // Total class budget: sum of lambda(b^alpha, k) plus lambda(k, b^a).
  std::uint64_t total = k / gp.at(a);
  std::uint64_t lam_bk = 1;
  for (std::uint32_t alpha = 0; alpha < a; ++alpha) {
    total = sat_add(total, lam_bk);
    lam_bk = sat_mul(lam_bk, spec.base / (gp.at(alpha + 1) / gp.at(alpha)));
  }
  if (total > max_states)
    throw CapacityError("package partition would have " +
                        (total == kUint64Max ? std::string(">2^64-1")
                                             : std::to_string(total)) +
                        " classes, exceeding the cap of " +
                        std::to_string(max_states));

  PackagePartition partition;
  partition.spec = spec;
  partition.a = a;
  partition.packages.resize(a + 1);
  std::vector<char> claimed(k, 0);

  lam_bk = 1;
  for (std::uint32_t alpha = 0; alpha < a; ++alpha) {
    const std::uint64_t g = gp.at(alpha);  // gcd(b^alpha, k)
    const std::uint64_t coeff = pow_mod(spec.base, alpha, k);
    auto& pkg = partition.packages[alpha];
    pkg.reserve(lam_bk);
    // Admissible constants: multiples of g below b^alpha, lam_bk of them.
    for (std::uint64_t j = 0; j < lam_bk; ++j) {
      if (j != 0 && g > kUint64Max / j)
        throw CapacityError("package constant exceeds 64-bit width");
      const std::uint64_t c = g * j;
      pkg.push_back({alpha, c, claim_class(coeff, c, k, claimed)});
    }
    lam_bk = sat_mul(lam_bk, spec.base / (gp.at(alpha + 1) / gp.at(alpha)));
  }

  {
    // Package etcetera: c unrestricted below k (solvable c only, i.e.
    // multiples of gcd(b^a, k)), lambda(k, b^a) classes.
    const std::uint64_t g = gp.at(a);
    const std::uint64_t coeff = pow_mod(spec.base, a, k);
    auto& pkg = partition.packages[a];
    pkg.reserve(k / g);
    for (std::uint64_t j = 0; j < k / g; ++j)
      pkg.push_back({a, g * j, claim_class(coeff, g * j, k, claimed)});
  }
  return partition;
}

PackageDfa minimal_dfa_from_packages(const DivSpec& spec,
                                     std::uint64_t max_states) {
  const FormulaBreakdown bd = breakdown(spec);
  PackagePartition partition = build_packages(spec, bd.a_zero, max_states);
  const std::uint64_t k = spec.modulus;
  if (spec.base > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("alphabet of size " + std::to_string(spec.base) +
                        " cannot be materialized");
  const auto b = static_cast<std::uint32_t>(spec.base);

  const std::vector<const ResidueClass*> classes = partition.nonempty_classes();
  const auto n = static_cast<std::uint32_t>(classes.size());

  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<std::uint32_t> class_of(k, kUnset);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint64_t r : classes[i]->residues) {
      if (class_of[r] != kUnset)
        throw PackageConsistencyError("residue " + std::to_string(r) +
                                      " claimed by two classes");
      class_of[r] = i;
    }
  }
  for (std::uint64_t r = 0; r < k; ++r)
    if (class_of[r] == kUnset)
      throw PackageConsistencyError("residue " + std::to_string(r) +
                                    " not covered by any class");

  std::vector<State> table(static_cast<std::size_t>(n) * b);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t d = 0; d < b; ++d) {
      std::uint32_t target = kUnset;
      for (std::uint64_t r : classes[i]->residues) {
        const std::uint32_t got = class_of[concat_digit(r, d, spec)];
        if (target == kUnset) {
          target = got;
        } else if (got != target) {
          // Would falsify the construction; surfaced, never repaired.
          throw PackageConsistencyError(
              "class " + std::to_string(i) + " (alpha=" +
              std::to_string(classes[i]->package) + ", c=" +
              std::to_string(classes[i]->constant) +
              ") maps to two classes on digit " + std::to_string(d));
        }
      }
      table[static_cast<std::size_t>(i) * b + d] = target;
    }
  }

  const std::uint32_t start = class_of[0];
  std::vector<bool> accepting(n, false);
  accepting[start] = true;  // the class of residue 0, image of epsilon
  Dfa dfa(n, b, start, std::move(table), std::move(accepting));
  return {std::move(dfa), std::move(partition)};
}

std::vector<std::string> state_labels(const PackagePartition& partition) {
  std::vector<std::string> labels;
  for (const ResidueClass* cls : partition.nonempty_classes()) {
    std::string text = "alpha=" + std::to_string(cls->package) +
                       " c=" + std::to_string(cls->constant) + " {";
    for (std::size_t i = 0; i < cls->residues.size(); ++i) {
      if (i > 0) text += ',';
      text += std::to_string(cls->residues[i]);
    }
    text += '}';
    labels.push_back(std::move(text));
  }
  return labels;
}

namespace {

std::vector<std::vector<std::uint64_t>> sorted_family_of_classes(
    const PackagePartition& partition) {
  std::vector<std::vector<std::uint64_t>> family;
  for (const ResidueClass* cls : partition.nonempty_classes())
    family.push_back(cls->residues);  // already ascending
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<std::vector<std::uint64_t>> sorted_family_of_blocks(
    const StatePartition& partition) {
  std::vector<std::vector<std::uint64_t>> family;
  for (const auto& block : partition.blocks)
    family.emplace_back(block.begin(), block.end());
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace

NerodeComparison verify_against_nerode(const DivSpec& spec,
                                       std::uint64_t max_states) {
  const FormulaBreakdown bd = breakdown(spec);
  NerodeComparison report;
  report.spec = spec;
  report.a_zero = bd.a_zero;

  const Dfa canonical = build_canonical(spec, max_states);
  const StatePartition nerode = nerode_partition(canonical);
  const PackagePartition at_cutoff = build_packages(spec, bd.a_zero, max_states);

  report.family_match = sorted_family_of_classes(at_cutoff) ==
                        sorted_family_of_blocks(nerode);
  if (!report.family_match)
    report.notes.push_back("classes at A0 differ from the Nerode blocks");

  report.all_nonempty_upto_a0 = true;
  for (std::uint32_t a = 0; a <= bd.a_zero; ++a) {
    const PackagePartition pp =
        a == bd.a_zero ? at_cutoff : build_packages(spec, a, max_states);
    for (const auto& pkg : pp.packages) {
      for (const auto& cls : pkg) {
        if (cls.residues.empty()) {
          report.all_nonempty_upto_a0 = false;
          report.notes.push_back(
              "empty class at a=" + std::to_string(a) + " (alpha=" +
              std::to_string(cls.package) + ", c=" + std::to_string(cls.constant) +
              ")");
        }
      }
    }
  }

  report.refinement = true;
  report.etcetera_inequivalent = true;
  std::vector<char> block_taken(nerode.blocks.size(), 0);
  for (const auto& cls : at_cutoff.packages.back()) {
    if (cls.residues.empty()) continue;
    const std::uint32_t block = nerode.block_of[cls.residues.front()];
    for (std::uint64_t r : cls.residues) {
      if (nerode.block_of[r] != block) {
        report.refinement = false;
        report.notes.push_back("class (alpha=" + std::to_string(cls.package) +
                               ", c=" + std::to_string(cls.constant) +
                               ") straddles two Nerode blocks");
        break;
      }
    }
    if (block_taken[block]) {
      report.etcetera_inequivalent = false;
      report.notes.push_back(
          "two etcetera classes fall in one Nerode block (c=" +
          std::to_string(cls.constant) + ")");
    }
    block_taken[block] = 1;
  }
  for (std::uint32_t alpha = 0; alpha < at_cutoff.a; ++alpha) {
    for (const auto& cls : at_cutoff.packages[alpha]) {
      if (cls.residues.empty()) continue;
      const std::uint32_t block = nerode.block_of[cls.residues.front()];
      for (std::uint64_t r : cls.residues) {
        if (nerode.block_of[r] != block) {
          report.refinement = false;
          report.notes.push_back("class (alpha=" + std::to_string(alpha) +
                                 ", c=" + std::to_string(cls.constant) +
                                 ") straddles two Nerode blocks");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace divdfa
