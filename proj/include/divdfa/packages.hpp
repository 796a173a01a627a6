#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "divdfa/dfa.hpp"
#include "divdfa/minimize.hpp"

namespace divdfa {

/// One residue class of a package: the solutions x of
/// b^package * x + constant == 0 (mod k) not claimed by an earlier class.
/// The residue set may be empty when the partition is built past the cutoff.
struct ResidueClass {
  std::uint32_t package = 0;            // alpha
  std::uint64_t constant = 0;           // c
  std::vector<std::uint64_t> residues;  // ascending

  bool operator==(const ResidueClass&) const = default;
};

/// Packages 0..a-1 plus the final unrestricted package ("etcetera"):
/// package alpha < a holds the classes for each admissible c < b^alpha with
/// gcd(b^alpha, k) | c (exactly lambda(b^alpha, k) of them); package a holds
/// one class per multiple of gcd(b^a, k) below k (lambda(k, b^a) of them).
/// Classes keep their slot even when all of their residues were claimed
/// earlier, so package sizes stay lambda-exact.
struct PackagePartition {
  DivSpec spec;
  std::uint32_t a = 0;
  std::vector<std::vector<ResidueClass>> packages;  // size a + 1

  std::size_t total_class_count() const;
  std::size_t nonempty_class_count() const;

  /// Nonempty classes in construction order: package ascending, then
  /// constant ascending. This is the state order of the package-built DFA.
  std::vector<const ResidueClass*> nonempty_classes() const;
};

/// Raised when the built classes contradict their defining properties
/// (a residue unclaimed or claimed twice, or a class whose members disagree
/// on a transition). Never repaired silently.
class PackageConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

PackagePartition build_packages(const DivSpec& spec, std::uint32_t a,
                                std::uint64_t max_states = kDefaultMaxStates);

struct PackageDfa {
  Dfa dfa;
  PackagePartition partition;
};

/// Builds the minimal DFA directly from the packages at the cutoff a = A0:
/// states are the residue classes, the transition of a class on digit d is
/// the class containing (b*x + d) mod k (checked identical for every member
/// x), and the class containing residue 0 is both start and accepting.
PackageDfa minimal_dfa_from_packages(const DivSpec& spec,
                                     std::uint64_t max_states = kDefaultMaxStates);

/// One label per DFA state, e.g. "alpha=1 c=2 {5,13}".
std::vector<std::string> state_labels(const PackagePartition& partition);

/// Empirical check of the package construction against the Myhill-Nerode
/// partition of the canonical automaton.
struct NerodeComparison {
  DivSpec spec;
  std::uint32_t a_zero = 0;
  bool family_match = false;          // classes at A0 == Nerode blocks
  bool all_nonempty_upto_a0 = false;  // every class nonempty for a <= A0
  bool etcetera_inequivalent = false; // etcetera classes in distinct blocks
  bool refinement = false;            // each class inside one Nerode block
  std::vector<std::string> notes;

  bool pass() const {
    return family_match && all_nonempty_upto_a0 && etcetera_inequivalent &&
           refinement;
  }
};

NerodeComparison verify_against_nerode(const DivSpec& spec,
                                       std::uint64_t max_states = kDefaultMaxStates);

}  // namespace divdfa
