#pragma once

#include <optional>
#include <vector>

#include "nilfactor/structure.hpp"

namespace nilfactor {

/// Everything chosen on the way to the blocks, kept for auditing. With k
/// blocks: transversals T_1..T_k (T_1 is H_1 itself and each T_i contains the
/// identity), shifts h_2..h_{k-1} (shifts[i-2] is h_i), and the four special
/// elements used to rebuild the last block.
struct ConstructionTrace {
  SubgroupChain chain;
  std::vector<ElementSet> transversals;
  std::vector<int> shifts;
  int t = 0;
  int s = 0;
  int t_prime = 0;
  int s_prime = 0;
};

struct CompleteFactorization {
  std::vector<int> sizes;
  std::vector<ElementSet> blocks;
  std::optional<ConstructionTrace> trace;
};

/// Choices that step 3 onward depends on. The defaults take minimal-id
/// representatives everywhere, which makes the whole pipeline deterministic;
/// tests substitute other valid choices to probe the invariants.
struct ChainChoices {
  std::vector<ElementSet> transversals;  // T_1..T_k
  std::vector<int> shifts;               // h_2..h_{k-1}
  std::optional<int> t_prime;            // default: min of H_2 \ H_1
  std::optional<int> s_prime;            // default: min of H_{k-1}h_{k-1} \ A_{k-1}
};

/// Minimal-id transversals and shifts for the chain. Each shift h_i is the
/// least element of N_{H_{i+1}}(H_i) \ H_i; that difference is nonempty in a
/// nilpotent group, where proper subgroups sit strictly below their
/// normalizers.
ChainChoices default_chain_choices(const GroupTable& g, const SubgroupChain& chain);

/// Assembles the blocks from a chain and explicit choices:
///   A_1 = T_1,  A_i = T_i * h_i for 1 < i < k,
///   A_k = (T_k minus {t, s}) union {t', s'}
/// where t and s are the representatives in T_k of the cosets H_{k-1} and
/// H_{k-1}h_{k-1}. Validates the choices (transversal shape, shift membership
/// and normalization, replacement element membership) and raises
/// InvalidArgument on a violation; raises KTooSmall when the chain has fewer
/// than three steps.
CompleteFactorization assemble_blocks(const GroupTable& g, const SubgroupChain& chain,
                                      const ChainChoices& choices);

/// assemble_blocks with default_chain_choices.
CompleteFactorization build_blocks_from_chain(const GroupTable& g,
                                              const SubgroupChain& chain);

/// Full pipeline: validates the size list (KTooSmall, SizeTooSmall,
/// SizesMismatch, in that order), builds the subgroup chain (NotNilpotent
/// when the group has no such chain), and assembles the blocks. The result
/// carries the construction trace.
CompleteFactorization construct_complete_factorization(const GroupTable& g,
                                                       const std::vector<int>& sizes);

/// Two distinct blocks sharing an element.
struct OverlapWitness {
  int block_a = 0;
  int block_b = 0;
  int element = 0;
};

/// An element reached by two different tuples (one id per block).
struct CollisionWitness {
  int element = 0;
  std::vector<int> first;
  std::vector<int> second;
};

struct VerifyReport {
  bool sizes_ok = false;
  bool disjoint_ok = true;
  bool coverage_ok = false;
  /// False when disjointness was not part of the check (plain k-factorization).
  bool disjoint_checked = true;
  long long product_of_sizes = 0;

  std::optional<OverlapWitness> overlap;
  std::optional<CollisionWitness> collision;
  std::optional<int> uncovered;

  bool pass() const {
    return sizes_ok && coverage_ok && (!disjoint_checked || disjoint_ok);
  }
};

/// Checks, independently of how the blocks were produced:
///   (a) the block sizes multiply to |G|,
///   (b) the blocks are pairwise disjoint,
///   (c) every group element is a product of one id per block in exactly one
///       way (iterated multiplicity counting; any failure yields a concrete
///       witness, with tuples reconstructed by depth-first search).
VerifyReport verify_complete_factorization(const GroupTable& g,
                                           const std::vector<ElementSet>& blocks);

/// Same as verify_complete_factorization but without the disjointness
/// verdict; the report has disjoint_checked = false.
VerifyReport verify_factorization(const GroupTable& g,
                                  const std::vector<ElementSet>& blocks);

}  // namespace nilfactor
