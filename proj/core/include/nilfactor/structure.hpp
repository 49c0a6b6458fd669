#pragma once

#include <utility>
#include <vector>

#include "nilfactor/group.hpp"

namespace nilfactor {

/// Prime factorization of n >= 1 as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<int, int>> prime_factorize(int n);

/// True when for every prime p dividing |G| the elements of p-power order are
/// closed under product. That set always contains the identity and inverses,
/// so closure makes it the unique Sylow p-subgroup; having one normal Sylow
/// subgroup per prime characterizes nilpotent finite groups.
bool is_nilpotent(const GroupTable& g);

struct SylowComponent {
  int prime = 0;
  int exponent = 0;
  Subgroup subgroup;
};

struct SylowDecomposition {
  std::vector<SylowComponent> components;  // primes ascending

  const SylowComponent* find(int prime) const;
};

/// The unique Sylow p-subgroup for each prime dividing |G|.
/// Raises NotNilpotent when some prime's p-power-order elements are not
/// product-closed.
SylowDecomposition sylow_decomposition(const GroupTable& g);

/// Chain {1} = Q_0 < Q_1 < ... < Q_e = P with |Q_j| = p^j, built inside the
/// p-group P by climbing normalizers. Each step picks the minimal-id element
/// x of N_P(Q_j) \ Q_j, then replaces x by x^p until its p-th power lands in
/// Q_j, so the adjoined element extends Q_j by exactly index p. Deterministic
/// for a fixed table.
std::vector<Subgroup> p_group_chain(const GroupTable& g, const Subgroup& p_component,
                                    int prime);

/// Ascending chain H_1 < H_2 < ... < H_k = G with |H_i| = sizes[0]*...*sizes[i-1].
struct SubgroupChain {
  std::vector<int> sizes;
  std::vector<Subgroup> subgroups;

  int k() const { return static_cast<int>(sizes.size()); }
};

/// Builds the chain for the requested block sizes by slicing each Sylow
/// component's p-chain at the right height: H_i is the elementwise product of
/// Q^(p)_{a_i(p)} over all primes p, where a_i(p) is the multiplicity of p in
/// sizes[0]*...*sizes[i-1]. Components of coprime order commute elementwise in
/// a nilpotent group, so the product is a subgroup of exactly that order.
///
/// Raises SizeTooSmall (some size < 2), SizesMismatch (product != |G|), or
/// NotNilpotent.
SubgroupChain subgroup_chain_for_orders(const GroupTable& g,
                                        const std::vector<int>& sizes);

}  // namespace nilfactor
