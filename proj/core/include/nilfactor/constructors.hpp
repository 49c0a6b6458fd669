#pragma once

#include <vector>

#include "nilfactor/group.hpp"

namespace nilfactor {

inline constexpr int kDefaultMaxGroupOrder = 65536;
inline constexpr int kDefaultAssocCheckBound = 512;

/// Process-wide cap on constructed group orders (a dense table costs n^2
/// ids). The CLI seeds this from NILFACTOR_MAX_ORDER.
int max_group_order();
void set_max_group_order(int cap);

/// Z_n under addition mod n.
GroupTable make_cyclic(int n);

/// Direct sum of cyclic groups Z_f1 x ... x Z_fm, every factor >= 2. Element
/// ids are the mixed-radix encoding of component vectors with the first
/// factor most significant, so make_abelian({f}) coincides with
/// make_cyclic(f).
GroupTable make_abelian(const std::vector<int>& invariant_factors);

/// Componentwise product on pairs; id encoding is i_a * |b| + i_b.
GroupTable make_direct_product(const GroupTable& a, const GroupTable& b);

/// Dihedral group of order 2m: ids 0..m-1 are rotations r^i, ids m..2m-1 are
/// reflections s*r^i.
GroupTable make_dihedral(int m);

/// The quaternion group Q8: ids 0..7 are 1, -1, i, -i, j, -j, k, -k.
GroupTable make_quaternion();

/// Upper unitriangular 3x3 matrices over Z_p, order p^3. Element (a, b, c)
/// has id a*p^2 + b*p + c and represents the matrix with a, b above the
/// diagonal and c in the corner.
GroupTable make_heisenberg(int p);

using Permutation = std::vector<int>;

/// Closes the generated permutation group and returns its Cayley table with
/// the identity at id 0; remaining ids follow breadth-first discovery order.
GroupTable make_from_permutations(int degree, const std::vector<Permutation>& generators);

/// Validates a raw table against all group axioms and relabels so the
/// identity is 0. Associativity is checked exhaustively up to
/// assoc_check_bound and sampled above it, in which case the resulting
/// table is flagged partially validated.
GroupTable make_from_table(int order, const std::vector<std::vector<int>>& table,
                           int assoc_check_bound = kDefaultAssocCheckBound,
                           std::vector<std::string> labels = {});

}  // namespace nilfactor
