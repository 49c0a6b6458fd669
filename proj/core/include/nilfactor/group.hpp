#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilfactor/error.hpp"

namespace nilfactor {

/// Sorted, duplicate-free set of element ids. This is the canonical carrier
/// for blocks, transversals and cosets: keeping ids ascending makes equality,
/// disjointness and printing deterministic.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<int> ids);

  static ElementSet singleton(int id) { return ElementSet(std::vector<int>{id}); }

  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(int id) const;
  bool disjoint_with(const ElementSet& other) const;
  bool subset_of(const ElementSet& other) const;

  ElementSet union_with(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet minus(const ElementSet& other) const;

  /// Least id; the set must be nonempty.
  int min() const;

  std::vector<int>::const_iterator begin() const { return ids_.begin(); }
  std::vector<int>::const_iterator end() const { return ids_.end(); }

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<int> ids_;
};

/// Dense multiplication table over element ids 0..n-1 with the identity at 0.
/// Immutable after construction; all operations on it are pure, so instances
/// can be shared freely across threads.
class GroupTable {
 public:
  /// Wraps a table that is already known to satisfy the group axioms with
  /// identity 0 (constructor-built and permutation-built groups). Computes
  /// the inverse array; throws NotAGroup if some row lacks the identity,
  /// which would indicate a broken builder.
  static GroupTable from_trusted_table(int order, std::vector<int> flat_table,
                                       std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  int inv(int a) const { return inverse_[a]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// True when the table was accepted with sampled (not exhaustive)
  /// associativity checking; see make_from_table.
  bool partially_validated() const { return partially_validated_; }

  const std::vector<int>& flat_table() const { return table_; }

  ElementSet all_elements() const;

 private:
  GroupTable() = default;

  int n_ = 0;
  std::vector<int> table_;    // row-major n*n
  std::vector<int> inverse_;  // length n
  std::vector<std::string> labels_;
  bool partially_validated_ = false;

  friend GroupTable make_from_table(int, const std::vector<std::vector<int>>&, int,
                                    std::vector<std::string>);
};

/// Subgroup given by its element set. Always contains the identity 0 and is
/// closed under product and inverse when produced by this library; use
/// is_subgroup to check foreign sets.
struct Subgroup {
  ElementSet elements;

  int order() const { return elements.size(); }
  bool contains(int id) const { return elements.contains(id); }

  bool operator==(const Subgroup&) const = default;
};

/// x raised to a nonnegative power by repeated squaring.
int power(const GroupTable& g, int x, long long e);

/// Least t >= 1 with x^t = identity.
int element_order(const GroupTable& g, int x);

/// {a*b : a in lhs, b in rhs}, duplicates collapsed.
ElementSet multiply_sets(const GroupTable& g, const ElementSet& lhs, const ElementSet& rhs);

/// The right coset h*x.
ElementSet right_coset(const GroupTable& g, const ElementSet& h, int x);

/// Least subgroup containing the seed; the empty seed yields the trivial
/// subgroup {0}.
Subgroup generated_subgroup(const GroupTable& g, const ElementSet& seed);

Subgroup trivial_subgroup();
Subgroup whole_group(const GroupTable& g);

/// True when the set contains 0 and is closed under the table product.
bool is_subgroup(const GroupTable& g, const ElementSet& set);

/// N_ambient(h) = {x in ambient : x^-1 h x = h}. Requires h <= ambient.
Subgroup normalizer(const GroupTable& g, const Subgroup& h, const Subgroup& ambient);

/// One representative per right coset of h inside ambient, each the minimal
/// id of its coset. Requires h <= ambient; the subgroup's own coset is
/// represented by the identity.
ElementSet right_transversal(const GroupTable& g, const Subgroup& h, const Subgroup& ambient);

/// Outcome of validating a raw table against the group axioms.
struct TableValidation {
  bool ok = false;
  /// False when associativity was only sampled (order above the bound).
  bool associativity_exhaustive = true;
  /// First failure, in terms of the input table's ids.
  std::string failure;
};

/// Checks identity existence, Latin-square rows/columns, two-sided inverses
/// and associativity. Associativity is exhaustive for order <= assoc_bound
/// and deterministically sampled above it.
TableValidation validate_raw_table(int order, const std::vector<int>& flat_table, int assoc_bound);

}  // namespace nilfactor
