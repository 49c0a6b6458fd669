#pragma once

#include <optional>
#include <vector>

#include "nilfactor/factorize.hpp"

namespace nilfactor {

enum class SearchMode {
  FirstWitness,  // stop at the first complete factorization, return it
  CountAll,      // count every complete factorization with the given sizes
  ExistsOnly,    // stop at the first hit, return only the status
};

enum class SearchStatus {
  Found,
  ExhaustedNotFound,
  BudgetExceeded,
};

struct SearchLimits {
  long long max_nodes = 100'000'000;  // candidate placements examined
  double max_seconds = 60.0;          // <= 0 disables the wall-clock limit
};

struct SearchProblem {
  const GroupTable* group = nullptr;
  std::vector<int> sizes;
  SearchMode mode = SearchMode::FirstWitness;
  SearchLimits limits;
  /// Explore the first block in small-element-order-first order instead of
  /// ascending ids. Changes only the exploration order, never the space, so
  /// every mode stays exact. Unset means: on for ExistsOnly, off otherwise.
  std::optional<bool> canonical_first_block;
  int threads = 1;  // > 1 splits on the first placement; results stay exact
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNotFound;
  std::optional<std::vector<ElementSet>> witness;  // FirstWitness hits only
  long long nodes_explored = 0;
  std::optional<long long> count;  // CountAll: factorizations seen before any cutoff
  double elapsed_seconds = 0.0;
};

/// Backtracking over blocks left to right, elements within a block in
/// ascending exploration order. A placement is pruned when the element is
/// already used by any block or when some prefix product repeats one that an
/// earlier tuple produced; the incremental product set makes every surviving
/// leaf a complete factorization by construction. Each reported hit is still
/// verified independently before it counts.
///
/// Raises SizeTooSmall (a size < 1) or SizesMismatch (product != |G|).
/// Deterministic when threads == 1; with more threads CountAll counts and the
/// status stay exact, but which witness FirstWitness returns may vary.
SearchOutcome search_complete_factorization(const SearchProblem& problem);

/// Mutual validation of the two pipelines: true iff the constructive
/// algorithm produces a verified factorization AND an independent exists-only
/// search also reports Found. Construction errors propagate; a search budget
/// cutoff yields false, so callers should budget generously.
bool cross_check(const GroupTable& g, const std::vector<int>& sizes,
                 const SearchLimits& limits = {});

}  // namespace nilfactor
