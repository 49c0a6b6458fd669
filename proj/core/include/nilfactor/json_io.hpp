#pragma once

#include <string>

#include "nilfactor/constructors.hpp"
#include "nilfactor/factorize.hpp"
#include "nilfactor/search.hpp"

namespace nilfactor {

/// Wire formats (all single-line JSON on output):
///   group:         {"order": n, "table": [[...],...], "labels": [...] (optional)}
///   permutations:  {"degree": d, "generators": [[...],...]}
///   factorization: {"sizes": [...], "blocks": [[...],...],
///                   "trace": {"chain_orders": [...], "shifts": [...],
///                             "t":, "s":, "t_prime":, "s_prime":} (optional)}
/// On input the identity need not be id 0 (tables are relabeled); every dump
/// uses id 0. Malformed content and unreadable files raise IoError; group
/// axiom violations surface as NotAGroup from the table validator.

std::string group_to_json(const GroupTable& g);
GroupTable group_from_json_text(const std::string& text,
                                const std::string& origin = "group json");
GroupTable read_group_json(const std::string& path);

struct PermutationGroupFile {
  int degree = 0;
  std::vector<Permutation> generators;
};
PermutationGroupFile read_permutation_group_json(const std::string& path);

std::string factorization_to_json(const CompleteFactorization& f);
/// Reads sizes and blocks; a trace present in the text is ignored (the wire
/// form does not carry enough to rebuild the chain subgroups). When "sizes"
/// is present it must match the block sizes.
CompleteFactorization factorization_from_json_text(
    const std::string& text, const std::string& origin = "factorization json");
CompleteFactorization read_factorization_json(const std::string& path);

std::string verify_report_to_json(const VerifyReport& report);

/// include_elapsed=false makes the output a pure function of the traversal,
/// which byte-stable reports rely on.
std::string search_outcome_to_json(const SearchOutcome& outcome,
                                   bool include_elapsed = true);

}  // namespace nilfactor
