#include "nilfactor/factorize.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace nilfactor {

namespace {

void check_chain(const GroupTable& g, const SubgroupChain& chain) {
  if (chain.sizes.empty() || chain.subgroups.size() != chain.sizes.size())
    raise(Errc::InvalidArgument, "chain sizes and subgroups disagree");
  long long d = 1;
  for (int i = 0; i < chain.k(); ++i) {
    d *= chain.sizes[i];
    if (chain.subgroups[i].order() != d)
      raise(Errc::InvalidArgument,
            "chain subgroup " + std::to_string(i + 1) + " has the wrong order");
    if (i > 0 && !chain.subgroups[i - 1].elements.subset_of(chain.subgroups[i].elements))
      raise(Errc::InvalidArgument, "chain subgroups are not nested");
  }
  if (chain.subgroups.back().order() != g.order())
    raise(Errc::InvalidArgument, "chain does not end at the whole group");
}

void check_transversal(const GroupTable& g, int step, const ElementSet& reps,
                       const Subgroup& below, const Subgroup& above) {
  const std::string where = "transversal " + std::to_string(step + 1);
  if (reps.size() * below.order() != above.order())
    raise(Errc::InvalidArgument, where + " has the wrong size");
  if (!reps.contains(0))
    raise(Errc::InvalidArgument, where + " must contain the identity");
  if (!reps.subset_of(above.elements))
    raise(Errc::InvalidArgument, where + " leaves its subgroup");
  std::vector<int> keys;
  keys.reserve(reps.size());
  for (int r : reps) keys.push_back(right_coset(g, below.elements, r).min());
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    raise(Errc::InvalidArgument, where + " repeats a coset");
}

void check_shift(const GroupTable& g, int step, int h, const Subgroup& cur,
                 const Subgroup& next) {
  const std::string where = "shift " + std::to_string(step);
  if (h < 0 || h >= g.order() || !next.contains(h))
    raise(Errc::InvalidArgument, where + " lies outside the next chain subgroup");
  if (cur.contains(h))
    raise(Errc::InvalidArgument, where + " lies inside the subgroup it must move");
  const int hi = g.inv(h);
  for (int x : cur.elements)
    if (!cur.contains(g.mul(g.mul(hi, x), h)))
      raise(Errc::InvalidArgument, where + " does not normalize the subgroup");
}

/// Depth-first enumeration of block tuples with the given product, ascending
/// lexicographically; stops after `limit` tuples.
void find_tuples(const GroupTable& g, const std::vector<ElementSet>& blocks,
                 std::size_t depth, int partial, int target, std::size_t limit,
                 std::vector<int>& tuple, std::vector<std::vector<int>>& out) {
  if (out.size() >= limit) return;
  if (depth == blocks.size()) {
    if (partial == target) out.push_back(tuple);
    return;
  }
  for (int y : blocks[depth]) {
    tuple.push_back(y);
    find_tuples(g, blocks, depth + 1, g.mul(partial, y), target, limit, tuple, out);
    tuple.pop_back();
    if (out.size() >= limit) return;
  }
}

void scan_coverage(const GroupTable& g, const std::vector<ElementSet>& blocks,
                   VerifyReport& report) {
  const int n = g.order();
  std::vector<int> counts(n, 0);
  counts[0] = 1;

  for (std::size_t j = 0; j < blocks.size(); ++j) {
    std::vector<int> next(n, 0);
    for (int x = 0; x < n; ++x) {
      if (counts[x] == 0) continue;
      for (int y : blocks[j]) next[g.mul(x, y)] += counts[x];
    }
    counts = std::move(next);

    // Two tuples of the first j+1 blocks with equal product stay equal under
    // any shared completion, so a collision here already decides the verdict.
    int doubled = -1;
    for (int z = 0; z < n; ++z) {
      if (counts[z] > 1) {
        doubled = z;
        break;
      }
    }
    if (doubled < 0) continue;

    std::vector<ElementSet> prefix(blocks.begin(), blocks.begin() + j + 1);
    std::vector<std::vector<int>> tuples;
    std::vector<int> scratch;
    find_tuples(g, prefix, 0, 0, doubled, 2, scratch, tuples);

    CollisionWitness w;
    w.first = std::move(tuples[0]);
    w.second = std::move(tuples[1]);
    int full = doubled;
    for (std::size_t m = j + 1; m < blocks.size(); ++m) {
      const int y = blocks[m].min();
      w.first.push_back(y);
      w.second.push_back(y);
      full = g.mul(full, y);
    }
    w.element = full;
    report.collision = std::move(w);
    report.coverage_ok = false;
    return;
  }

  for (int z = 0; z < n; ++z) {
    if (counts[z] == 0) {
      report.uncovered = z;
      report.coverage_ok = false;
      return;
    }
  }
  report.coverage_ok = true;
}

VerifyReport verify_impl(const GroupTable& g, const std::vector<ElementSet>& blocks,
                         bool check_disjoint) {
  for (const ElementSet& b : blocks)
    for (int id : b)
      if (id < 0 || id >= g.order())
        raise(Errc::InvalidArgument,
              "block element " + std::to_string(id) + " is outside the group");

  VerifyReport report;
  report.disjoint_checked = check_disjoint;

  long long product = 1;
  for (const ElementSet& b : blocks) {
    product *= b.size();
    if (product > g.order()) break;  // capped; already a mismatch
  }
  report.product_of_sizes = product;
  report.sizes_ok = product == g.order();

  if (check_disjoint) {
    report.disjoint_ok = true;
    for (std::size_t i = 0; i + 1 < blocks.size() && report.disjoint_ok; ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        ElementSet common = blocks[i].intersect(blocks[j]);
        if (!common.empty()) {
          report.overlap = OverlapWitness{static_cast<int>(i), static_cast<int>(j),
                                          common.min()};
          report.disjoint_ok = false;
          break;
        }
      }
    }
  }

  scan_coverage(g, blocks, report);
  return report;
}

}  // namespace

ChainChoices default_chain_choices(const GroupTable& g, const SubgroupChain& chain) {
  ChainChoices choices;
  const int k = chain.k();
  choices.transversals.push_back(chain.subgroups[0].elements);
  for (int i = 1; i < k; ++i)
    choices.transversals.push_back(
        right_transversal(g, chain.subgroups[i - 1], chain.subgroups[i]));
  for (int i = 1; i + 1 < k; ++i) {
    // h_{i+1} in paper numbering: normalizes H_{i+1}, lives in H_{i+2}.
    Subgroup norm = normalizer(g, chain.subgroups[i], chain.subgroups[i + 1]);
    ElementSet outside = norm.elements.minus(chain.subgroups[i].elements);
    if (outside.empty())
      raise(Errc::NormalizerTrivial,
            "no element of the next chain subgroup normalizes step " +
                std::to_string(i + 1));
    choices.shifts.push_back(outside.min());
  }
  return choices;
}

CompleteFactorization assemble_blocks(const GroupTable& g, const SubgroupChain& chain,
                                      const ChainChoices& choices) {
  check_chain(g, chain);
  const int k = chain.k();
  if (k < 3) raise(Errc::KTooSmall, "need at least three blocks");

  if (static_cast<int>(choices.transversals.size()) != k)
    raise(Errc::InvalidArgument, "expected one transversal per chain step");
  if (static_cast<int>(choices.shifts.size()) != k - 2)
    raise(Errc::InvalidArgument, "expected one shift per middle chain step");
  if (!(choices.transversals[0] == chain.subgroups[0].elements))
    raise(Errc::InvalidArgument, "the first transversal must be the first subgroup");
  for (int i = 1; i < k; ++i)
    check_transversal(g, i, choices.transversals[i], chain.subgroups[i - 1],
                      chain.subgroups[i]);
  for (int i = 1; i + 1 < k; ++i)
    check_shift(g, i + 1, choices.shifts[i - 1], chain.subgroups[i],
                chain.subgroups[i + 1]);

  std::vector<ElementSet> blocks;
  blocks.reserve(k);
  blocks.push_back(choices.transversals[0]);
  for (int i = 1; i + 1 < k; ++i) {
    std::vector<int> shifted;
    shifted.reserve(choices.transversals[i].size());
    for (int r : choices.transversals[i])
      shifted.push_back(g.mul(r, choices.shifts[i - 1]));
    blocks.push_back(ElementSet(std::move(shifted)));
  }

  const Subgroup& top_below = chain.subgroups[k - 2];
  const ElementSet& last_reps = choices.transversals[k - 1];
  const int last_shift = choices.shifts[k - 3];

  ElementSet in_subgroup = last_reps.intersect(top_below.elements);
  ElementSet shifted_coset = right_coset(g, top_below.elements, last_shift);
  ElementSet in_coset = last_reps.intersect(shifted_coset);
  if (in_subgroup.size() != 1 || in_coset.size() != 1)
    raise(Errc::ChainStepFailed, "last transversal does not meet the two special cosets once");
  const int t = in_subgroup.min();
  const int s = in_coset.min();

  ElementSet deep_pool = chain.subgroups[1].elements.minus(chain.subgroups[0].elements);
  int t_prime = choices.t_prime.value_or(deep_pool.min());
  if (!deep_pool.contains(t_prime))
    raise(Errc::InvalidArgument, "t' must come from the second chain step minus the first");

  ElementSet shallow_pool = shifted_coset.minus(blocks[k - 2]);
  int s_prime = choices.s_prime.value_or(shallow_pool.min());
  if (!shallow_pool.contains(s_prime))
    raise(Errc::InvalidArgument,
          "s' must come from the shifted coset minus the next-to-last block");

  ElementSet last = last_reps.minus(ElementSet({t, s})).union_with(ElementSet({t_prime, s_prime}));
  if (last.size() != last_reps.size())
    raise(Errc::ChainStepFailed, "last block replacement changed the block size");
  blocks.push_back(std::move(last));

  CompleteFactorization out;
  out.sizes = chain.sizes;
  out.blocks = std::move(blocks);
  out.trace = ConstructionTrace{chain, choices.transversals, choices.shifts,
                                t, s, t_prime, s_prime};
  return out;
}

CompleteFactorization build_blocks_from_chain(const GroupTable& g,
                                              const SubgroupChain& chain) {
  check_chain(g, chain);
  if (chain.k() < 3) raise(Errc::KTooSmall, "need at least three blocks");
  return assemble_blocks(g, chain, default_chain_choices(g, chain));
}

CompleteFactorization construct_complete_factorization(const GroupTable& g,
                                                       const std::vector<int>& sizes) {
  if (sizes.size() < 3) raise(Errc::KTooSmall, "need at least three block sizes");
  for (int m : sizes)
    if (m < 2) raise(Errc::SizeTooSmall, "every block size must be at least 2");
  long long product = 1;
  for (int m : sizes) {
    product *= m;
    if (product > g.order()) break;
  }
  if (product != g.order()) {
    std::ostringstream msg;
    msg << "block sizes multiply to " << product << " but the group has order "
        << g.order();
    raise(Errc::SizesMismatch, msg.str());
  }
  return build_blocks_from_chain(g, subgroup_chain_for_orders(g, sizes));
}

VerifyReport verify_complete_factorization(const GroupTable& g,
                                           const std::vector<ElementSet>& blocks) {
  return verify_impl(g, blocks, true);
}

VerifyReport verify_factorization(const GroupTable& g,
                                  const std::vector<ElementSet>& blocks) {
  return verify_impl(g, blocks, false);
}

}  // namespace nilfactor
