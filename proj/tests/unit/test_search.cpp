#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "checks.hpp"
#include "doctest.h"
#include "factorizations.hpp"
#include "nilfactor/constructors.hpp"
#include "nilfactor/search.hpp"

using namespace nilfactor;
using nilfactor::testing::brute_force_complete_count;
using nilfactor::testing::raises;

namespace {

SearchProblem problem(const GroupTable& g, std::vector<int> sizes, SearchMode mode) {
  SearchProblem p;
  p.group = &g;
  p.sizes = std::move(sizes);
  p.mode = mode;
  p.limits.max_seconds = 0;  // node budget only: deterministic outcomes
  return p;
}

}  // namespace

TEST_CASE("two-factor searches exhaust without a witness on Z_4") {
  GroupTable g = make_cyclic(4);
  for (SearchMode mode :
       {SearchMode::FirstWitness, SearchMode::CountAll, SearchMode::ExistsOnly}) {
    SearchOutcome out = search_complete_factorization(problem(g, {2, 2}, mode));
    CHECK(out.status == SearchStatus::ExhaustedNotFound);
    CHECK_FALSE(out.witness.has_value());
    if (mode == SearchMode::CountAll) {
      REQUIRE(out.count.has_value());
      CHECK(*out.count == 0);
    }
  }
}

TEST_CASE("found witnesses verify and counts match brute force") {
  const std::vector<std::pair<GroupTable, std::vector<int>>> grid = {
      {make_cyclic(6), {2, 3}},
      {make_cyclic(6), {3, 2}},
      {make_dihedral(3), {2, 3}},
      {make_dihedral(3), {3, 2}},
      {make_cyclic(8), {2, 2, 2}},
      {make_abelian({2, 2, 2}), {2, 2, 2}},
      {make_dihedral(4), {2, 2, 2}},
      {make_quaternion(), {2, 2, 2}},
      {make_cyclic(12), {2, 2, 3}},
      {make_cyclic(9), {3, 3}},
  };
  for (const auto& [g, sizes] : grid) {
    const long long expected = brute_force_complete_count(g, sizes);
    SearchOutcome all = search_complete_factorization(problem(g, sizes, SearchMode::CountAll));
    CHECK(all.status == (expected > 0 ? SearchStatus::Found : SearchStatus::ExhaustedNotFound));
    REQUIRE(all.count.has_value());
    CHECK(*all.count == expected);

    SearchOutcome first =
        search_complete_factorization(problem(g, sizes, SearchMode::FirstWitness));
    if (expected > 0) {
      CHECK(first.status == SearchStatus::Found);
      REQUIRE(first.witness.has_value());
      CHECK(verify_complete_factorization(g, *first.witness).pass());
    } else {
      CHECK(first.status == SearchStatus::ExhaustedNotFound);
    }
  }
}

TEST_CASE("single-threaded runs are deterministic") {
  GroupTable g = make_cyclic(12);
  SearchOutcome a = search_complete_factorization(problem(g, {2, 2, 3}, SearchMode::FirstWitness));
  SearchOutcome b = search_complete_factorization(problem(g, {2, 2, 3}, SearchMode::FirstWitness));
  CHECK(a.status == SearchStatus::Found);
  CHECK(a.nodes_explored == b.nodes_explored);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);
}

TEST_CASE("thread splitting changes neither status nor count") {
  GroupTable g = make_cyclic(12);
  SearchProblem single = problem(g, {2, 2, 3}, SearchMode::CountAll);
  SearchProblem multi = single;
  multi.threads = 4;
  SearchOutcome a = search_complete_factorization(single);
  SearchOutcome b = search_complete_factorization(multi);
  CHECK(a.status == b.status);
  REQUIRE(a.count.has_value());
  REQUIRE(b.count.has_value());
  CHECK(*a.count == *b.count);

  SearchProblem multi_first = problem(g, {2, 2, 3}, SearchMode::FirstWitness);
  multi_first.threads = 3;
  SearchOutcome w = search_complete_factorization(multi_first);
  CHECK(w.status == SearchStatus::Found);
  REQUIRE(w.witness.has_value());
  CHECK(verify_complete_factorization(g, *w.witness).pass());
}

TEST_CASE("the canonical-first-block flag never changes results") {
  const std::vector<std::pair<GroupTable, std::vector<int>>> grid = {
      {make_cyclic(12), {2, 2, 3}},
      {make_cyclic(4), {2, 2}},
      {make_dihedral(4), {2, 2, 2}},
  };
  for (const auto& [g, sizes] : grid) {
    for (SearchMode mode : {SearchMode::CountAll, SearchMode::ExistsOnly}) {
      SearchProblem on = problem(g, sizes, mode);
      on.canonical_first_block = true;
      SearchProblem off = problem(g, sizes, mode);
      off.canonical_first_block = false;
      SearchOutcome a = search_complete_factorization(on);
      SearchOutcome b = search_complete_factorization(off);
      CHECK(a.status == b.status);
      CHECK(a.count == b.count);
    }
  }
}

TEST_CASE("budgets cut off and raising them is monotone") {
  GroupTable g = make_cyclic(16);

  SearchProblem tiny = problem(g, {4, 4}, SearchMode::CountAll);
  tiny.limits.max_nodes = 10;
  SearchOutcome cut = search_complete_factorization(tiny);
  CHECK(cut.status == SearchStatus::BudgetExceeded);

  // Found / exhausted verdicts can only appear once and then persist.
  SearchProblem grow = problem(g, {2, 2, 4}, SearchMode::ExistsOnly);
  bool settled = false;
  SearchStatus settled_status = SearchStatus::BudgetExceeded;
  for (long long budget : {1LL, 100LL, 10'000LL, 100'000'000LL}) {
    grow.limits.max_nodes = budget;
    SearchOutcome out = search_complete_factorization(grow);
    if (settled) {
      CHECK(out.status == settled_status);
    } else if (out.status != SearchStatus::BudgetExceeded) {
      settled = true;
      settled_status = out.status;
    }
  }
  CHECK(settled);
  CHECK(settled_status == SearchStatus::Found);
}

TEST_CASE("exists-only reports no witness and no count") {
  GroupTable g = make_cyclic(8);
  SearchOutcome out = search_complete_factorization(problem(g, {2, 2, 2}, SearchMode::ExistsOnly));
  CHECK(out.status == SearchStatus::Found);
  CHECK_FALSE(out.witness.has_value());
  CHECK_FALSE(out.count.has_value());
  CHECK(out.nodes_explored > 0);
}

TEST_CASE("size-one blocks are legal for the search") {
  GroupTable g = make_cyclic(6);
  SearchOutcome out = search_complete_factorization(problem(g, {1, 6}, SearchMode::CountAll));
  // A singleton block forces the other block to be all of G, which overlaps it.
  CHECK(out.status == SearchStatus::ExhaustedNotFound);
  CHECK(*out.count == 0);

  SearchOutcome whole = search_complete_factorization(problem(g, {6}, SearchMode::CountAll));
  CHECK(whole.status == SearchStatus::Found);
  CHECK(*whole.count == 1);  // only A_1 = G itself
}

TEST_CASE("search validates its inputs") {
  GroupTable g = make_cyclic(6);
  CHECK(raises(Errc::SizesMismatch, [&] {
    search_complete_factorization(problem(g, {2, 2}, SearchMode::ExistsOnly));
  }));
  CHECK(raises(Errc::SizeTooSmall, [&] {
    search_complete_factorization(problem(g, {0, 6}, SearchMode::ExistsOnly));
  }));
  CHECK(raises(Errc::InvalidArgument, [&] {
    search_complete_factorization(problem(g, {}, SearchMode::ExistsOnly));
  }));
  CHECK(raises(Errc::InvalidArgument, [] {
    SearchProblem p;
    p.sizes = {2, 3};
    search_complete_factorization(p);
  }));
}

TEST_CASE("cross_check validates both pipelines and propagates errors") {
  SearchLimits limits;
  limits.max_seconds = 0;
  CHECK(cross_check(make_cyclic(8), {2, 2, 2}, limits));
  CHECK(cross_check(make_cyclic(12), {2, 2, 3}, limits));
  CHECK(cross_check(make_heisenberg(2), {2, 2, 2}, limits));
  CHECK(raises(Errc::NotNilpotent,
               [&] { cross_check(make_dihedral(6), {2, 2, 3}, limits); }));
  CHECK(raises(Errc::KTooSmall, [&] { cross_check(make_cyclic(8), {2, 4}, limits); }));
}

TEST_CASE("the supersolvable probe instance terminates with a verdict") {
  // Open question territory: D_6 with sizes (2,2,3). The outcome is a datum,
  // not an oracle; we only require a definite verdict and a sound witness.
  GroupTable g = make_dihedral(6);
  SearchProblem p = problem(g, {2, 2, 3}, SearchMode::FirstWitness);
  SearchOutcome out = search_complete_factorization(p);
  REQUIRE(out.status != SearchStatus::BudgetExceeded);
  if (out.status == SearchStatus::Found) {
    REQUIRE(out.witness.has_value());
    CHECK(verify_complete_factorization(g, *out.witness).pass());
  }
}
