#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilfactor/constructors.hpp"
#include "nilfactor/factorize.hpp"
#include "nilfactor/group_spec.hpp"
#include "nilfactor/json_io.hpp"
#include "nilfactor/search.hpp"

// Exit codes: 0 pass/found, 1 negative result, 2 precondition or usage error,
// 3 I/O error, 4 budget exceeded. Machine output is one JSON line on stdout;
// diagnostics go to stderr.

namespace nf = nilfactor;

namespace {

long long pow10_checked(int n) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    v *= 10;
    if (v > nf::max_group_order())
      nf::raise(nf::Errc::GroupTooLarge,
                "10^" + std::to_string(n) + " is above the group order cap");
  }
  return v;
}

int run_construct(const std::string& spec, const std::vector<int>& sizes,
                  const std::string& output) {
  nf::GroupTable g = nf::parse_group_spec(spec);
  nf::CompleteFactorization f = nf::construct_complete_factorization(g, sizes);
  if (!nf::verify_complete_factorization(g, f.blocks).pass()) {
    std::cerr << "internal: constructed blocks failed verification\n";
    return 2;
  }
  const std::string line = nf::factorization_to_json(f);
  std::cout << line << "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    out << line << "\n";
    if (!out) nf::raise(nf::Errc::IoError, "cannot write " + output);
  }
  return 0;
}

int run_verify(const std::string& spec, const std::string& path, bool plain) {
  nf::GroupTable g = nf::parse_group_spec(spec);
  nf::CompleteFactorization f = nf::read_factorization_json(path);
  nf::VerifyReport report = plain ? nf::verify_factorization(g, f.blocks)
                                  : nf::verify_complete_factorization(g, f.blocks);
  std::cout << nf::verify_report_to_json(report) << "\n";
  return report.pass() ? 0 : 1;
}

int run_search(const std::string& spec, const std::vector<int>& sizes,
               const std::string& mode, long long budget_nodes, double budget_secs,
               int threads, bool canonical, bool no_canonical) {
  nf::GroupTable g = nf::parse_group_spec(spec);
  nf::SearchProblem problem;
  problem.group = &g;
  problem.sizes = sizes;
  if (mode == "count-all")
    problem.mode = nf::SearchMode::CountAll;
  else if (mode == "exists-only")
    problem.mode = nf::SearchMode::ExistsOnly;
  else
    problem.mode = nf::SearchMode::FirstWitness;
  problem.limits.max_nodes = budget_nodes;
  problem.limits.max_seconds = budget_secs;
  problem.threads = threads;
  if (canonical) problem.canonical_first_block = true;
  if (no_canonical) problem.canonical_first_block = false;

  nf::SearchOutcome outcome = nf::search_complete_factorization(problem);
  std::cout << nf::search_outcome_to_json(outcome) << "\n";
  switch (outcome.status) {
    case nf::SearchStatus::Found:
      return 0;
    case nf::SearchStatus::ExhaustedNotFound:
      return 1;
    case nf::SearchStatus::BudgetExceeded:
      return 4;
  }
  return 2;
}

/// Both worked examples feed fixed textbook choices through the block
/// assembly instead of the minimal-id defaults, so the printed sets match
/// the published ones symbol for symbol.
int run_examples(const std::string& which, int n) {
  if (n < 3) nf::raise(nf::Errc::InvalidArgument, "n must be at least 3");

  nf::GroupTable g = [&] {
    if (which == "z2n") return nf::make_abelian(std::vector<int>(n, 2));
    return nf::make_cyclic(static_cast<int>(pow10_checked(n)));
  }();

  nf::SubgroupChain chain;
  nf::ChainChoices choices;
  if (which == "z2n") {
    // Basis vector e_i is id 2^(n-i); H_i spans e_1..e_i, so its ids are the
    // multiples of 2^(n-i).
    chain.sizes.assign(n, 2);
    for (int i = 1; i <= n; ++i) {
      std::vector<int> ids;
      ids.reserve(1 << i);
      for (int v = 0; v < (1 << n); v += 1 << (n - i)) ids.push_back(v);
      chain.subgroups.push_back(nf::Subgroup{nf::ElementSet(std::move(ids))});
    }
    choices = nf::default_chain_choices(g, chain);
    for (int i = 2; i <= n - 1; ++i) choices.shifts[i - 2] = 1 << (n - i - 1);  // e_{i+1}
    choices.t_prime = 1 << (n - 2);                                            // e_2
    choices.s_prime = (1 << (n - 1)) + 1;                                      // e_1+e_n
  } else {
    chain = nf::subgroup_chain_for_orders(g, std::vector<int>(n, 10));
    choices = nf::default_chain_choices(g, chain);
    for (int i = 2; i <= n - 1; ++i)
      choices.shifts[i - 2] = static_cast<int>(pow10_checked(n - i - 1));
    choices.t_prime = static_cast<int>(pow10_checked(n - 2));
    choices.s_prime = 101;
  }

  nf::CompleteFactorization f = nf::assemble_blocks(g, chain, choices);
  if (!nf::verify_complete_factorization(g, f.blocks).pass()) {
    std::cerr << "internal: example blocks failed verification\n";
    return 2;
  }
  std::cout << nf::factorization_to_json(f) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("NILFACTOR_MAX_ORDER")) {
    const std::string text(env);
    long long cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || ptr != text.data() + text.size() || cap < 1 ||
        cap > std::numeric_limits<int>::max()) {
      std::cerr << "NILFACTOR_MAX_ORDER must be a positive integer, got \"" << text
                << "\"\n";
      return 2;
    }
    nf::set_max_group_order(static_cast<int>(cap));
  }

  CLI::App app{"complete factorizations of finite nilpotent groups"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand(
      "construct", "build and self-verify a complete factorization");
  std::string construct_group;
  std::vector<int> construct_sizes;
  std::string construct_output;
  construct->add_option("--group", construct_group, "group spec expression")->required();
  construct->add_option("--sizes", construct_sizes, "block sizes, e.g. 2,2,3")
      ->required()
      ->delimiter(',');
  construct->add_option("--output", construct_output,
                        "also write the factorization JSON to this file");

  auto* verify =
      app.add_subcommand("verify", "verify a factorization JSON file against a group");
  std::string verify_group;
  std::string verify_path;
  bool verify_complete = false;
  bool verify_plain = false;
  verify->add_option("--group", verify_group, "group spec expression")->required();
  verify->add_option("--factorization", verify_path, "factorization JSON path")
      ->required();
  auto* complete_flag = verify->add_flag("--complete", verify_complete,
                                         "require pairwise disjointness (default)");
  auto* plain_flag = verify->add_flag("--plain", verify_plain,
                                      "plain k-factorization, no disjointness");
  complete_flag->excludes(plain_flag);
  plain_flag->excludes(complete_flag);

  auto* search = app.add_subcommand(
      "search", "exhaustive backtracking search for complete factorizations");
  std::string search_group;
  std::vector<int> search_sizes;
  std::string search_mode = "first-witness";
  nf::SearchLimits default_limits;
  long long budget_nodes = default_limits.max_nodes;
  double budget_secs = default_limits.max_seconds;
  int threads = 1;
  bool canonical = false;
  bool no_canonical = false;
  search->add_option("--group", search_group, "group spec expression")->required();
  search->add_option("--sizes", search_sizes, "block sizes, e.g. 2,2,3")
      ->required()
      ->delimiter(',');
  search->add_option("--mode", search_mode, "first-witness | count-all | exists-only")
      ->check(CLI::IsMember({"first-witness", "count-all", "exists-only"}));
  search->add_option("--budget-nodes", budget_nodes, "node budget (default 1e8)");
  search->add_option("--budget-secs", budget_secs,
                     "time budget in seconds, <= 0 disables (default 60)");
  search->add_option("--threads", threads, "worker threads (default 1)");
  auto* canon_flag = search->add_flag("--canonical-first-block", canonical,
                                      "explore the first block small-order-first");
  auto* no_canon_flag = search->add_flag("--no-canonical-first-block", no_canonical,
                                         "plain ascending-id exploration");
  canon_flag->excludes(no_canon_flag);
  no_canon_flag->excludes(canon_flag);

  auto* examples =
      app.add_subcommand("examples", "regenerate the worked factorization examples");
  std::string examples_which;
  int examples_n = 0;
  examples->add_option("which", examples_which, "z2n | z10n")
      ->required()
      ->check(CLI::IsMember({"z2n", "z10n"}));
  examples->add_option("n", examples_n, "number of blocks (>= 3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed())
      return run_construct(construct_group, construct_sizes, construct_output);
    if (verify->parsed()) return run_verify(verify_group, verify_path, verify_plain);
    if (search->parsed())
      return run_search(search_group, search_sizes, search_mode, budget_nodes,
                        budget_secs, threads, canonical, no_canonical);
    if (examples->parsed()) return run_examples(examples_which, examples_n);
  } catch (const nf::GroupError& e) {
    std::cerr << e.what() << "\n";
    return e.code() == nf::Errc::IoError ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
