#include "nilfactor/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace nilfactor {

namespace {

using Clock = std::chrono::steady_clock;

class Bitset {
 public:
  explicit Bitset(int n) : words_(static_cast<std::size_t>(n + 63) / 64, 0) {}
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

 private:
  std::vector<std::uint64_t> words_;
};

struct Shared {
  const GroupTable* g = nullptr;
  std::vector<int> sizes;
  std::vector<int> still_needed;        // elements blocks b.. must still place
  std::vector<std::vector<int>> order;  // exploration order per block
  SearchMode mode = SearchMode::FirstWitness;
  long long max_nodes = 0;
  bool has_deadline = false;
  Clock::time_point deadline;
  int split = 1;  // workers stride through the very first placement

  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> cutoff{false};
  std::atomic<bool> found{false};
  std::atomic<long long> count{0};
  std::mutex witness_mu;
  std::optional<std::vector<ElementSet>> witness;
  std::mutex error_mu;
  std::exception_ptr error;
};

class Worker {
 public:
  Worker(Shared& sh, int id)
      : sh_(sh),
        id_(id),
        k_(static_cast<int>(sh.sizes.size())),
        used_(sh.g->order()),
        partial_seen_(sh.g->order()),
        chosen_(sh.sizes.size()) {
    for (int b = 0; b < k_; ++b) chosen_[b].reserve(sh.sizes[b]);
    products_.resize(sh.sizes.size() + 1);
    products_[0].push_back(0);
  }

  void run() {
    place(0, 0, 0);
    sh_.nodes.fetch_add(local_nodes_);
    local_nodes_ = 0;
    sh_.count.fetch_add(local_count_);
    local_count_ = 0;
  }

 private:
  bool should_stop() {
    if (sh_.stop.load(std::memory_order_relaxed)) return true;
    ++local_nodes_;
    if (local_nodes_ % 1024 != 0) return false;
    sh_.nodes.fetch_add(1024);
    local_nodes_ -= 1024;
    if (sh_.nodes.load() >= sh_.max_nodes ||
        (sh_.has_deadline && Clock::now() >= sh_.deadline)) {
      sh_.cutoff.store(true);
      sh_.stop.store(true);
      return true;
    }
    return false;
  }

  void leaf() {
    std::vector<ElementSet> blocks;
    blocks.reserve(k_);
    for (const std::vector<int>& c : chosen_) blocks.push_back(ElementSet(c));
    // The incremental checks guarantee this; a failure would mean the search
    // itself is broken, which must not pass silently.
    if (!verify_complete_factorization(*sh_.g, blocks).pass())
      throw std::logic_error("search produced a non-factorization");

    switch (sh_.mode) {
      case SearchMode::CountAll:
        ++local_count_;
        break;
      case SearchMode::FirstWitness: {
        std::lock_guard<std::mutex> lock(sh_.witness_mu);
        if (!sh_.witness) sh_.witness = std::move(blocks);
        sh_.found.store(true);
        sh_.stop.store(true);
        break;
      }
      case SearchMode::ExistsOnly:
        sh_.found.store(true);
        sh_.stop.store(true);
        break;
    }
  }

  /// Fills position pos of block b, scanning sh_.order[b] from index `from`.
  void place(int b, int pos, std::size_t from) {
    // Disjointness alone caps what the remaining blocks can still take.
    if (sh_.g->order() - used_count_ < sh_.still_needed[b] - pos) return;
    if (pos == sh_.sizes[b]) {
      if (b + 1 == k_) {
        leaf();
        return;
      }
      // Stage products move up one level; the partial-product mask restarts
      // empty for the next block.
      for (int q : products_[b + 1]) partial_seen_.clear(q);
      place(b + 1, 0, 0);
      for (int q : products_[b + 1]) partial_seen_.set(q);
      return;
    }

    const std::vector<int>& ord = sh_.order[b];
    const std::size_t step = (b == 0 && pos == 0) ? sh_.split : 1;
    std::size_t idx = (b == 0 && pos == 0) ? static_cast<std::size_t>(id_) : from;
    for (; idx < ord.size(); idx += step) {
      if (should_stop()) return;
      const int y = ord[idx];
      if (used_.test(y)) continue;

      // Distinct stage products stay distinct after appending y, so only the
      // mask of products already formed at this stage can collide.
      const std::vector<int>& base = products_[b];
      bool clash = false;
      for (int p : base) {
        if (partial_seen_.test(sh_.g->mul(p, y))) {
          clash = true;
          break;
        }
      }
      if (clash) continue;

      used_.set(y);
      ++used_count_;
      chosen_[b].push_back(y);
      const std::size_t mark = products_[b + 1].size();
      for (int p : base) {
        const int q = sh_.g->mul(p, y);
        partial_seen_.set(q);
        products_[b + 1].push_back(q);
      }

      place(b, pos + 1, idx + 1);

      while (products_[b + 1].size() > mark) {
        partial_seen_.clear(products_[b + 1].back());
        products_[b + 1].pop_back();
      }
      chosen_[b].pop_back();
      used_.clear(y);
      --used_count_;
      if (sh_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  Shared& sh_;
  int id_;
  int k_;
  Bitset used_;
  Bitset partial_seen_;
  std::vector<std::vector<int>> chosen_;
  std::vector<std::vector<int>> products_;
  int used_count_ = 0;
  long long local_nodes_ = 0;
  long long local_count_ = 0;
};

}  // namespace

SearchOutcome search_complete_factorization(const SearchProblem& problem) {
  if (problem.group == nullptr)
    raise(Errc::InvalidArgument, "search needs a group");
  const GroupTable& g = *problem.group;
  if (problem.sizes.empty())
    raise(Errc::InvalidArgument, "search needs at least one block size");
  for (int m : problem.sizes)
    if (m < 1) raise(Errc::SizeTooSmall, "every block size must be at least 1");
  long long product = 1;
  for (int m : problem.sizes) {
    product *= m;
    if (product > g.order()) break;
  }
  if (product != g.order())
    raise(Errc::SizesMismatch, "block sizes do not multiply to the group order");

  Shared sh;
  sh.g = &g;
  sh.sizes = problem.sizes;
  sh.still_needed.assign(problem.sizes.size(), 0);
  for (int b = static_cast<int>(problem.sizes.size()) - 1; b >= 0; --b)
    sh.still_needed[b] =
        problem.sizes[b] +
        (b + 1 < static_cast<int>(problem.sizes.size()) ? sh.still_needed[b + 1] : 0);
  sh.mode = problem.mode;
  sh.max_nodes = std::max<long long>(problem.limits.max_nodes, 1);
  sh.has_deadline = problem.limits.max_seconds > 0;
  const Clock::time_point started = Clock::now();
  if (sh.has_deadline)
    sh.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(problem.limits.max_seconds));

  std::vector<int> ascending(g.order());
  for (int i = 0; i < g.order(); ++i) ascending[i] = i;
  sh.order.assign(problem.sizes.size(), ascending);
  const bool canonical = problem.canonical_first_block.value_or(
      problem.mode == SearchMode::ExistsOnly);
  if (canonical) {
    // Subgroup-seeking order for the first block: elements whose order
    // divides the block size first (a size-m block that extends to a
    // witness is often a subgroup, and subgroup members all satisfy
    // ord(x) | m), then by element order, then by id. A pure reordering of
    // the same candidate set — exhaustive results are unaffected.
    std::vector<int> orders(g.order());
    for (int i = 0; i < g.order(); ++i) orders[i] = element_order(g, i);
    const int m1 = problem.sizes[0];
    auto key = [&](int x) { return std::pair(m1 % orders[x] != 0, orders[x]); };
    std::stable_sort(sh.order[0].begin(), sh.order[0].end(),
                     [&key](int a, int b) { return key(a) < key(b); });
  }

  int threads = std::clamp(problem.threads, 1, 64);
  threads = std::min<int>(threads, std::max(1, g.order()));
  sh.split = threads;

  if (threads == 1) {
    Worker(sh, 0).run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&sh, w] {
        try {
          Worker(sh, w).run();
        } catch (...) {
          std::lock_guard<std::mutex> lock(sh.error_mu);
          if (!sh.error) sh.error = std::current_exception();
          sh.stop.store(true);
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (sh.error) std::rethrow_exception(sh.error);
  }

  SearchOutcome out;
  out.nodes_explored = sh.nodes.load();
  out.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();

  if (problem.mode == SearchMode::CountAll) {
    out.count = sh.count.load();
    if (sh.cutoff.load())
      out.status = SearchStatus::BudgetExceeded;
    else
      out.status = *out.count > 0 ? SearchStatus::Found
                                  : SearchStatus::ExhaustedNotFound;
  } else if (sh.found.load()) {
    out.status = SearchStatus::Found;
    if (problem.mode == SearchMode::FirstWitness) {
      std::lock_guard<std::mutex> lock(sh.witness_mu);
      out.witness = std::move(sh.witness);
    }
  } else {
    out.status = sh.cutoff.load() ? SearchStatus::BudgetExceeded
                                  : SearchStatus::ExhaustedNotFound;
  }
  return out;
}

bool cross_check(const GroupTable& g, const std::vector<int>& sizes,
                 const SearchLimits& limits) {
  CompleteFactorization built = construct_complete_factorization(g, sizes);
  if (!verify_complete_factorization(g, built.blocks).pass()) return false;

  SearchProblem problem;
  problem.group = &g;
  problem.sizes = sizes;
  problem.mode = SearchMode::ExistsOnly;
  problem.limits = limits;
  return search_complete_factorization(problem).status == SearchStatus::Found;
}

}  // namespace nilfactor
