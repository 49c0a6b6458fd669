#include "nilfactor/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nilfactor {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::ChainStepFailed: return "ChainStepFailed";
    case Errc::SizesMismatch: return "SizesMismatch";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::NormalizerTrivial: return "NormalizerTrivial";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

ElementSet::ElementSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ElementSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool ElementSet::disjoint_with(const ElementSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return false;
    }
  }
  return true;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

ElementSet ElementSet::union_with(const ElementSet& other) const {
  std::vector<int> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  ElementSet result;
  result.ids_ = std::move(out);  // already sorted unique
  return result;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<int> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
  ElementSet result;
  result.ids_ = std::move(out);
  return result;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  std::vector<int> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  ElementSet result;
  result.ids_ = std::move(out);
  return result;
}

int ElementSet::min() const {
  if (ids_.empty()) raise(Errc::InvalidArgument, "min() of empty element set");
  return ids_.front();
}

GroupTable GroupTable::from_trusted_table(int order, std::vector<int> flat_table,
                                          std::vector<std::string> labels) {
  if (order <= 0) raise(Errc::InvalidOrder, "group order must be positive");
  if (flat_table.size() != static_cast<std::size_t>(order) * order)
    raise(Errc::NotAGroup, "table size does not match order");
  GroupTable g;
  g.n_ = order;
  g.table_ = std::move(flat_table);
  g.labels_ = std::move(labels);
  g.inverse_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    const int* row = g.table_.data() + static_cast<std::size_t>(a) * order;
    int found = -1;
    for (int x = 0; x < order; ++x) {
      if (row[x] == 0) {
        found = x;
        break;
      }
    }
    if (found < 0) {
      std::ostringstream msg;
      msg << "row " << a << " has no inverse";
      raise(Errc::NotAGroup, msg.str());
    }
    g.inverse_[a] = found;
  }
  return g;
}

ElementSet GroupTable::all_elements() const {
  std::vector<int> ids(n_);
  for (int i = 0; i < n_; ++i) ids[i] = i;
  return ElementSet(std::move(ids));
}

int power(const GroupTable& g, int x, long long e) {
  if (e < 0) return power(g, g.inv(x), -e);
  int result = 0;
  int base = x;
  while (e > 0) {
    if (e & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return result;
}

int element_order(const GroupTable& g, int x) {
  // ord(x) divides |G|, so start from |G| and strip every prime that keeps
  // the power at the identity. O(log|G|) multiplications instead of walking
  // the whole cycle, which matters once tables stop fitting in cache.
  int t = g.order();
  int n = t;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    while (t % p == 0 && power(g, x, t / p) == 0) t /= p;
  }
  if (n > 1)
    while (t % n == 0 && power(g, x, t / n) == 0) t /= n;
  return t;
}

ElementSet multiply_sets(const GroupTable& g, const ElementSet& lhs, const ElementSet& rhs) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> out;
  out.reserve(std::min<std::size_t>(static_cast<std::size_t>(lhs.size()) * rhs.size(),
                                    static_cast<std::size_t>(g.order())));
  for (int a : lhs) {
    for (int b : rhs) {
      int p = g.mul(a, b);
      if (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return ElementSet(std::move(out));
}

ElementSet right_coset(const GroupTable& g, const ElementSet& h, int x) {
  std::vector<int> out;
  out.reserve(h.size());
  for (int a : h) out.push_back(g.mul(a, x));
  return ElementSet(std::move(out));
}

Subgroup generated_subgroup(const GroupTable& g, const ElementSet& seed) {
  std::vector<char> member(g.order(), 0);
  std::vector<int> elems;
  std::vector<int> queue;
  auto add = [&](int x) {
    if (!member[x]) {
      member[x] = 1;
      elems.push_back(x);
      queue.push_back(x);
    }
  };
  add(0);
  for (int x : seed) {
    if (x < 0 || x >= g.order()) raise(Errc::InvalidArgument, "seed element out of range");
    add(x);
  }
  // Closure under product suffices in a finite group: powers eventually
  // produce inverses and the identity.
  std::size_t head = 0;
  while (head < queue.size()) {
    int u = queue[head++];
    for (std::size_t i = 0; i < elems.size(); ++i) {
      int v = elems[i];
      add(g.mul(u, v));
      add(g.mul(v, u));
    }
  }
  return Subgroup{ElementSet(std::move(elems))};
}

Subgroup trivial_subgroup() { return Subgroup{ElementSet::singleton(0)}; }

Subgroup whole_group(const GroupTable& g) { return Subgroup{g.all_elements()}; }

bool is_subgroup(const GroupTable& g, const ElementSet& set) {
  if (!set.contains(0)) return false;
  for (int a : set)
    for (int b : set)
      if (!set.contains(g.mul(a, b))) return false;
  return true;
}

Subgroup normalizer(const GroupTable& g, const Subgroup& h, const Subgroup& ambient) {
  if (!h.elements.subset_of(ambient.elements))
    raise(Errc::InvalidArgument, "normalizer: h is not contained in ambient");
  std::vector<char> in_h(g.order(), 0);
  for (int a : h.elements) in_h[a] = 1;
  std::vector<int> out;
  for (int x : ambient.elements) {
    int xi = g.inv(x);
    bool fixes = true;
    for (int a : h.elements) {
      if (!in_h[g.mul(g.mul(xi, a), x)]) {
        fixes = false;
        break;
      }
    }
    // x^-1 h x has |h| elements, so containment in h already forces equality.
    if (fixes) out.push_back(x);
  }
  return Subgroup{ElementSet(std::move(out))};
}

ElementSet right_transversal(const GroupTable& g, const Subgroup& h, const Subgroup& ambient) {
  if (!h.elements.subset_of(ambient.elements))
    raise(Errc::InvalidArgument, "right_transversal: h is not contained in ambient");
  if (ambient.order() % h.order() != 0)
    raise(Errc::InvalidArgument, "right_transversal: |h| does not divide |ambient|");
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  reps.reserve(ambient.order() / h.order());
  // Ascending scan makes each representative the minimal id of its coset;
  // the subgroup's own coset therefore gets the identity.
  for (int x : ambient.elements) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int a : h.elements) covered[g.mul(a, x)] = 1;
  }
  return ElementSet(std::move(reps));
}

namespace {

bool check_latin(int n, const std::vector<int>& t, std::string& failure) {
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) {
        std::ostringstream msg;
        msg << "row " << r << " is not a permutation (value " << v << " repeats)";
        failure = msg.str();
        return false;
      }
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = t[static_cast<std::size_t>(r) * n + c];
      if (seen[v]) {
        std::ostringstream msg;
        msg << "column " << c << " is not a permutation (value " << v << " repeats)";
        failure = msg.str();
        return false;
      }
      seen[v] = 1;
    }
  }
  return true;
}

}  // namespace

TableValidation validate_raw_table(int order, const std::vector<int>& t, int assoc_bound) {
  TableValidation result;
  const int n = order;
  if (n <= 0) {
    result.failure = "order must be positive";
    return result;
  }
  if (t.size() != static_cast<std::size_t>(n) * n) {
    result.failure = "table size does not match order";
    return result;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= n) {
      std::ostringstream msg;
      msg << "entry at row " << (i / n) << ", column " << (i % n) << " is out of range";
      result.failure = msg.str();
      return result;
    }
  }
  if (!check_latin(n, t, result.failure)) return result;

  // Identity: a row that acts as the identity from both sides.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[static_cast<std::size_t>(e) * n + x] == x && t[static_cast<std::size_t>(x) * n + e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    result.failure = "no two-sided identity element";
    return result;
  }

  for (int a = 0; a < n; ++a) {
    int right = -1;
    for (int x = 0; x < n; ++x) {
      if (t[static_cast<std::size_t>(a) * n + x] == identity) {
        right = x;
        break;
      }
    }
    if (right < 0 || t[static_cast<std::size_t>(right) * n + a] != identity) {
      std::ostringstream msg;
      msg << "element " << a << " has no two-sided inverse";
      result.failure = msg.str();
      return result;
    }
  }

  auto assoc_fails = [&](int a, int b, int c) {
    int ab = t[static_cast<std::size_t>(a) * n + b];
    int bc = t[static_cast<std::size_t>(b) * n + c];
    return t[static_cast<std::size_t>(ab) * n + c] != t[static_cast<std::size_t>(a) * n + bc];
  };

  if (n <= assoc_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (assoc_fails(a, b, c)) {
            std::ostringstream msg;
            msg << "associativity fails at triple (" << a << ", " << b << ", " << c << ")";
            result.failure = msg.str();
            return result;
          }
    result.associativity_exhaustive = true;
  } else {
    // Too large for the O(n^3) sweep; sample triples deterministically.
    std::mt19937 rng(0x6e696c66u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const std::uint64_t samples =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(n) * n, 500000);
    for (std::uint64_t i = 0; i < samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (assoc_fails(a, b, c)) {
        std::ostringstream msg;
        msg << "associativity fails at triple (" << a << ", " << b << ", " << c << ")";
        result.failure = msg.str();
        return result;
      }
    }
    result.associativity_exhaustive = false;
  }

  result.ok = true;
  return result;
}

}  // namespace nilfactor
