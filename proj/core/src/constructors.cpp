#include "nilfactor/constructors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <utility>

namespace nilfactor {

namespace {

std::atomic<int> g_max_order{kDefaultMaxGroupOrder};

void check_order_cap(long long order, const char* what) {
  if (order > g_max_order.load()) {
    std::ostringstream msg;
    msg << what << " would have order " << order << ", above the cap " << g_max_order.load();
    raise(Errc::GroupTooLarge, msg.str());
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int max_group_order() { return g_max_order.load(); }

void set_max_group_order(int cap) {
  g_max_order.store(std::max(cap, 1));
}

GroupTable make_cyclic(int n) {
  if (n <= 0) raise(Errc::InvalidOrder, "cyclic group order must be >= 1");
  check_order_cap(n, "cyclic group");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return GroupTable::from_trusted_table(n, std::move(t));
}

GroupTable make_abelian(const std::vector<int>& invariant_factors) {
  long long order = 1;
  for (int f : invariant_factors) {
    if (f < 2) raise(Errc::InvalidOrder, "abelian invariant factors must be >= 2");
    order *= f;
    check_order_cap(order, "abelian group");
  }
  const int n = static_cast<int>(order);
  const int m = static_cast<int>(invariant_factors.size());

  // Component vectors in mixed radix, first factor most significant.
  std::vector<int> digits(static_cast<std::size_t>(n) * m);
  for (int id = 0; id < n; ++id) {
    int rest = id;
    for (int i = m - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(id) * m + i] = rest % invariant_factors[i];
      rest /= invariant_factors[i];
    }
  }
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int* da = digits.data() + static_cast<std::size_t>(a) * m;
    for (int b = 0; b < n; ++b) {
      const int* db = digits.data() + static_cast<std::size_t>(b) * m;
      int id = 0;
      for (int i = 0; i < m; ++i)
        id = id * invariant_factors[i] + (da[i] + db[i]) % invariant_factors[i];
      t[static_cast<std::size_t>(a) * n + b] = id;
    }
  }
  return GroupTable::from_trusted_table(n, std::move(t));
}

GroupTable make_direct_product(const GroupTable& a, const GroupTable& b) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  check_order_cap(order, "direct product");
  const int na = a.order(), nb = b.order(), n = static_cast<int>(order);
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int xa = 0; xa < na; ++xa)
    for (int xb = 0; xb < nb; ++xb) {
      const int x = xa * nb + xb;
      for (int ya = 0; ya < na; ++ya)
        for (int yb = 0; yb < nb; ++yb)
          t[static_cast<std::size_t>(x) * n + (ya * nb + yb)] =
              a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels()) {
    labels.reserve(n);
    for (int xa = 0; xa < na; ++xa)
      for (int xb = 0; xb < nb; ++xb)
        labels.push_back("(" + a.labels()[xa] + "," + b.labels()[xb] + ")");
  }
  return GroupTable::from_trusted_table(n, std::move(t), std::move(labels));
}

GroupTable make_dihedral(int m) {
  if (m < 1) raise(Errc::InvalidOrder, "dihedral parameter must be >= 1");
  const long long order = 2LL * m;
  check_order_cap(order, "dihedral group");
  const int n = static_cast<int>(order);
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  auto rot = [m](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t[static_cast<std::size_t>(i) * n + j] = rot(i + j);             // r^i r^j
      t[static_cast<std::size_t>(i) * n + (m + j)] = m + rot(j - i);   // r^i (s r^j)
      t[static_cast<std::size_t>(m + i) * n + j] = m + rot(i + j);     // (s r^i) r^j
      t[static_cast<std::size_t>(m + i) * n + (m + j)] = rot(j - i);   // (s r^i)(s r^j)
    }
  }
  return GroupTable::from_trusted_table(n, std::move(t));
}

GroupTable make_quaternion() {
  // ids: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
  // basis products over {1, i, j, k} with sign
  static constexpr int basis[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  static constexpr int neg[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 1, 1, 0},
      {0, 0, 1, 1},
  };
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int bx = x / 2, sx = x % 2, by = y / 2, sy = y % 2;
      const int bz = basis[bx][by];
      const int sz = sx ^ sy ^ neg[bx][by];
      t[static_cast<std::size_t>(x) * 8 + y] = bz * 2 + sz;
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable::from_trusted_table(8, std::move(t), std::move(labels));
}

GroupTable make_heisenberg(int p) {
  if (!is_prime(p)) raise(Errc::InvalidOrder, "heisenberg parameter must be prime");
  const long long order = static_cast<long long>(p) * p * p;
  check_order_cap(order, "heisenberg group");
  const int n = static_cast<int>(order);
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1) {
        const int x = (a1 * p + b1) * p + c1;
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2) {
              const int y = (a2 * p + b2) * p + c2;
              const int a = (a1 + a2) % p;
              const int b = (b1 + b2) % p;
              const int c = (c1 + c2 + a1 * b2) % p;
              t[static_cast<std::size_t>(x) * n + y] = (a * p + b) * p + c;
            }
      }
  return GroupTable::from_trusted_table(n, std::move(t));
}

GroupTable make_from_permutations(int degree, const std::vector<Permutation>& generators) {
  if (degree < 0) raise(Errc::InvalidPermutation, "degree must be nonnegative");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const Permutation& p = generators[gi];
    if (static_cast<int>(p.size()) != degree)
      raise(Errc::InvalidPermutation, "generator " + std::to_string(gi) + " has wrong length");
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v])
        raise(Errc::InvalidPermutation, "generator " + std::to_string(gi) + " is not a bijection");
      hit[v] = 1;
    }
  }

  Permutation identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  auto compose = [degree](const Permutation& a, const Permutation& b) {
    // (a * b)(x) = a(b(x))
    Permutation out(degree);
    for (int x = 0; x < degree; ++x) out[x] = a[b[x]];
    return out;
  };

  // Breadth-first closure under right multiplication by the generators.
  std::map<Permutation, int> ids;
  std::vector<Permutation> elems;
  ids.emplace(identity, 0);
  elems.push_back(identity);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Permutation cur = elems[head];
    for (const Permutation& gen : generators) {
      Permutation next = compose(cur, gen);
      if (ids.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        check_order_cap(static_cast<long long>(elems.size()), "permutation group closure");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = ids.at(compose(elems[a], elems[b]));
  return GroupTable::from_trusted_table(n, std::move(t));
}

GroupTable make_from_table(int order, const std::vector<std::vector<int>>& table,
                           int assoc_check_bound, std::vector<std::string> labels) {
  if (order <= 0) raise(Errc::NotAGroup, "order must be positive");
  check_order_cap(order, "group from table");
  if (static_cast<int>(table.size()) != order)
    raise(Errc::NotAGroup, "table has wrong number of rows");
  if (!labels.empty() && static_cast<int>(labels.size()) != order)
    raise(Errc::NotAGroup, "labels list does not match the order");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    if (static_cast<int>(table[r].size()) != order)
      raise(Errc::NotAGroup, "row " + std::to_string(r) + " has wrong length");
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }

  TableValidation v = validate_raw_table(order, flat, assoc_check_bound);
  if (!v.ok) raise(Errc::NotAGroup, v.failure);

  int identity = 0;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = flat[static_cast<std::size_t>(e) * order + x] == x &&
           flat[static_cast<std::size_t>(x) * order + e] == x;
    if (ok) {
      identity = e;
      break;
    }
  }

  if (identity != 0) {
    // Relabel by the transposition 0 <-> identity.
    auto relabel = [identity](int x) {
      if (x == 0) return identity;
      if (x == identity) return 0;
      return x;
    };
    std::vector<int> fixed(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        fixed[static_cast<std::size_t>(relabel(a)) * order + relabel(b)] =
            relabel(flat[static_cast<std::size_t>(a) * order + b]);
    flat = std::move(fixed);
    if (!labels.empty()) std::swap(labels[0], labels[identity]);
  }

  GroupTable g = GroupTable::from_trusted_table(order, std::move(flat), std::move(labels));
  g.partially_validated_ = !v.associativity_exhaustive;
  return g;
}

}  // namespace nilfactor
