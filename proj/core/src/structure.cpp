#include "nilfactor/structure.hpp"

#include <algorithm>
#include <sstream>

namespace nilfactor {

namespace {

/// Elements of g whose order is a power of p (includes the identity).
/// ord(x) is a p-power exactly when x^(p^v) = e for p^v the p-part of |G|.
std::vector<int> p_power_order_elements(const GroupTable& g, int p) {
  long long p_part = 1;
  for (int n = g.order(); n % p == 0; n /= p) p_part *= p;
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (power(g, x, p_part) == 0) out.push_back(x);
  return out;
}

bool product_closed(const GroupTable& g, const std::vector<int>& sorted_elems) {
  for (int a : sorted_elems)
    for (int b : sorted_elems)
      if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), g.mul(a, b)))
        return false;
  return true;
}

}  // namespace

std::vector<std::pair<int, int>> prime_factorize(int n) {
  if (n < 1) raise(Errc::InvalidOrder, "cannot factor " + std::to_string(n));
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_nilpotent(const GroupTable& g) {
  for (auto [p, e] : prime_factorize(g.order())) {
    std::vector<int> sp = p_power_order_elements(g, p);
    int p_part = 1;
    for (int i = 0; i < e; ++i) p_part *= p;
    if (static_cast<int>(sp.size()) != p_part) return false;
    if (p_part == g.order()) continue;  // p-group: the whole group is closed
    if (!product_closed(g, sp)) return false;
  }
  return true;
}

const SylowComponent* SylowDecomposition::find(int prime) const {
  for (const SylowComponent& c : components)
    if (c.prime == prime) return &c;
  return nullptr;
}

SylowDecomposition sylow_decomposition(const GroupTable& g) {
  SylowDecomposition out;
  for (auto [p, e] : prime_factorize(g.order())) {
    std::vector<int> sp = p_power_order_elements(g, p);
    int p_part = 1;
    for (int i = 0; i < e; ++i) p_part *= p;
    if (static_cast<int>(sp.size()) != p_part ||
        (p_part != g.order() && !product_closed(g, sp))) {
      raise(Errc::NotNilpotent,
            "elements of " + std::to_string(p) + "-power order do not form a subgroup");
    }
    out.components.push_back({p, e, Subgroup{ElementSet(std::move(sp))}});
  }
  return out;
}

std::vector<Subgroup> p_group_chain(const GroupTable& g, const Subgroup& p_component,
                                    int prime) {
  std::vector<Subgroup> chain;
  chain.push_back(trivial_subgroup());
  while (chain.back().order() < p_component.order()) {
    const Subgroup& q = chain.back();
    Subgroup norm = normalizer(g, q, p_component);
    // In a p-group a proper subgroup is strictly below its normalizer, so the
    // difference is nonempty; the set is ascending, so the first element
    // outside q is the minimal one.
    int y = -1;
    for (int x : norm.elements) {
      if (!q.contains(x)) {
        y = x;
        break;
      }
    }
    if (y < 0) raise(Errc::ChainStepFailed, "normalizer does not grow past the subgroup");
    while (!q.contains(power(g, y, prime))) y = power(g, y, prime);
    Subgroup next{
        generated_subgroup(g, q.elements.union_with(ElementSet::singleton(y))).elements};
    if (next.order() != prime * q.order())
      raise(Errc::ChainStepFailed, "adjoined element did not extend by index p");
    chain.push_back(std::move(next));
  }
  return chain;
}

SubgroupChain subgroup_chain_for_orders(const GroupTable& g,
                                        const std::vector<int>& sizes) {
  long long product = 1;
  for (int m : sizes) {
    if (m < 2) raise(Errc::SizeTooSmall, "every block size must be at least 2");
    product *= m;
    if (product > g.order()) break;
  }
  if (product != g.order()) {
    std::ostringstream msg;
    msg << "block sizes multiply to " << product << " but the group has order "
        << g.order();
    raise(Errc::SizesMismatch, msg.str());
  }

  SylowDecomposition sylow = sylow_decomposition(g);
  std::vector<std::vector<Subgroup>> p_chains;
  p_chains.reserve(sylow.components.size());
  for (const SylowComponent& c : sylow.components)
    p_chains.push_back(p_group_chain(g, c.subgroup, c.prime));

  SubgroupChain chain;
  chain.sizes = sizes;
  long long d = 1;
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
    d *= sizes[i];
    ElementSet h({0});
    for (std::size_t ci = 0; ci < sylow.components.size(); ++ci) {
      int a = 0;
      long long rest = d;
      while (rest % sylow.components[ci].prime == 0) {
        rest /= sylow.components[ci].prime;
        ++a;
      }
      if (a > 0) h = multiply_sets(g, h, p_chains[ci][a].elements);
    }
    if (static_cast<long long>(h.size()) != d)
      raise(Errc::ChainStepFailed, "stitched subgroup has the wrong order");
    chain.subgroups.push_back(Subgroup{std::move(h)});
  }
  return chain;
}

}  // namespace nilfactor
