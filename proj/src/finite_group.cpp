#include "gradalg/finite_group.hpp"

#include "gradalg/error.hpp"

#include <algorithm>
#include <numeric>

namespace gradalg {

GroupTableCheck group_check(std::size_t order, const std::vector<std::size_t>& table,
                            std::size_t identity) {
  auto fail = [](std::string msg) { return GroupTableCheck{false, std::move(msg)}; };
  if (order == 0) return fail("a group has at least one element");
  if (table.size() != order * order) return fail("table size is not order^2");
  if (identity >= order) return fail("identity index out of range");
  for (auto x : table)
    if (x >= order) return fail("table entry out of range");
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  for (std::size_t a = 0; a < order; ++a)
    if (mul(identity, a) != a || mul(a, identity) != a)
      return fail("identity fails at element " + std::to_string(a));
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order && !found; ++b)
      found = mul(a, b) == identity && mul(b, a) == identity;
    if (!found) return fail("element " + std::to_string(a) + " has no two-sided inverse");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return fail("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                      ", " + std::to_string(c) + ")");
  return {};
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::size_t> table, std::size_t identity,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  if (auto check = group_check(order_, table_, identity_); !check.ok)
    throw InputError("invalid group table: " + check.message);
  if (labels_.empty())
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != order_) throw InputError("group label count does not match order");
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) inverse_[a] = b;
}

std::size_t FiniteGroup::pow(std::size_t a, long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  std::size_t r = identity_;
  for (long i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<std::size_t> FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::closure(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<std::size_t> frontier{identity_};
  in[identity_] = true;
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      std::size_t y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order_; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> FiniteGroup::generators() const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> sub = closure(gens);
  for (std::size_t x = 0; x < order_ && sub.size() < order_; ++x) {
    if (std::binary_search(sub.begin(), sub.end(), x)) continue;
    gens.push_back(x);
    sub = closure(gens);
  }
  return gens;
}

std::vector<std::size_t> FiniteGroup::commutator_subgroup() const {
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(comms);
}

std::size_t FiniteGroup::abelianization_order() const {
  return order_ / commutator_subgroup().size();
}

std::size_t FiniteGroup::abelianization_exponent() const {
  // exponent of G/[G,G] = lcm over g of the least k with g^k in [G,G]
  auto derived = commutator_subgroup();
  std::size_t exponent = 1;
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; !std::binary_search(derived.begin(), derived.end(), x); x = mul(x, a))
      ++k;
    exponent = std::lcm(exponent, k);
  }
  return exponent;
}

FiniteGroup make_cyclic(std::size_t n) {
  if (n < 1) throw InputError("cyclic group order must be at least 1");
  std::vector<std::size_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<std::size_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + g.label(a / k) + "," + h.label(a % k) + ")";
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = g.mul(a / k, b / k) * k + h.mul(a % k, b % k);
  }
  return FiniteGroup(n, std::move(table), g.identity() * k + h.identity(), std::move(labels));
}

namespace {

std::string cycle_notation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup make_symmetric(std::size_t n) {
  if (n < 1 || n > 4) throw InputError("make_symmetric supports 1 <= n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::size_t> table(order * order);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> q(n);
      for (std::size_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      table[a * order + b] = index_of(q);
    }
  }
  return FiniteGroup(order, std::move(table), 0, std::move(labels));
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  // r^i s^j * r^k s^l = r^(i + (-1)^j k) s^(j + l)
  const std::size_t order = 2 * n;
  std::vector<std::size_t> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t i = a % n, j = a / n;
    labels[a] = (i ? "r^" + std::to_string(i) : std::string()) + (j ? "s" : "");
    if (labels[a].empty()) labels[a] = "e";
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t k = b % n, l = b / n;
      std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
      table[a * order + b] = rot + n * ((j + l) % 2);
    }
  }
  return FiniteGroup(order, std::move(table), 0, std::move(labels));
}

std::vector<std::vector<std::size_t>> enumerate_hom_tables(const FiniteGroup& g,
                                                           const FiniteGroup& h,
                                                           std::size_t max_domain_order) {
  if (g.order() > max_domain_order)
    throw BudgetExceeded("hom enumeration budget: |G| = " + std::to_string(g.order()) + " > " +
                         std::to_string(max_domain_order));
  const auto gens = g.generators();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> gen_images(gens.size());

  // Propagates images through the subgroup generated by the first `k`
  // generators; false on a conflict.
  auto propagate = [&](std::size_t k, std::vector<std::size_t>& image) {
    std::fill(image.begin(), image.end(), kUnset);
    image[g.identity()] = h.identity();
    std::vector<std::size_t> frontier{g.identity()};
    while (!frontier.empty()) {
      std::size_t x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t y = g.mul(x, gens[i]);
        std::size_t hy = h.mul(image[x], gen_images[i]);
        if (image[y] == kUnset) {
          image[y] = hy;
          frontier.push_back(y);
        } else if (image[y] != hy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<std::size_t> image(g.order());
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (!propagate(k, image)) return;
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
          if (image[g.mul(a, b)] != h.mul(image[a], image[b])) return;
      out.push_back(image);
      return;
    }
    const std::size_t ord = g.element_order(gens[k]);
    for (std::size_t y = 0; y < h.order(); ++y) {
      if (ord % h.element_order(y) != 0) continue;
      gen_images[k] = y;
      if (propagate(k + 1, image)) self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace gradalg
