#include "wg/group.hpp"

#include <unordered_map>

#include "wg/config.hpp"
#include "wg/error.hpp"

namespace wg {

FiniteGroup::FiniteGroup()
    : labels_(std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"1"})),
      table_(std::make_shared<const std::vector<GroupElement>>(std::vector<GroupElement>{0})),
      inverse_(std::make_shared<const std::vector<GroupElement>>(std::vector<GroupElement>{0})) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels, std::vector<GroupElement> table) {
  const std::size_t n = labels.size();
  if (n == 0)
    throw ValidationError("a group needs at least one element");
  if (table.size() != n * n)
    throw ValidationError("multiplication table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(n * n));
  for (GroupElement x : table)
    if (x >= n)
      throw ValidationError("multiplication table entry " + std::to_string(x) + " out of range");
  FiniteGroup g;
  g.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  g.table_ = std::make_shared<const std::vector<GroupElement>>(std::move(table));
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_function(std::vector<std::string> labels, MulFn mul) {
  if (labels.empty())
    throw ValidationError("a group needs at least one element");
  FiniteGroup g;
  g.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  g.table_.reset();
  g.mul_ = std::make_shared<const MulFn>(std::move(mul));
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  const std::size_t n = order();
  // The identity is the unique idempotent of a group.
  std::optional<GroupElement> id;
  for (GroupElement e = 0; e < n && !id; ++e)
    if (mul(e, e) == e)
      id = e;
  if (id) {
    for (GroupElement a = 0; a < n; ++a)
      if (mul(*id, a) != a || mul(a, *id) != a) {
        id.reset();
        break;
      }
  }
  if (!id)
    throw ValidationError("multiplication has no identity element");
  identity_ = *id;
  std::vector<GroupElement> inv(n, static_cast<GroupElement>(n));
  for (GroupElement a = 0; a < n; ++a) {
    if (inv[a] != n)
      continue;
    // Walk the cyclic subgroup of a; a^(k-1) is the inverse of a.
    GroupElement prev = identity_, cur = a;
    std::size_t steps = 0;
    while (cur != identity_) {
      prev = cur;
      cur = mul(cur, a);
      if (++steps > n)
        throw ValidationError("element " + (*labels_)[a] + " has no inverse");
    }
    inv[a] = prev;
    inv[prev] = a;
  }
  inverse_ = std::make_shared<const std::vector<GroupElement>>(std::move(inv));
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<GroupElement> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<GroupElement>((a + b) % n);
  }
  return from_table(std::move(labels), std::move(table));
}

GroupElement FiniteGroup::mul(GroupElement a, GroupElement b) const {
  if (table_)
    return (*table_)[static_cast<std::size_t>(a) * order() + b];
  return (*mul_)(a, b);
}

std::optional<GroupElement> FiniteGroup::find(const std::string &label) const {
  for (GroupElement a = 0; a < order(); ++a)
    if ((*labels_)[a] == label)
      return a;
  return std::nullopt;
}

std::vector<GroupElement> FiniteGroup::table() const {
  if (table_)
    return *table_;
  const std::size_t n = order();
  if (n * n > table_budget())
    throw CapacityError("Cayley table of a group of order " + std::to_string(n) + " exceeds the table budget");
  std::vector<GroupElement> t(n * n);
  for (GroupElement a = 0; a < n; ++a)
    for (GroupElement b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return t;
}

std::optional<std::string> FiniteGroup::validate() const {
  const std::size_t n = order();
  for (GroupElement a = 0; a < n; ++a) {
    if (mul(a, inverse(a)) != identity_ || mul(inverse(a), a) != identity_)
      return "inverse law fails for " + label(a);
    for (GroupElement b = 0; b < n; ++b)
      if (mul(a, b) >= n)
        return "product " + label(a) + "*" + label(b) + " out of range";
  }
  for (GroupElement a = 0; a < n; ++a)
    for (GroupElement b = 0; b < n; ++b) {
      const GroupElement ab = mul(a, b);
      for (GroupElement c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          return "associativity fails for (" + label(a) + "," + label(b) + "," + label(c) + ")";
    }
  return std::nullopt;
}

std::size_t FiniteGroup::element_order(GroupElement a) const {
  std::size_t k = 1;
  for (GroupElement cur = a; cur != identity_; cur = mul(cur, a))
    ++k;
  return k;
}

bool is_group_isomorphism(const FiniteGroup &a, const FiniteGroup &b, const std::vector<GroupElement> &phi) {
  if (a.order() != b.order() || phi.size() != a.order())
    return false;
  std::vector<bool> hit(b.order(), false);
  for (GroupElement x : phi) {
    if (x >= b.order() || hit[x])
      return false;
    hit[x] = true;
  }
  for (GroupElement x = 0; x < a.order(); ++x)
    for (GroupElement y = 0; y < a.order(); ++y)
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y]))
        return false;
  return true;
}

} // namespace wg
