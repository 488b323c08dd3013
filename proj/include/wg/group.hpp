#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wg {

using GroupElement = std::uint32_t;

/// A finite group on the index set {0, ..., order-1} with string labels.
///
/// Small groups carry an explicit Cayley table. Larger ones (e.g. GL(3,3),
/// order 11232) keep a multiplication callback and only materialize the
/// table on request.
class FiniteGroup {
public:
  using MulFn = std::function<GroupElement(GroupElement, GroupElement)>;

  /// The trivial group.
  FiniteGroup();

  /// Row-major table: table[a * order + b] = a * b. Not validated; call
  /// validate() for untrusted input.
  static FiniteGroup from_table(std::vector<std::string> labels, std::vector<GroupElement> table);
  static FiniteGroup from_function(std::vector<std::string> labels, MulFn mul);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return labels_->size(); }
  GroupElement identity() const { return identity_; }
  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const { return (*inverse_)[a]; }
  const std::string &label(GroupElement a) const { return (*labels_)[a]; }
  const std::vector<std::string> &labels() const { return *labels_; }
  std::optional<GroupElement> find(const std::string &label) const;

  bool has_table() const { return table_ != nullptr; }
  /// Full Cayley table; throws CapacityError beyond table_budget().
  std::vector<GroupElement> table() const;

  /// First violated group axiom (closure, identity, inverses,
  /// associativity), or nullopt.
  std::optional<std::string> validate() const;

  /// Order of the cyclic subgroup generated by a.
  std::size_t element_order(GroupElement a) const;

private:
  void finish();

  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::vector<GroupElement>> table_;
  std::shared_ptr<const MulFn> mul_;
  std::shared_ptr<const std::vector<GroupElement>> inverse_;
  GroupElement identity_ = 0;
};

/// Checks that `phi` (indexed by elements of a) is an isomorphism a -> b.
bool is_group_isomorphism(const FiniteGroup &a, const FiniteGroup &b, const std::vector<GroupElement> &phi);

} // namespace wg
