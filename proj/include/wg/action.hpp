#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wg/building.hpp"
#include "wg/group.hpp"
#include "wg/linear.hpp"

namespace wg {

enum class ActionFault { size_mismatch, not_a_permutation, identity_law, compatibility, not_type_preserving };

const char *to_string(ActionFault fault);

class ActionError : public ValidationError {
public:
  ActionError(ActionFault fault, const std::string &message, std::vector<std::string> witnesses = {});
  ActionFault fault() const { return fault_; }
  const std::vector<std::string> &witnesses() const { return witnesses_; }

private:
  ActionFault fault_;
  std::vector<std::string> witnesses_;
};

using ChamberPermutation = std::vector<std::uint32_t>;

/// A finite group acting on the chambers of a building by
/// distance-preserving permutations.
class ChamberAction {
public:
  /// Checks bijectivity, the identity and compatibility laws
  /// (|G|^2 |chambers| products) and type preservation (|G| |chambers|^2).
  static ChamberAction make(std::shared_ptr<const Building> building, FiniteGroup group,
                            std::vector<ChamberPermutation> perms);
  /// Only sizes and bijectivity are checked.
  static ChamberAction make_trusted(std::shared_ptr<const Building> building, FiniteGroup group,
                                    std::vector<ChamberPermutation> perms);

  const Building &building() const { return *building_; }
  const std::shared_ptr<const Building> &building_ptr() const { return building_; }
  const FiniteGroup &group() const { return group_; }
  std::uint32_t act(GroupElement g, std::uint32_t chamber) const { return perms_[g][chamber]; }
  const ChamberPermutation &permutation(GroupElement g) const { return perms_[g]; }
  const std::vector<ChamberPermutation> &permutations() const { return perms_; }

private:
  ChamberAction() = default;
  std::shared_ptr<const Building> building_;
  FiniteGroup group_;
  std::vector<ChamberPermutation> perms_;
};

/// Cyclic shift x -> x + t on the plane of difference_set_plane().
ChamberAction singer_action(std::shared_ptr<const Building> plane, int modulus);

/// W acting on its own thin building by left multiplication.
ChamberAction regular_action(std::shared_ptr<const Building> thin);

/// The flag building of PG(2, q) with the natural GL(3, q) action.
struct GLBuilding {
  int q = 0;
  IncidenceGeometry geometry;
  std::vector<std::vector<int>> point_vectors; // normalized representatives
  std::shared_ptr<const Building> building;
  std::shared_ptr<const GeneralLinearGroup> gl;
  std::shared_ptr<const ChamberAction> action;
  /// The flag (<e1>, <e1, e2>) fixed by upper-triangular matrices.
  std::uint32_t standard_chamber = 0;
};

/// Flags of PG(2, q) for prime q; only n = 3 is supported. Points are
/// named "P00".. with <e1> first and lines "L00".. with <e1, e2> first, so
/// the standard flag "P00/L00" is the least name.
GLBuilding gl_building(int n, int q);

} // namespace wg
