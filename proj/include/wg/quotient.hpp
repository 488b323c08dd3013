#pragma once

#include <memory>
#include <vector>

#include "wg/action.hpp"
#include "wg/wmetric.hpp"

namespace wg {

bool is_free(const ChamberAction &a);
std::vector<GroupElement> stabilizer(const ChamberAction &a, std::uint32_t chamber);
/// Orbits, each sorted by chamber index, ordered by the name of their
/// least-named chamber.
std::vector<std::vector<std::uint32_t>> orbits(const ChamberAction &a);
/// The lexicographically least chamber name in each orbit, in orbit order.
std::vector<std::uint32_t> orbit_representatives(const ChamberAction &a);

/// Quotient of a building by a type-preserving action, built as a skeleton:
/// one vertex per orbit representative C_i and one edge (i, j, g) for each
/// group element g, with W-length dist(C_i, g C_j) and
/// (i, j, g)(j, k, h) = (i, k, gh). When the action is free this is the
/// ordinary quotient; otherwise each chamber is replaced by stab(C)-many
/// chambers at distance 1.
struct QuotientWGroupoid {
  struct EdgeLabel {
    VertexId from = 0;
    VertexId to = 0;
    GroupElement element = 0;
  };

  WGroupoid wgroupoid;
  std::vector<std::uint32_t> orbit_reps; // chamber index per vertex
  std::vector<EdgeLabel> labels;         // per edge
  std::shared_ptr<const ChamberAction> action;

  EdgeId edge(VertexId from, VertexId to, GroupElement g) const;
};

/// Throws CapacityError when the composition table (orbits^3 |G|^2
/// entries) exceeds table_budget().
QuotientWGroupoid quotient(std::shared_ptr<const ChamberAction> action);

} // namespace wg
