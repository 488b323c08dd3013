#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wg/building.hpp"
#include "wg/wmetric.hpp"

namespace wg {

/// A map of W-groupoids given on vertices and edges. Nothing is checked on
/// construction; see is_covering().
struct WGroupoidMorphism {
  std::shared_ptr<const WGroupoid> source;
  std::shared_ptr<const WGroupoid> target;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

struct CoveringReport {
  bool homomorphism = true;     // endpoints, identities and composition
  bool delta_preserving = true;
  bool surjective = true;       // on vertices and on edges
  bool out_edge_bijection = true;
  std::vector<Witness> witnesses;

  bool ok() const { return homomorphism && delta_preserving && surjective && out_edge_bijection; }
};

CoveringReport is_covering(const WGroupoidMorphism &p, const CheckOptions &options = {});

/// The loops at the base chamber acting on the cover by pre-composition.
struct DeckAction {
  std::vector<EdgeId> loops;      // element k of `group` is loops[k]
  FiniteGroup group;
  std::vector<std::vector<VertexId>> perms; // perms[k][v] = vertex of loops[k] * g_v

  bool is_free() const;
};

struct UniversalCover {
  std::shared_ptr<const WGroupoid> cover;
  WGroupoidMorphism projection;
  DeckAction deck;
};

/// Cover vertices are the edges g of G leaving `base` (named after them),
/// with one edge g -> h per ordered pair and W-length delta(g^-1 h). Throws
/// HypothesisError when G is disconnected.
UniversalCover universal_cover(std::shared_ptr<const WGroupoid> g, VertexId base);

class CollapseError : public ValidationError {
public:
  CollapseError(const std::string &message, BuildingReport report = {})
      : ValidationError(message), report_(std::move(report)) {}
  const BuildingReport &report() const { return report_; }

private:
  BuildingReport report_;
};

/// Identifies chambers joined by an edge of W-length 1. Each class is named
/// after its first vertex. Requires a connected, simply connected input
/// (HypothesisError otherwise); throws CollapseError when the relation is
/// not an equivalence, the distance is not class-invariant, or the result
/// fails the building check.
Building collapse_units(const WGroupoid &g);

/// The local group at `chamber`.
LocalGroup fundamental_group(const WGroupoid &g, VertexId chamber);

struct IsomorphismOptions {
  /// Also try every automorphism of the Coxeter diagram.
  bool diagram_automorphisms = false;
};

/// A chamber bijection phi with dist_B(phi c, phi d) = dist_A(c, d), found by
/// backtracking. Throws ValidationError when the Coxeter matrices differ.
std::optional<std::vector<std::size_t>> is_isomorphic(const Building &a, const Building &b,
                                                      const IsomorphismOptions &options = {});

} // namespace wg
