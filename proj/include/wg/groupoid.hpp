#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wg/error.hpp"
#include "wg/group.hpp"

namespace wg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Serialized groupoid data with opaque string identifiers.
struct RawGroupoid {
  struct Edge {
    std::string id, from, to, inv;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<std::array<std::string, 3>> compose;
  std::map<std::string, std::string> identities;
};

/// Why a groupoid table was rejected.
enum class GroupoidFault {
  duplicate_id,
  dangling_reference,
  non_composable_pair,
  missing_composition,
  conflicting_composition,
  wrong_endpoints,
  missing_identity,
  identity_law,
  missing_inverse,
  inverse_law,
  associativity,
  empty,
};

const char *to_string(GroupoidFault fault);

class GroupoidError : public ValidationError {
public:
  GroupoidError(GroupoidFault fault, std::string detail, std::vector<std::string> witnesses = {});

  GroupoidFault fault() const { return fault_; }
  const std::vector<std::string> &witnesses() const { return witnesses_; }

private:
  GroupoidFault fault_;
  std::vector<std::string> witnesses_;
};

/// A finite groupoid with an explicit composition table.
///
/// Vertices and edges are dense indices internally and carry string names
/// for I/O. For each edge g the products g*h over the out-edges h of
/// target(g) are stored contiguously, so composition is a constant-time
/// lookup.
class FiniteGroupoid {
public:
  using ComposeFn = std::function<EdgeId(EdgeId, EdgeId)>;

  /// Parses and fully validates serialized data; throws GroupoidError
  /// describing the first violated axiom.
  static FiniteGroupoid build(const RawGroupoid &raw);

  /// Assembles a groupoid from trusted structure maps. Endpoint, identity and
  /// inverse tables are checked for consistency; associativity is not (call
  /// validate() for that).
  static FiniteGroupoid assemble(std::vector<std::string> vertex_names, std::vector<std::string> edge_names,
                                 std::vector<VertexId> source, std::vector<VertexId> target,
                                 std::vector<EdgeId> identity, std::vector<EdgeId> inverse,
                                 const ComposeFn &compose);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }

  VertexId source(EdgeId g) const { return source_[g]; }
  VertexId target(EdgeId g) const { return target_[g]; }
  EdgeId identity(VertexId v) const { return identity_[v]; }
  EdgeId inverse(EdgeId g) const { return inverse_[g]; }
  bool is_identity(EdgeId g) const { return identity_[source_[g]] == g; }

  /// g*h (first g, then h); nullopt when target(g) != source(h).
  std::optional<EdgeId> compose(EdgeId g, EdgeId h) const;
  /// g*h for a pair known to be composable.
  EdgeId compose_unchecked(EdgeId g, EdgeId h) const {
    return compose_[compose_offset_[g] + out_position_[h]];
  }

  std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_[v]; }

  const std::string &vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string &edge_name(EdgeId g) const { return edge_names_[g]; }
  const std::vector<std::string> &vertex_names() const { return vertex_names_; }
  const std::vector<std::string> &edge_names() const { return edge_names_; }
  std::optional<VertexId> find_vertex(const std::string &name) const;
  std::optional<EdgeId> find_edge(const std::string &name) const;
  VertexId vertex(const std::string &name) const;
  EdgeId edge(const std::string &name) const;

  /// Exhaustive axiom check; throws GroupoidError on the first violation.
  void validate() const;

  RawGroupoid to_raw() const;

private:
  void index();

  std::vector<std::string> vertex_names_, edge_names_;
  std::vector<VertexId> source_, target_;
  std::vector<EdgeId> identity_, inverse_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::uint32_t> out_position_;
  std::vector<std::size_t> compose_offset_;
  std::vector<EdgeId> compose_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
};

/// One edge per ordered pair of `vertices`; edge (x,y) is named "x->y".
FiniteGroupoid pair_groupoid(const std::vector<std::string> &vertices);

/// A group as a one-vertex groupoid; edge names are the group labels.
FiniteGroupoid group_groupoid(const FiniteGroup &group, const std::string &vertex = "*");

FiniteGroupoid disjoint_union(const FiniteGroupoid &a, const FiniteGroupoid &b);

/// Subgroupoid spanned by `vertices` and the edges accepted by `keep`
/// between them. `keep` must select a set closed under composition and
/// inverses and containing the identities; returned edge k is `edge_map[k]`
/// of the parent.
FiniteGroupoid subgroupoid(const FiniteGroupoid &g, const std::vector<VertexId> &vertices,
                           const std::function<bool(EdgeId)> &keep, std::vector<EdgeId> *edge_map = nullptr);

/// Connected components, each sorted, ordered by least vertex.
std::vector<std::vector<VertexId>> components(const FiniteGroupoid &g);
bool is_connected(const FiniteGroupoid &g);
/// Every local group trivial.
bool is_simply_connected(const FiniteGroupoid &g);
std::vector<EdgeId> hom(const FiniteGroupoid &g, VertexId from, VertexId to);

/// The group of loops at a vertex, with the induced multiplication.
struct LocalGroup {
  std::vector<EdgeId> edges;
  FiniteGroup group;
};
LocalGroup local_group(const FiniteGroupoid &g, VertexId v);

} // namespace wg
