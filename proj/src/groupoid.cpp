#include "wg/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wg/config.hpp"

namespace wg {

const char *to_string(GroupoidFault fault) {
  switch (fault) {
  case GroupoidFault::duplicate_id: return "duplicate identifier";
  case GroupoidFault::dangling_reference: return "dangling reference";
  case GroupoidFault::non_composable_pair: return "non-composable pair";
  case GroupoidFault::missing_composition: return "missing composition";
  case GroupoidFault::conflicting_composition: return "conflicting composition";
  case GroupoidFault::wrong_endpoints: return "wrong endpoints";
  case GroupoidFault::missing_identity: return "missing identity";
  case GroupoidFault::identity_law: return "identity law";
  case GroupoidFault::missing_inverse: return "missing inverse";
  case GroupoidFault::inverse_law: return "inverse law";
  case GroupoidFault::associativity: return "associativity";
  case GroupoidFault::empty: return "empty groupoid";
  }
  return "unknown";
}

namespace {

std::string describe(GroupoidFault fault, const std::string &detail, const std::vector<std::string> &witnesses) {
  std::string msg = std::string(to_string(fault)) + ": " + detail;
  if (!witnesses.empty()) {
    msg += " [";
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      msg += (i ? ", " : "") + witnesses[i];
    msg += "]";
  }
  return msg;
}

} // namespace

GroupoidError::GroupoidError(GroupoidFault fault, std::string detail, std::vector<std::string> witnesses)
    : ValidationError(describe(fault, detail, witnesses)), fault_(fault), witnesses_(std::move(witnesses)) {}

void FiniteGroupoid::index() {
  const std::size_t nv = vertex_names_.size(), ne = edge_names_.size();
  vertex_index_.clear();
  edge_index_.clear();
  for (VertexId v = 0; v < nv; ++v)
    if (!vertex_index_.emplace(vertex_names_[v], v).second)
      throw GroupoidError(GroupoidFault::duplicate_id, "vertex listed twice", {vertex_names_[v]});
  for (EdgeId g = 0; g < ne; ++g)
    if (!edge_index_.emplace(edge_names_[g], g).second)
      throw GroupoidError(GroupoidFault::duplicate_id, "edge listed twice", {edge_names_[g]});
  out_edges_.assign(nv, {});
  out_position_.assign(ne, 0);
  for (EdgeId g = 0; g < ne; ++g) {
    out_position_[g] = static_cast<std::uint32_t>(out_edges_[source_[g]].size());
    out_edges_[source_[g]].push_back(g);
  }
  compose_offset_.assign(ne, 0);
  std::size_t total = 0;
  for (EdgeId g = 0; g < ne; ++g) {
    compose_offset_[g] = total;
    total += out_edges_[target_[g]].size();
  }
  if (total > table_budget())
    throw CapacityError("composition table with " + std::to_string(total) + " entries exceeds the table budget");
  compose_.assign(total, 0);
}

std::optional<EdgeId> FiniteGroupoid::compose(EdgeId g, EdgeId h) const {
  if (target_[g] != source_[h])
    return std::nullopt;
  return compose_unchecked(g, h);
}

std::optional<VertexId> FiniteGroupoid::find_vertex(const std::string &name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<EdgeId> FiniteGroupoid::find_edge(const std::string &name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end())
    return std::nullopt;
  return it->second;
}

VertexId FiniteGroupoid::vertex(const std::string &name) const {
  auto v = find_vertex(name);
  if (!v)
    throw ValidationError("unknown vertex '" + name + "'");
  return *v;
}

EdgeId FiniteGroupoid::edge(const std::string &name) const {
  auto g = find_edge(name);
  if (!g)
    throw ValidationError("unknown edge '" + name + "'");
  return *g;
}

FiniteGroupoid FiniteGroupoid::build(const RawGroupoid &raw) {
  if (raw.vertices.empty())
    throw GroupoidError(GroupoidFault::empty, "no vertices");
  FiniteGroupoid out;
  out.vertex_names_ = raw.vertices;
  for (const auto &e : raw.edges)
    out.edge_names_.push_back(e.id);
  // Names first, so that references can be resolved.
  {
    std::set<std::string> seen;
    for (const auto &v : raw.vertices)
      if (!seen.insert(v).second)
        throw GroupoidError(GroupoidFault::duplicate_id, "vertex listed twice", {v});
    seen.clear();
    for (const auto &e : raw.edges)
      if (!seen.insert(e.id).second)
        throw GroupoidError(GroupoidFault::duplicate_id, "edge listed twice", {e.id});
  }
  std::map<std::string, VertexId> vidx;
  for (VertexId v = 0; v < raw.vertices.size(); ++v)
    vidx[raw.vertices[v]] = v;
  std::map<std::string, EdgeId> eidx;
  for (EdgeId g = 0; g < raw.edges.size(); ++g)
    eidx[raw.edges[g].id] = g;

  auto vertex_ref = [&](const std::string &name, const std::string &where) {
    auto it = vidx.find(name);
    if (it == vidx.end())
      throw GroupoidError(GroupoidFault::dangling_reference, "unknown vertex '" + name + "' in " + where, {where});
    return it->second;
  };
  auto edge_ref = [&](const std::string &name, const std::string &where) {
    auto it = eidx.find(name);
    if (it == eidx.end())
      throw GroupoidError(GroupoidFault::dangling_reference, "unknown edge '" + name + "' in " + where, {where});
    return it->second;
  };

  for (const auto &e : raw.edges) {
    out.source_.push_back(vertex_ref(e.from, "edge " + e.id));
    out.target_.push_back(vertex_ref(e.to, "edge " + e.id));
  }
  for (const auto &e : raw.edges) {
    if (e.inv.empty())
      throw GroupoidError(GroupoidFault::missing_inverse, "edge has no inverse", {e.id});
    out.inverse_.push_back(edge_ref(e.inv, "inverse of edge " + e.id));
  }
  for (const auto &[v, g] : raw.identities)
    vertex_ref(v, "identities");
  for (const auto &v : raw.vertices) {
    auto it = raw.identities.find(v);
    if (it == raw.identities.end())
      throw GroupoidError(GroupoidFault::missing_identity, "vertex has no identity edge", {v});
    out.identity_.push_back(edge_ref(it->second, "identity of vertex " + v));
  }
  out.index();

  const EdgeId unset = static_cast<EdgeId>(-1);
  std::fill(out.compose_.begin(), out.compose_.end(), unset);
  for (const auto &[a, b, c] : raw.compose) {
    const EdgeId g = edge_ref(a, "compose triple"), h = edge_ref(b, "compose triple"),
                 gh = edge_ref(c, "compose triple");
    if (out.target_[g] != out.source_[h])
      throw GroupoidError(GroupoidFault::non_composable_pair,
                          "composition given for a pair with target(g) != source(h)", {a, b});
    if (out.source_[gh] != out.source_[g] || out.target_[gh] != out.target_[h])
      throw GroupoidError(GroupoidFault::wrong_endpoints, "product has the wrong endpoints", {a, b, c});
    EdgeId &slot = out.compose_[out.compose_offset_[g] + out.out_position_[h]];
    if (slot != unset && slot != gh)
      throw GroupoidError(GroupoidFault::conflicting_composition, "pair composed twice with different results",
                          {a, b, out.edge_names_[slot], c});
    slot = gh;
  }
  for (EdgeId g = 0; g < out.edge_count(); ++g)
    for (EdgeId h : out.out_edges(out.target_[g]))
      if (out.compose_unchecked(g, h) == unset)
        throw GroupoidError(GroupoidFault::missing_composition, "composable pair has no product",
                            {out.edge_names_[g], out.edge_names_[h]});
  out.validate();
  return out;
}

FiniteGroupoid FiniteGroupoid::assemble(std::vector<std::string> vertex_names, std::vector<std::string> edge_names,
                                        std::vector<VertexId> source, std::vector<VertexId> target,
                                        std::vector<EdgeId> identity, std::vector<EdgeId> inverse,
                                        const ComposeFn &compose) {
  const std::size_t nv = vertex_names.size(), ne = edge_names.size();
  if (nv == 0)
    throw GroupoidError(GroupoidFault::empty, "no vertices");
  if (source.size() != ne || target.size() != ne || inverse.size() != ne || identity.size() != nv)
    throw ValidationError("groupoid structure tables have inconsistent sizes");
  FiniteGroupoid out;
  out.vertex_names_ = std::move(vertex_names);
  out.edge_names_ = std::move(edge_names);
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  out.identity_ = std::move(identity);
  out.inverse_ = std::move(inverse);
  for (EdgeId g = 0; g < ne; ++g)
    if (out.source_[g] >= nv || out.target_[g] >= nv || out.inverse_[g] >= ne)
      throw GroupoidError(GroupoidFault::dangling_reference, "edge refers outside the groupoid",
                          {out.edge_names_[g]});
  for (VertexId v = 0; v < nv; ++v) {
    const EdgeId id = out.identity_[v];
    if (id >= ne || out.source_[id] != v || out.target_[id] != v)
      throw GroupoidError(GroupoidFault::missing_identity, "identity edge is not a loop at its vertex",
                          {out.vertex_names_[v]});
  }
  out.index();
  for (EdgeId g = 0; g < ne; ++g)
    for (EdgeId h : out.out_edges_[out.target_[g]]) {
      const EdgeId gh = compose(g, h);
      if (gh >= ne || out.source_[gh] != out.source_[g] || out.target_[gh] != out.target_[h])
        throw GroupoidError(GroupoidFault::wrong_endpoints, "product has the wrong endpoints",
                            {out.edge_names_[g], out.edge_names_[h]});
      out.compose_[out.compose_offset_[g] + out.out_position_[h]] = gh;
    }
  return out;
}

void FiniteGroupoid::validate() const {
  const auto &n = edge_names_;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const EdgeId id = identity_[v];
    if (source_[id] != v || target_[id] != v)
      throw GroupoidError(GroupoidFault::identity_law, "identity edge is not a loop", {vertex_names_[v], n[id]});
  }
  for (EdgeId g = 0; g < edge_count(); ++g) {
    if (compose_unchecked(identity_[source_[g]], g) != g || compose_unchecked(g, identity_[target_[g]]) != g)
      throw GroupoidError(GroupoidFault::identity_law, "identity is not neutral", {n[g]});
    const EdgeId inv = inverse_[g];
    if (source_[inv] != target_[g] || target_[inv] != source_[g])
      throw GroupoidError(GroupoidFault::inverse_law, "inverse has the wrong endpoints", {n[g], n[inv]});
    if (inverse_[inv] != g)
      throw GroupoidError(GroupoidFault::inverse_law, "inverse is not an involution", {n[g], n[inv]});
    if (compose_unchecked(g, inv) != identity_[source_[g]] || compose_unchecked(inv, g) != identity_[target_[g]])
      throw GroupoidError(GroupoidFault::inverse_law, "g * inverse(g) is not an identity", {n[g], n[inv]});
  }
  for (EdgeId g = 0; g < edge_count(); ++g)
    for (EdgeId h : out_edges_[target_[g]]) {
      const EdgeId gh = compose_unchecked(g, h);
      for (EdgeId k : out_edges_[target_[h]])
        if (compose_unchecked(gh, k) != compose_unchecked(g, compose_unchecked(h, k)))
          throw GroupoidError(GroupoidFault::associativity, "(gh)k != g(hk)", {n[g], n[h], n[k]});
    }
}

RawGroupoid FiniteGroupoid::to_raw() const {
  RawGroupoid raw;
  raw.vertices = vertex_names_;
  for (EdgeId g = 0; g < edge_count(); ++g)
    raw.edges.push_back({edge_names_[g], vertex_names_[source_[g]], vertex_names_[target_[g]],
                         edge_names_[inverse_[g]]});
  for (EdgeId g = 0; g < edge_count(); ++g)
    for (EdgeId h : out_edges_[target_[g]])
      raw.compose.push_back({edge_names_[g], edge_names_[h], edge_names_[compose_unchecked(g, h)]});
  for (VertexId v = 0; v < vertex_count(); ++v)
    raw.identities[vertex_names_[v]] = edge_names_[identity_[v]];
  return raw;
}

FiniteGroupoid pair_groupoid(const std::vector<std::string> &vertices) {
  const std::size_t n = vertices.size();
  if (n == 0)
    throw ValidationError("pair groupoid needs a nonempty vertex set");
  std::vector<std::string> names;
  std::vector<VertexId> src, tgt;
  std::vector<EdgeId> ident(n), inv;
  names.reserve(n * n);
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y) {
      names.push_back(vertices[x] + "->" + vertices[y]);
      src.push_back(x);
      tgt.push_back(y);
      inv.push_back(static_cast<EdgeId>(y * n + x));
    }
  for (VertexId x = 0; x < n; ++x)
    ident[x] = static_cast<EdgeId>(x * n + x);
  auto compose = [n](EdgeId g, EdgeId h) { return static_cast<EdgeId>((g / n) * n + h % n); };
  return FiniteGroupoid::assemble(vertices, std::move(names), std::move(src), std::move(tgt), std::move(ident),
                                  std::move(inv), compose);
}

FiniteGroupoid group_groupoid(const FiniteGroup &group, const std::string &vertex) {
  const std::size_t n = group.order();
  std::vector<EdgeId> inv(n);
  for (GroupElement a = 0; a < n; ++a)
    inv[a] = group.inverse(a);
  return FiniteGroupoid::assemble({vertex}, group.labels(), std::vector<VertexId>(n, 0), std::vector<VertexId>(n, 0),
                                  {group.identity()}, std::move(inv),
                                  [&group](EdgeId g, EdgeId h) { return group.mul(g, h); });
}

FiniteGroupoid disjoint_union(const FiniteGroupoid &a, const FiniteGroupoid &b) {
  const auto va = static_cast<VertexId>(a.vertex_count());
  const auto ea = static_cast<EdgeId>(a.edge_count());
  std::vector<std::string> vn = a.vertex_names(), en = a.edge_names();
  vn.insert(vn.end(), b.vertex_names().begin(), b.vertex_names().end());
  en.insert(en.end(), b.edge_names().begin(), b.edge_names().end());
  std::vector<VertexId> src, tgt;
  std::vector<EdgeId> ident, inv;
  for (EdgeId g = 0; g < ea; ++g) {
    src.push_back(a.source(g));
    tgt.push_back(a.target(g));
    inv.push_back(a.inverse(g));
  }
  for (EdgeId g = 0; g < b.edge_count(); ++g) {
    src.push_back(va + b.source(g));
    tgt.push_back(va + b.target(g));
    inv.push_back(ea + b.inverse(g));
  }
  for (VertexId v = 0; v < va; ++v)
    ident.push_back(a.identity(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v)
    ident.push_back(ea + b.identity(v));
  auto compose = [&](EdgeId g, EdgeId h) {
    return g < ea ? a.compose_unchecked(g, h) : ea + b.compose_unchecked(g - ea, h - ea);
  };
  return FiniteGroupoid::assemble(std::move(vn), std::move(en), std::move(src), std::move(tgt), std::move(ident),
                                  std::move(inv), compose);
}

FiniteGroupoid subgroupoid(const FiniteGroupoid &g, const std::vector<VertexId> &vertices,
                           const std::function<bool(EdgeId)> &keep, std::vector<EdgeId> *edge_map) {
  std::vector<std::int64_t> vnew(g.vertex_count(), -1);
  std::vector<std::string> vn;
  for (VertexId v : vertices) {
    vnew[v] = static_cast<std::int64_t>(vn.size());
    vn.push_back(g.vertex_name(v));
  }
  std::vector<std::int64_t> enew(g.edge_count(), -1);
  std::vector<EdgeId> parent;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (vnew[g.source(e)] >= 0 && vnew[g.target(e)] >= 0 && keep(e)) {
      enew[e] = static_cast<std::int64_t>(parent.size());
      parent.push_back(e);
    }
  auto map_edge = [&](EdgeId e) {
    if (enew[e] < 0)
      throw ValidationError("edge selection is not closed: " + g.edge_name(e) + " is missing");
    return static_cast<EdgeId>(enew[e]);
  };
  std::vector<std::string> en;
  std::vector<VertexId> src, tgt;
  std::vector<EdgeId> inv, ident;
  for (EdgeId e : parent) {
    en.push_back(g.edge_name(e));
    src.push_back(static_cast<VertexId>(vnew[g.source(e)]));
    tgt.push_back(static_cast<VertexId>(vnew[g.target(e)]));
    inv.push_back(map_edge(g.inverse(e)));
  }
  for (VertexId v : vertices)
    ident.push_back(map_edge(g.identity(v)));
  auto compose = [&](EdgeId a, EdgeId b) { return map_edge(g.compose_unchecked(parent[a], parent[b])); };
  auto out = FiniteGroupoid::assemble(std::move(vn), std::move(en), std::move(src), std::move(tgt),
                                      std::move(ident), std::move(inv), compose);
  if (edge_map)
    *edge_map = std::move(parent);
  return out;
}

std::vector<std::vector<VertexId>> components(const FiniteGroupoid &g) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId a = find(g.source(e)), b = find(g.target(e));
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, std::vector<VertexId>> groups;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    groups[find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto &[root, members] : groups)
    out.push_back(std::move(members));
  return out;
}

bool is_connected(const FiniteGroupoid &g) { return components(g).size() == 1; }

bool is_simply_connected(const FiniteGroupoid &g) {
  std::vector<std::size_t> loops(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.source(e) == g.target(e) && ++loops[g.source(e)] > 1)
      return false;
  return true;
}

std::vector<EdgeId> hom(const FiniteGroupoid &g, VertexId from, VertexId to) {
  if (from >= g.vertex_count() || to >= g.vertex_count())
    throw ValidationError("unknown vertex");
  std::vector<EdgeId> out;
  for (EdgeId e : g.out_edges(from))
    if (g.target(e) == to)
      out.push_back(e);
  return out;
}

LocalGroup local_group(const FiniteGroupoid &g, VertexId v) {
  LocalGroup lg;
  lg.edges = hom(g, v, v);
  const std::size_t n = lg.edges.size();
  std::map<EdgeId, GroupElement> pos;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    pos[lg.edges[i]] = static_cast<GroupElement>(i);
    labels.push_back(g.edge_name(lg.edges[i]));
  }
  std::vector<GroupElement> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = pos.at(g.compose_unchecked(lg.edges[i], lg.edges[j]));
  lg.group = FiniteGroup::from_table(std::move(labels), std::move(table));
  return lg;
}

} // namespace wg
