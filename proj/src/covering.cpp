#include "wg/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "wg/config.hpp"

namespace wg {

namespace {

class WitnessSink {
public:
  WitnessSink(std::vector<Witness> &out, std::size_t limit) : out_(out), limit_(limit) {}

  void add(bool &flag, Witness w) {
    flag = false;
    std::size_t count = 0;
    for (const auto &x : out_)
      count += x.check == w.check;
    if (count < limit_)
      out_.push_back(std::move(w));
  }

private:
  std::vector<Witness> &out_;
  std::size_t limit_;
};

} // namespace

CoveringReport is_covering(const WGroupoidMorphism &p, const CheckOptions &options) {
  CoveringReport r;
  WitnessSink sink(r.witnesses, options.max_witnesses);
  const auto &s = p.source->groupoid();
  const auto &t = p.target->groupoid();

  if (p.vertex_map.size() != s.vertex_count() || p.edge_map.size() != s.edge_count()) {
    sink.add(r.homomorphism, {"homomorphism", {}, "total maps", "maps of the wrong size"});
    r.delta_preserving = r.surjective = r.out_edge_bijection = false;
    return r;
  }
  for (auto v : p.vertex_map)
    if (v >= t.vertex_count()) {
      sink.add(r.homomorphism, {"homomorphism", {}, "vertex in range", std::to_string(v)});
      r.delta_preserving = r.surjective = r.out_edge_bijection = false;
      return r;
    }
  for (auto e : p.edge_map)
    if (e >= t.edge_count()) {
      sink.add(r.homomorphism, {"homomorphism", {}, "edge in range", std::to_string(e)});
      r.delta_preserving = r.surjective = r.out_edge_bijection = false;
      return r;
    }

  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const EdgeId fe = p.edge_map[e];
    if (t.source(fe) != p.vertex_map[s.source(e)] || t.target(fe) != p.vertex_map[s.target(e)])
      sink.add(r.homomorphism, {"homomorphism", {s.edge_name(e)}, "endpoints preserved", t.edge_name(fe)});
  }
  for (VertexId v = 0; v < s.vertex_count(); ++v)
    if (p.edge_map[s.identity(v)] != t.identity(p.vertex_map[v]))
      sink.add(r.homomorphism, {"homomorphism", {s.vertex_name(v)}, "identity to identity",
                                t.edge_name(p.edge_map[s.identity(v)])});
  if (r.homomorphism) {
    for (EdgeId x = 0; x < s.edge_count(); ++x)
      for (EdgeId y : s.out_edges(s.target(x))) {
        const EdgeId want = p.edge_map[s.compose_unchecked(x, y)];
        const EdgeId got = t.compose_unchecked(p.edge_map[x], p.edge_map[y]);
        if (want != got)
          sink.add(r.homomorphism, {"homomorphism", {s.edge_name(x), s.edge_name(y)}, t.edge_name(want),
                                    t.edge_name(got)});
      }
  }

  const auto &tsys = p.target->system();
  if (!(tsys.matrix() == p.source->system().matrix())) {
    sink.add(r.delta_preserving, {"delta", {}, "same Coxeter matrix", "different matrices"});
  } else {
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
      const Element want = tsys.import(p.source->delta(e));
      const Element &got = p.target->delta(p.edge_map[e]);
      if (want != got)
        sink.add(r.delta_preserving, {"delta", {s.edge_name(e)}, to_string(want), to_string(got)});
    }
  }

  std::vector<bool> vhit(t.vertex_count(), false), ehit(t.edge_count(), false);
  for (auto v : p.vertex_map)
    vhit[v] = true;
  for (auto e : p.edge_map)
    ehit[e] = true;
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (!vhit[v])
      sink.add(r.surjective, {"surjective", {t.vertex_name(v)}, "vertex in the image", "missed"});
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (!ehit[e])
      sink.add(r.surjective, {"surjective", {t.edge_name(e)}, "edge in the image", "missed"});

  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    const auto out = s.out_edges(v);
    const auto target_out = t.out_edges(p.vertex_map[v]);
    std::vector<EdgeId> images;
    for (auto e : out)
      images.push_back(p.edge_map[e]);
    std::sort(images.begin(), images.end());
    std::vector<EdgeId> expected(target_out.begin(), target_out.end());
    std::sort(expected.begin(), expected.end());
    if (images != expected)
      sink.add(r.out_edge_bijection, {"out-edge bijection", {s.vertex_name(v)},
                                      std::to_string(expected.size()) + " distinct out-edges of " +
                                          t.vertex_name(p.vertex_map[v]),
                                      std::to_string(out.size()) + " out-edges with " +
                                          std::to_string(std::unique(images.begin(), images.end()) - images.begin()) +
                                          " distinct images"});
  }
  return r;
}

bool DeckAction::is_free() const {
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (k == group.identity())
      continue;
    for (VertexId v = 0; v < perms[k].size(); ++v)
      if (perms[k][v] == v)
        return false;
  }
  return true;
}

UniversalCover universal_cover(std::shared_ptr<const WGroupoid> g, VertexId base) {
  const auto &G = g->groupoid();
  if (base >= G.vertex_count())
    throw ValidationError("base chamber out of range");
  if (!is_connected(G))
    throw HypothesisError("universal cover needs a connected W-groupoid");
  const auto star = G.out_edges(base);
  const std::size_t n = star.size();
  if (n * n * n > table_budget())
    throw CapacityError("universal cover with " + std::to_string(n) + " chambers exceeds the table budget");
  std::vector<std::string> names;
  for (auto e : star)
    names.push_back(G.edge_name(e));
  auto pair = pair_groupoid(names);
  std::vector<Element> delta(pair.edge_count());
  std::vector<EdgeId> edge_map(pair.edge_count());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const EdgeId e = static_cast<EdgeId>(x * n + y);
      edge_map[e] = G.compose_unchecked(G.inverse(star[x]), star[y]);
      delta[e] = g->delta(edge_map[e]);
    }
  std::vector<VertexId> vertex_map(n);
  for (std::size_t x = 0; x < n; ++x)
    vertex_map[x] = G.target(star[x]);

  UniversalCover out;
  out.cover = std::make_shared<const WGroupoid>(std::move(pair), g->system(), std::move(delta));
  out.projection = {out.cover, g, std::move(vertex_map), std::move(edge_map)};

  auto local = local_group(G, base);
  std::vector<std::size_t> position(G.edge_count(), n);
  for (std::size_t x = 0; x < n; ++x)
    position[star[x]] = x;
  out.deck.loops = local.edges;
  out.deck.group = local.group;
  for (auto loop : local.edges) {
    std::vector<VertexId> perm(n);
    for (std::size_t x = 0; x < n; ++x)
      perm[x] = static_cast<VertexId>(position[G.compose_unchecked(loop, star[x])]);
    out.deck.perms.push_back(std::move(perm));
  }
  return out;
}

Building collapse_units(const WGroupoid &g) {
  const auto &G = g.groupoid();
  const std::size_t n = G.vertex_count();
  if (!is_connected(G))
    throw HypothesisError("collapse needs a connected W-groupoid");
  if (G.edge_count() != n * n)
    throw HypothesisError("collapse needs a simply connected W-groupoid");
  std::vector<EdgeId> edge_at(n * n, 0);
  std::vector<bool> filled(n * n, false);
  for (EdgeId e = 0; e < G.edge_count(); ++e) {
    const std::size_t k = static_cast<std::size_t>(G.source(e)) * n + G.target(e);
    if (filled[k])
      throw HypothesisError("collapse needs a simply connected W-groupoid: two edges " + G.vertex_name(G.source(e)) +
                            " -> " + G.vertex_name(G.target(e)));
    filled[k] = true;
    edge_at[k] = e;
  }
  auto unit = [&](std::size_t x, std::size_t y) { return g.delta(edge_at[x * n + y]).is_identity(); };
  for (std::size_t x = 0; x < n; ++x) {
    if (!unit(x, x))
      throw CollapseError("relation is not reflexive at " + G.vertex_name(static_cast<VertexId>(x)));
    for (std::size_t y = 0; y < n; ++y) {
      if (unit(x, y) != unit(y, x))
        throw CollapseError("relation is not symmetric on " + G.vertex_name(static_cast<VertexId>(x)) + ", " +
                            G.vertex_name(static_cast<VertexId>(y)));
      if (!unit(x, y))
        continue;
      for (std::size_t z = 0; z < n; ++z)
        if (unit(y, z) && !unit(x, z))
          throw CollapseError("relation is not transitive on " + G.vertex_name(static_cast<VertexId>(x)) + ", " +
                              G.vertex_name(static_cast<VertexId>(y)) + ", " +
                              G.vertex_name(static_cast<VertexId>(z)));
    }
  }

  std::vector<std::size_t> cls(n, n), rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n)
      continue;
    for (std::size_t y = x; y < n; ++y)
      if (unit(x, y))
        cls[y] = rep.size();
    rep.push_back(x);
  }
  const std::size_t k = rep.size();
  std::vector<Element> dist(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(G.vertex_name(static_cast<VertexId>(rep[i])));
    for (std::size_t j = 0; j < k; ++j)
      dist[i * k + j] = g.delta(edge_at[rep[i] * n + rep[j]]);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.delta(edge_at[x * n + y]) != dist[cls[x] * k + cls[y]])
        throw CollapseError("distance between classes depends on representatives: " +
                            G.vertex_name(static_cast<VertexId>(x)) + ", " + G.vertex_name(static_cast<VertexId>(y)));

  Building b(g.system(), std::move(names), std::move(dist));
  auto report = check_building(b);
  if (!report.ok())
    throw CollapseError("collapsed structure is not a building", std::move(report));
  return b;
}

LocalGroup fundamental_group(const WGroupoid &g, VertexId chamber) { return local_group(g.groupoid(), chamber); }

namespace {

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterMatrix &m) {
  std::vector<int> sigma(m.rank());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < m.rank() && ok; ++i)
      for (int j = 0; j < m.rank() && ok; ++j)
        ok = m.at(sigma[i], sigma[j]) == m.at(i, j);
    if (ok)
      out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::optional<std::vector<std::size_t>> search(const std::vector<Element> &ad, const Building &b) {
  const std::size_t n = b.size();
  const auto &sys = b.system();
  auto da = [&](std::size_t c, std::size_t d) -> const Element & { return ad[c * n + d]; };

  // Breadth-first order of A along panels, with the parent of each chamber.
  std::vector<std::size_t> order, parent(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      order.push_back(c);
      for (std::size_t d = 0; d < n; ++d)
        if (!seen[d] && da(c, d).length() == 1) {
          seen[d] = true;
          parent[d] = c;
          queue.push_back(d);
        }
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> nbr(n, std::vector<std::vector<std::size_t>>(sys.rank()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (b.dist(x, y).length() == 1)
        nbr[x][b.dist(x, y).word()[0]].push_back(y);

  auto census = [&](auto dist, std::size_t c) {
    std::map<Element, std::size_t> m;
    for (std::size_t d = 0; d < n; ++d)
      ++m[dist(c, d)];
    return m;
  };
  const auto root_census = census(da, order[0]);

  std::vector<std::size_t> phi(n, n);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == n)
      return true;
    const std::size_t c = order[pos];
    const std::vector<std::size_t> *cands = &all;
    if (parent[c] != n)
      cands = &nbr[phi[parent[c]]][da(parent[c], c).word()[0]];
    for (auto y : *cands) {
      if (used[y])
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i) {
        const auto c2 = order[i];
        ok = b.dist(phi[c2], y) == da(c2, c) && b.dist(y, phi[c2]) == da(c, c2);
      }
      if (!ok || b.dist(y, y) != da(c, c))
        continue;
      if (pos == 0 && census([&](std::size_t x, std::size_t z) { return b.dist(x, z); }, y) != root_census)
        continue;
      phi[c] = y;
      used[y] = true;
      if (extend(pos + 1))
        return true;
      used[y] = false;
      phi[c] = n;
    }
    return false;
  };
  if (extend(0))
    return phi;
  return std::nullopt;
}

} // namespace

std::optional<std::vector<std::size_t>> is_isomorphic(const Building &a, const Building &b,
                                                      const IsomorphismOptions &options) {
  if (!(a.system().matrix() == b.system().matrix()))
    throw ValidationError("buildings over different Coxeter systems");
  const std::size_t n = a.size();
  if (n != b.size())
    return std::nullopt;
  if (n == 0)
    return std::vector<std::size_t>{};
  const auto &sys = b.system();
  std::vector<std::vector<int>> twists{{}};
  if (options.diagram_automorphisms)
    twists = diagram_automorphisms(sys.matrix());
  for (const auto &sigma : twists) {
    std::vector<Element> ad(n * n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d) {
        Word w = a.dist(c, d).word();
        if (!sigma.empty())
          for (auto &s : w)
            s = sigma[s];
        ad[c * n + d] = sys.canonicalize(w);
      }
    if (auto phi = search(ad, b))
      return phi;
  }
  return std::nullopt;
}

} // namespace wg
