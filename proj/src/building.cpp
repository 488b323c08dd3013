#include "wg/building.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "wg/groupoid.hpp"

namespace wg {

Building::Building(CoxeterSystem system, std::vector<std::string> chambers, std::vector<Element> dist, bool partial)
    : system_(std::move(system)), names_(std::move(chambers)), dist_(std::move(dist)), partial_(partial) {
  const std::size_t n = names_.size();
  if (dist_.size() != n * n)
    throw ValidationError("distance table has " + std::to_string(dist_.size()) + " entries, expected " +
                          std::to_string(n * n));
  for (std::size_t c = 0; c < n; ++c)
    if (!index_.emplace(names_[c], c).second)
      throw ValidationError("duplicate chamber '" + names_[c] + "'");
  for (const auto &e : dist_)
    if (!system_.owns(e))
      throw ValidationError("distance table contains an element of another Coxeter system");
}

std::optional<std::size_t> Building::find(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t Building::chamber(const std::string &name) const {
  auto c = find(name);
  if (!c)
    throw ValidationError("unknown chamber '" + name + "'");
  return *c;
}

Building Building::with_dist(std::size_t c, std::size_t d, const Element &value) const {
  Building out = *this;
  out.dist_[c * names_.size() + d] = system_.import(value);
  return out;
}

BuildingReport check_building(const Building &b, const CheckOptions &options) {
  BuildingReport report;
  const auto &sys = b.system();
  const std::size_t n = b.size();
  const int rank = sys.rank();
  auto add = [&](bool &flag, Witness w) {
    flag = false;
    std::size_t count = 0;
    for (const auto &x : report.witnesses)
      count += x.check == w.check;
    if (count < options.max_witnesses)
      report.witnesses.push_back(std::move(w));
  };

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      if (b.dist(c, d).is_identity() != (c == d))
        add(report.wd1, {"WD1", {b.name(c), b.name(d)}, c == d ? "1" : "not 1", to_string(b.dist(c, d))});

  // s-neighbours of each chamber
  std::vector<std::vector<std::vector<std::size_t>>> nbr(n, std::vector<std::vector<std::size_t>>(rank));
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t e = 0; e < n; ++e) {
      const auto &w = b.dist(d, e);
      if (w.length() == 1)
        nbr[d][w.word()[0]].push_back(e);
    }

  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      const Element &w = b.dist(c, d);
      for (Generator s = 0; s < rank; ++s) {
        const Element ws = sys.mult_generator(w, s);
        const bool down = ws.length() < w.length();
        for (std::size_t e : nbr[d][s]) {
          const Element &got = b.dist(c, e);
          const bool fine = down ? (got == ws || got == w) : got == ws;
          if (!fine)
            add(report.wd2, {"WD2", {b.name(c), b.name(d), b.name(e)},
                             down ? to_string(ws) + " or " + to_string(w) : to_string(ws), to_string(got)});
        }
        if (b.partial() && ws.length() > w.length())
          continue; // the required chamber may lie outside the ball
        const bool found = std::any_of(nbr[d][s].begin(), nbr[d][s].end(),
                                       [&](std::size_t e) { return b.dist(c, e) == ws; });
        if (!found)
          add(report.wd3, {"WD3", {b.name(c), b.name(d), std::to_string(s)},
                           "an s-neighbour at distance " + to_string(ws), "none"});
      }
    }
  return report;
}

std::map<Element, std::size_t> sphere_census(const Building &b, std::size_t chamber) {
  std::map<Element, std::size_t> out;
  for (std::size_t d = 0; d < b.size(); ++d)
    ++out[b.dist(chamber, d)];
  return out;
}

Building thin_building(const CoxeterSystem &system, std::optional<int> max_length) {
  std::vector<Element> elems;
  bool partial = false;
  if (max_length) {
    elems = system.enumerate_elements(*max_length);
    partial = !system.is_finite() || system.enumerate_elements(*max_length + 1).size() > elems.size();
  } else {
    elems = system.all_elements();
  }
  const std::size_t n = elems.size();
  if (n * n > table_budget())
    throw CapacityError("thin building with " + std::to_string(n) + " chambers exceeds the table budget");
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto &e : elems)
    names.push_back(to_string(e));
  std::vector<Element> inv;
  for (const auto &e : elems)
    inv.push_back(system.inverse(e));
  std::vector<Element> dist(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      dist[c * n + d] = system.mult(inv[c], elems[d]);
  return Building(system, std::move(names), std::move(dist), partial);
}

std::string flag_name(const std::string &point, const std::string &line) { return point + "/" + line; }

namespace {

struct IncidenceGraph {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<std::pair<std::size_t, std::size_t>> flags; // (point, line) indices
};

IncidenceGraph incidence_graph(const IncidenceGeometry &geom) {
  IncidenceGraph g;
  g.points = geom.points.size();
  std::map<std::string, std::size_t> pidx, lidx;
  for (std::size_t i = 0; i < geom.points.size(); ++i)
    if (!pidx.emplace(geom.points[i], i).second)
      throw ValidationError("duplicate point '" + geom.points[i] + "'");
  for (std::size_t i = 0; i < geom.lines.size(); ++i)
    if (!lidx.emplace(geom.lines[i], i).second)
      throw ValidationError("duplicate line '" + geom.lines[i] + "'");
  g.adj.assign(geom.points.size() + geom.lines.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto &[p, l] : geom.flags) {
    auto pi = pidx.find(p);
    if (pi == pidx.end())
      throw ValidationError("flag (" + p + ", " + l + ") names an unknown point");
    auto li = lidx.find(l);
    if (li == lidx.end())
      throw ValidationError("flag (" + p + ", " + l + ") names an unknown line");
    if (!seen.emplace(pi->second, li->second).second)
      throw ValidationError("duplicate flag (" + p + ", " + l + ")");
    g.flags.emplace_back(pi->second, li->second);
    g.adj[pi->second].push_back(g.points + li->second);
    g.adj[g.points + li->second].push_back(pi->second);
  }
  return g;
}

} // namespace

PolygonShape incidence_shape(const IncidenceGeometry &geom) {
  const auto g = incidence_graph(geom);
  const std::size_t v = g.adj.size();
  PolygonShape shape;
  int girth = std::numeric_limits<int>::max();
  constexpr int kUnseen = -1;
  for (std::size_t root = 0; root < v; ++root) {
    std::vector<int> dist(v, kUnseen);
    std::vector<std::size_t> parent(v, v);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto y : g.adj[x]) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          girth = std::min(girth, dist[x] + dist[y] + 1);
        }
      }
    }
    for (int d : dist) {
      if (d == kUnseen)
        shape.connected = false;
      shape.diameter = std::max(shape.diameter, d);
    }
  }
  shape.girth = girth == std::numeric_limits<int>::max() ? 0 : girth;
  return shape;
}

Building rank2_building(const IncidenceGeometry &geom) {
  const auto graph = incidence_graph(geom);
  if (geom.points.empty() || geom.lines.empty())
    throw ValidationError("incidence geometry needs at least one point and one line");
  for (std::size_t x = 0; x < graph.adj.size(); ++x)
    if (graph.adj[x].size() < 2) {
      const bool point = x < graph.points;
      throw ValidationError((point ? "point '" + geom.points[x] : "line '" + geom.lines[x - graph.points]) +
                            "' is incident with fewer than two " + (point ? "lines" : "points"));
    }
  const auto shape = incidence_shape(geom);
  if (!shape.connected)
    throw NotAPolygonError(shape, "not a generalized polygon: incidence graph is disconnected");
  if (shape.girth != 2 * shape.diameter || shape.diameter < 2)
    throw NotAPolygonError(shape, "not a generalized polygon: girth " + std::to_string(shape.girth) +
                                      ", diameter " + std::to_string(shape.diameter));

  CoxeterSystem sys(CoxeterMatrix::dihedral(shape.diameter));
  const std::size_t n = graph.flags.size();
  std::vector<std::string> names;
  for (const auto &[p, l] : graph.flags)
    names.push_back(flag_name(geom.points[p], geom.lines[l]));

  // Flag adjacency: label 0 shares the point, label 1 shares the line.
  std::vector<std::vector<std::pair<std::size_t, Generator>>> adj(n);
  {
    std::map<std::size_t, std::vector<std::size_t>> by_point, by_line;
    for (std::size_t f = 0; f < n; ++f) {
      by_point[graph.flags[f].first].push_back(f);
      by_line[graph.flags[f].second].push_back(f);
    }
    for (const auto &[_, fs] : by_point)
      for (auto a : fs)
        for (auto b : fs)
          if (a != b)
            adj[a].emplace_back(b, 0);
    for (const auto &[_, fs] : by_line)
      for (auto a : fs)
        for (auto b : fs)
          if (a != b)
            adj[a].emplace_back(b, 1);
  }

  std::vector<Element> dist(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<int> level(n, -1);
    level[c] = 0;
    dist[c * n + c] = sys.identity();
    std::deque<std::size_t> queue{c};
    while (!queue.empty()) {
      const auto d = queue.front();
      queue.pop_front();
      for (const auto &[e, s] : adj[d]) {
        const Element cand = sys.mult_generator(dist[c * n + d], s);
        if (level[e] < 0) {
          if (cand.length() != level[d] + 1)
            throw ValidationError("minimal gallery from " + names[c] + " to " + names[e] + " has non-reduced type");
          level[e] = level[d] + 1;
          dist[c * n + e] = cand;
          queue.push_back(e);
        } else if (level[e] == level[d] + 1 && dist[c * n + e] != cand) {
          throw ValidationError("minimal galleries from " + names[c] + " to " + names[e] +
                                " have different types " + to_string(dist[c * n + e]) + " and " + to_string(cand));
        }
      }
    }
  }
  Building b(sys, std::move(names), std::move(dist));
  b.set_generator_meaning({"same point, different line", "same line, different point"});
  return b;
}

IncidenceGeometry difference_set_plane(const std::vector<int> &residues, int modulus) {
  if (modulus < 3)
    throw ValidationError("modulus must be at least 3");
  std::vector<int> d;
  for (int r : residues) {
    const int x = ((r % modulus) + modulus) % modulus;
    if (std::find(d.begin(), d.end(), x) != d.end())
      throw ValidationError("residue " + std::to_string(x) + " appears twice");
    d.push_back(x);
  }
  std::vector<int> reps(modulus, 0);
  for (int a : d)
    for (int b : d)
      if (a != b)
        ++reps[((a - b) % modulus + modulus) % modulus];
  std::string bad;
  for (int x = 1; x < modulus; ++x)
    if (reps[x] != 1)
      bad += (bad.empty() ? "" : ", ") + std::to_string(x) + " (" + std::to_string(reps[x]) + " times)";
  if (!bad.empty())
    throw ValidationError("not a planar difference set mod " + std::to_string(modulus) +
                          "; residues not represented exactly once: " + bad);

  IncidenceGeometry geom;
  for (int i = 0; i < modulus; ++i) {
    geom.points.push_back(std::to_string(i));
    geom.lines.push_back("L" + std::to_string(i));
  }
  for (int p = 0; p < modulus; ++p)
    for (int i = 0; i < modulus; ++i)
      for (int x : d)
        if ((i + x) % modulus == p)
          geom.flags.emplace_back(geom.points[p], geom.lines[i]);
  return geom;
}

WGroupoid building_to_wgroupoid(const Building &b) {
  const std::size_t n = b.size();
  if (n * n > table_budget())
    throw CapacityError("building with " + std::to_string(n) + " chambers exceeds the table budget");
  auto base = pair_groupoid(b.chambers());
  std::vector<Element> delta(base.edge_count());
  for (EdgeId g = 0; g < base.edge_count(); ++g)
    delta[g] = b.dist(base.source(g), base.target(g));
  return WGroupoid(std::move(base), b.system(), std::move(delta));
}

Building wgroupoid_to_building(const WGroupoid &g) {
  const auto &base = g.groupoid();
  if (!is_connected(base))
    throw HypothesisError("not connected: " + std::to_string(components(base).size()) + " components");
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    const auto loops = hom(base, v, v);
    if (loops.size() != 1)
      throw HypothesisError("not simply connected: local group at " + base.vertex_name(v) + " has order " +
                            std::to_string(loops.size()));
  }
  const auto report = check_axioms(g);
  const std::pair<bool, const char *> needed[] = {
      {report.wg1, "WG1"}, {report.wg2, "WG2"}, {report.wg3, "WG3"}, {report.weak, "weak"}, {report.strict, "strict"}};
  for (const auto &[ok, name] : needed)
    if (!ok)
      throw HypothesisError(std::string("axiom ") + name + " fails");

  const std::size_t n = base.vertex_count();
  std::vector<Element> dist(n * n);
  for (EdgeId e = 0; e < base.edge_count(); ++e)
    dist[base.source(e) * n + base.target(e)] = g.delta(e);
  return Building(g.system(), base.vertex_names(), std::move(dist));
}

} // namespace wg
