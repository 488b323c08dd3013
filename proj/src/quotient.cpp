#include "wg/quotient.hpp"

#include <algorithm>

#include "wg/config.hpp"

namespace wg {

bool is_free(const ChamberAction &a) {
  const auto one = a.group().identity();
  for (GroupElement g = 0; g < a.group().order(); ++g) {
    if (g == one)
      continue;
    const auto &p = a.permutation(g);
    for (std::uint32_t c = 0; c < p.size(); ++c)
      if (p[c] == c)
        return false;
  }
  return true;
}

std::vector<GroupElement> stabilizer(const ChamberAction &a, std::uint32_t chamber) {
  std::vector<GroupElement> out;
  for (GroupElement g = 0; g < a.group().order(); ++g)
    if (a.act(g, chamber) == chamber)
      out.push_back(g);
  return out;
}

std::vector<std::vector<std::uint32_t>> orbits(const ChamberAction &a) {
  const auto &b = a.building();
  const std::size_t n = b.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (seen[c])
      continue;
    std::vector<std::uint32_t> orbit;
    for (GroupElement g = 0; g < a.group().order(); ++g) {
      const auto d = a.act(g, c);
      if (!seen[d]) {
        seen[d] = true;
        orbit.push_back(d);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  auto least = [&](const std::vector<std::uint32_t> &orbit) {
    return *std::min_element(orbit.begin(), orbit.end(),
                             [&](std::uint32_t x, std::uint32_t y) { return b.name(x) < b.name(y); });
  };
  std::sort(out.begin(), out.end(), [&](const auto &x, const auto &y) { return b.name(least(x)) < b.name(least(y)); });
  return out;
}

std::vector<std::uint32_t> orbit_representatives(const ChamberAction &a) {
  const auto &b = a.building();
  std::vector<std::uint32_t> reps;
  for (const auto &orbit : orbits(a))
    reps.push_back(*std::min_element(orbit.begin(), orbit.end(),
                                     [&](std::uint32_t x, std::uint32_t y) { return b.name(x) < b.name(y); }));
  return reps;
}

EdgeId QuotientWGroupoid::edge(VertexId from, VertexId to, GroupElement g) const {
  const std::size_t k = orbit_reps.size();
  const std::size_t order = action->group().order();
  return static_cast<EdgeId>((static_cast<std::size_t>(from) * k + to) * order + g);
}

QuotientWGroupoid quotient(std::shared_ptr<const ChamberAction> action) {
  const auto &a = *action;
  const auto &b = a.building();
  const auto &grp = a.group();
  const auto reps = orbit_representatives(a);
  const std::size_t k = reps.size();
  const std::size_t order = grp.order();
  const std::size_t edges = k * k * order;
  if (edges * k * order > table_budget())
    throw CapacityError("quotient composition table (" + std::to_string(edges * k * order) +
                        " entries) exceeds the table budget " + std::to_string(table_budget()));

  std::vector<std::string> vnames, enames;
  for (auto r : reps)
    vnames.push_back(b.name(r));
  std::vector<VertexId> source(edges), target(edges);
  std::vector<EdgeId> identity(k), inverse(edges);
  std::vector<QuotientWGroupoid::EdgeLabel> labels(edges);
  std::vector<Element> delta(edges);
  enames.reserve(edges);
  auto id = [&](std::size_t i, std::size_t j, GroupElement g) {
    return static_cast<EdgeId>((i * k + j) * order + g);
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (GroupElement g = 0; g < order; ++g) {
        const EdgeId e = id(i, j, g);
        enames.push_back(vnames[i] + "->" + vnames[j] + "@" + grp.label(g));
        source[e] = static_cast<VertexId>(i);
        target[e] = static_cast<VertexId>(j);
        inverse[e] = id(j, i, grp.inverse(g));
        labels[e] = {static_cast<VertexId>(i), static_cast<VertexId>(j), g};
        delta[e] = b.dist(reps[i], a.act(g, reps[j]));
      }
  for (std::size_t i = 0; i < k; ++i)
    identity[i] = id(i, i, grp.identity());

  auto base = FiniteGroupoid::assemble(std::move(vnames), std::move(enames), std::move(source), std::move(target),
                                       std::move(identity), std::move(inverse), [&](EdgeId x, EdgeId y) {
                                         const auto &lx = labels[x];
                                         const auto &ly = labels[y];
                                         return id(lx.from, ly.to, grp.mul(lx.element, ly.element));
                                       });
  return QuotientWGroupoid{WGroupoid(std::move(base), b.system(), std::move(delta)), reps, std::move(labels),
                           std::move(action)};
}

} // namespace wg
