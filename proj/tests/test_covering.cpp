#include <doctest.h>

#include "fixtures.hpp"
#include "wg/covering.hpp"

using namespace wg;

namespace {

std::shared_ptr<const WGroupoid> shared(const WGroupoid &g) { return std::make_shared<const WGroupoid>(g); }

} // namespace

TEST_CASE("universal cover of the Singer quotient") {
  const auto base = shared(fixture::singer_quotient().wgroupoid);
  const auto u = universal_cover(base, 0);
  CHECK(u.cover->chamber_count() == 21);
  CHECK(check_axioms(*u.cover).all());
  CHECK(is_covering(u.projection).ok());
  CHECK(u.deck.group.order() == 7);
  CHECK(u.deck.is_free());

  const auto b = wgroupoid_to_building(*u.cover);
  CHECK(check_building(b).ok());
  const auto phi = is_isomorphic(b, *fixture::fano());
  REQUIRE(phi);
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t d = 0; d < b.size(); ++d)
      CHECK(fixture::fano()->dist((*phi)[c], (*phi)[d]) == b.dist(c, d));

  const auto pi = fundamental_group(*base, 0);
  CHECK(pi.group.order() == 7);
  bool cyclic = false;
  for (GroupElement x = 0; x < 7; ++x)
    cyclic = cyclic || pi.group.element_order(x) == 7;
  CHECK(cyclic);
}

TEST_CASE("covers of buildings are trivial") {
  const auto u = universal_cover(fixture::fano_wgroupoid(), 3);
  CHECK(u.cover->chamber_count() == 21);
  CHECK(u.deck.group.order() == 1);
  CHECK(fundamental_group(*fixture::fano_wgroupoid(), 3).group.order() == 1);
  CHECK(is_isomorphic(wgroupoid_to_building(*u.cover), *fixture::fano()));
}

TEST_CASE("the cover of the GL quotient and its collapse") {
  const auto base = shared(fixture::gl_quotient().wgroupoid);
  const auto u = universal_cover(base, 0);
  CHECK(u.cover->chamber_count() == 168);
  const auto ax = check_axioms(*u.cover);
  CHECK(ax.is_wgroupoid());
  CHECK_FALSE(ax.strict);
  CHECK(is_covering(u.projection).ok());

  const auto collapsed = collapse_units(*u.cover);
  CHECK(collapsed.size() == 21);
  CHECK(check_building(collapsed).ok());
  CHECK(is_isomorphic(collapsed, *fixture::fano()));

  // a strict input collapses to itself
  const auto same = collapse_units(*fixture::fano_wgroupoid());
  CHECK(same.size() == 21);
  CHECK_THROWS_AS(collapse_units(*base), HypothesisError);
}

TEST_CASE("morphisms that are not coverings") {
  const auto whole = fixture::fano_wgroupoid();
  // inclusion of a panel misses most chambers
  const auto &g = whole->groupoid();
  const auto p = panel(*whole, 0, 0);
  WGroupoidMorphism inc{shared(p), whole, {}, {}};
  for (VertexId v = 0; v < p.chamber_count(); ++v)
    inc.vertex_map.push_back(g.vertex(p.groupoid().vertex_name(v)));
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    inc.edge_map.push_back(g.edge(p.groupoid().edge_name(e)));
  // the panel lives over a rank-one system, so compare through a rank-two copy
  std::vector<Element> lifted;
  for (EdgeId e = 0; e < p.edge_count(); ++e)
    lifted.push_back(whole->delta(inc.edge_map[e]));
  inc.source = std::make_shared<const WGroupoid>(p.groupoid_ptr(), whole->system(), lifted);
  const auto r = is_covering(inc);
  CHECK(r.homomorphism);
  CHECK(r.delta_preserving);
  CHECK_FALSE(r.surjective);
  CHECK_FALSE(r.ok());

  auto proj = universal_cover(shared(fixture::singer_quotient().wgroupoid), 0).projection;
  // send two out-edges of one cover chamber to the same base edge
  const auto out = proj.source->groupoid().out_edges(0);
  proj.edge_map[out[1]] = proj.edge_map[out[2]];
  const auto bad = is_covering(proj);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.witnesses.empty());
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(is_isomorphic(*fixture::fano(), *fixture::pg23()));
  const CoxeterSystem a2(CoxeterMatrix::type_a(2));
  CHECK_FALSE(is_isomorphic(thin_building(a2), *fixture::fano()));
  const auto t = thin_building(a2);
  CHECK(is_isomorphic(t, t));
  const CoxeterSystem a1a1(CoxeterMatrix({{1, 2}, {2, 1}}));
  CHECK_THROWS_AS(is_isomorphic(thin_building(a1a1), t), ValidationError);
}

TEST_CASE("quotient and cover round trip for free actions") {
  const auto &q = fixture::singer_quotient();
  const auto u = universal_cover(shared(q.wgroupoid), 1);
  const auto b = wgroupoid_to_building(*u.cover);
  CHECK(is_isomorphic(b, *fixture::fano()));
  // every fibre of the projection has |G| chambers
  std::vector<std::size_t> fibre(q.wgroupoid.chamber_count());
  for (VertexId v : u.projection.vertex_map)
    ++fibre[v];
  for (auto n : fibre)
    CHECK(n == 7);
}
