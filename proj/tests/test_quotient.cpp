#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "wg/linear.hpp"
#include "wg/quotient.hpp"

using namespace wg;

namespace {

ChamberPermutation identity_perm(std::size_t n) {
  ChamberPermutation p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = static_cast<std::uint32_t>(i);
  return p;
}

} // namespace

TEST_CASE("the Singer cycle acts freely and type-preservingly") {
  const auto &a = *fixture::singer();
  CHECK(a.group().order() == 7);
  CHECK(is_free(a));
  CHECK(orbits(a).size() == 3);
  for (const auto &o : orbits(a))
    CHECK(o.size() == 7);
  for (std::uint32_t c = 0; c < 21; ++c)
    CHECK(stabilizer(a, c).size() == 1);
  // rebuilding with full validation accepts the same permutations
  CHECK_NOTHROW(ChamberAction::make(fixture::fano(), a.group(), a.permutations()));
}

TEST_CASE("invalid actions are rejected with the right fault") {
  const auto b = fixture::fano();
  const auto &w = b->system();
  std::uint32_t c = 0, d = 0;
  for (d = 1; d < b->size(); ++d)
    if (b->dist(c, d) == w.generator(0))
      break;
  auto swap = identity_perm(b->size());
  std::swap(swap[c], swap[d]);
  try {
    ChamberAction::make(b, FiniteGroup::cyclic(2), {identity_perm(b->size()), swap});
    FAIL("transposition accepted");
  } catch (const ActionError &e) {
    CHECK(e.fault() == ActionFault::not_type_preserving);
    CHECK(std::string(e.what()).rfind("not type-preserving", 0) == 0);
  }

  auto not_perm = identity_perm(b->size());
  not_perm[1] = 0;
  try {
    ChamberAction::make(b, FiniteGroup::cyclic(2), {identity_perm(b->size()), not_perm});
    FAIL("non-bijection accepted");
  } catch (const ActionError &e) {
    CHECK(e.fault() == ActionFault::not_a_permutation);
  }

  try {
    ChamberAction::make(b, FiniteGroup::cyclic(2), {identity_perm(b->size())});
    FAIL("short action accepted");
  } catch (const ActionError &e) {
    CHECK(e.fault() == ActionFault::size_mismatch);
  }

  // the Singer permutations with the group law of Z/7 scrambled
  const auto &s = *fixture::singer();
  auto perms = s.permutations();
  std::swap(perms[2], perms[3]);
  try {
    ChamberAction::make(b, s.group(), perms);
    FAIL("incompatible action accepted");
  } catch (const ActionError &e) {
    CHECK(e.fault() == ActionFault::compatibility);
  }

  CHECK_NOTHROW(ChamberAction::make(b, FiniteGroup::trivial(), {identity_perm(b->size())}));
}

TEST_CASE("GL(3,2) on the Fano flags") {
  const auto &g = fixture::gl32();
  const auto &a = *g.action;
  CHECK_FALSE(is_free(a));
  CHECK(orbits(a).size() == 1);
  const auto stab = stabilizer(a, g.standard_chamber);
  CHECK(stab.size() == 8);
  for (auto x : stab) {
    const auto &m = g.gl->matrices[x];
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(2, 0) == 0);
    CHECK(m.at(2, 1) == 0);
  }
  CHECK(orbit_representatives(a) == std::vector<std::uint32_t>{g.standard_chamber});
}

TEST_CASE("the Singer quotient") {
  const auto &q = fixture::singer_quotient();
  const auto &w = q.wgroupoid;
  CHECK(w.chamber_count() == 3);
  CHECK(w.edge_count() == 63);
  CHECK(check_axioms(w).all());
  const auto &b = *fixture::fano();
  const auto &a = *q.action;
  for (std::uint32_t i = 0; i < q.orbit_reps.size(); ++i)
    CHECK(w.groupoid().vertex_name(i) == b.name(q.orbit_reps[i]));
  for (EdgeId e = 0; e < w.edge_count(); ++e) {
    const auto &l = q.labels[e];
    CHECK(q.edge(l.from, l.to, l.element) == e);
    CHECK(w.delta(e) == b.dist(q.orbit_reps[l.from], a.act(l.element, q.orbit_reps[l.to])));
  }
  // loops at a vertex: W-length of g is dist(C, gC)
  for (VertexId v = 0; v < 3; ++v)
    for (GroupElement g = 0; g < 7; ++g)
      CHECK(w.delta(q.edge(v, v, g)) == b.dist(q.orbit_reps[v], a.act(g, q.orbit_reps[v])));
}

TEST_CASE("free quotients biject with orbits of chamber pairs") {
  const auto &q = fixture::singer_quotient();
  const auto &a = *q.action;
  const auto &b = a.building();
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (EdgeId e = 0; e < q.wgroupoid.edge_count(); ++e) {
    const auto &l = q.labels[e];
    const std::uint32_t c = q.orbit_reps[l.from], d = a.act(l.element, q.orbit_reps[l.to]);
    // canonical representative of the pair orbit: translate so the first chamber is the least
    std::pair<std::uint32_t, std::uint32_t> least{c, d};
    for (GroupElement g = 0; g < a.group().order(); ++g)
      least = std::min(least, {a.act(g, c), a.act(g, d)});
    CHECK(seen.insert(least).second);
    CHECK(q.wgroupoid.delta(e) == b.dist(least.first, least.second));
  }
  CHECK(seen.size() * a.group().order() == b.size() * b.size());
}

TEST_CASE("strictness of a quotient matches freeness of the action") {
  CHECK(check_axioms(fixture::singer_quotient().wgroupoid).strict == is_free(*fixture::singer()));
  CHECK(check_axioms(fixture::gl_quotient().wgroupoid).strict == is_free(*fixture::gl32().action));
  CHECK(fixture::gl_quotient().wgroupoid.edge_count() == 168);
}

TEST_CASE("quotient by the trivial group is the building itself") {
  const auto b = fixture::fano();
  const auto a = std::make_shared<const ChamberAction>(
      ChamberAction::make(b, FiniteGroup::trivial(), {identity_perm(b->size())}));
  const auto q = quotient(a);
  const auto &direct = *fixture::fano_wgroupoid();
  CHECK(q.wgroupoid.chamber_count() == 21);
  CHECK(q.wgroupoid.edge_count() == direct.edge_count());
  const auto &g = q.wgroupoid.groupoid();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto name = g.vertex_name(g.source(e)) + "->" + g.vertex_name(g.target(e));
    CHECK(q.wgroupoid.delta(e) == direct.delta(direct.groupoid().edge(name)));
  }
}

TEST_CASE("the GL(3,3) quotient exceeds the table budget") {
  const auto g = gl_building(3, 3);
  CHECK(g.building->size() == 52);
  CHECK(g.gl->group.order() == 11232);
  CHECK(orbits(*g.action).size() == 1);
  CHECK(stabilizer(*g.action, g.standard_chamber).size() == 216);
  CHECK_THROWS_AS(quotient(g.action), CapacityError);
}
