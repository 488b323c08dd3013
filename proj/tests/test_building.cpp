#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wg/building.hpp"
#include "wg/linear.hpp"

using namespace wg;

TEST_CASE("thin buildings") {
  const CoxeterSystem a2(CoxeterMatrix::type_a(2));
  const auto t = thin_building(a2);
  CHECK(t.size() == 6);
  CHECK_FALSE(t.partial());
  CHECK(check_building(t).ok());
  CHECK(t.dist(t.chamber("[0]"), t.chamber("[1]")) == a2.canonicalize({0, 1}));

  CHECK(thin_building(CoxeterSystem(CoxeterMatrix::type_a(1))).size() == 2);
  CHECK(thin_building(CoxeterSystem(CoxeterMatrix::dihedral(4))).size() == 8);

  const CoxeterSystem inf(CoxeterMatrix::dihedral(0));
  CHECK_THROWS_AS(thin_building(inf), CapacityError);
  const auto ball = thin_building(inf, 3);
  CHECK(ball.partial());
  CHECK(ball.size() == 7);
  CHECK(check_building(ball).ok());
  CHECK_FALSE(thin_building(a2, 5).partial());
}

TEST_CASE("the Fano plane flag building") {
  const auto &b = *fixture::fano();
  CHECK(b.size() == 21);
  CHECK(check_building(b).ok());
  const auto census = sphere_census(b, 0);
  std::vector<std::size_t> by_length(4);
  for (const auto &[w, n] : census)
    by_length[w.length()] += n;
  CHECK(by_length == std::vector<std::size_t>{1, 4, 8, 8});
  for (std::size_t c = 0; c < b.size(); ++c)
    CHECK(sphere_census(b, c) == census);
  CHECK(b.generator_meaning().size() == 2);
}

TEST_CASE("Fano distances agree with incidence") {
  const auto geom = fixture::fano_geometry();
  const auto &b = *fixture::fano();
  std::map<std::string, int> pid, lid;
  for (const auto &p : geom.points)
    pid.emplace(p, static_cast<int>(pid.size()));
  for (const auto &l : geom.lines)
    lid.emplace(l, static_cast<int>(lid.size()));
  std::set<std::pair<int, int>> flags;
  for (const auto &[p, l] : geom.flags)
    flags.insert({pid[p], lid[l]});
  auto incident = [&](int p, int l) { return flags.count({p, l}) > 0; };
  for (const auto &[p, l] : geom.flags)
    for (const auto &[p2, l2] : geom.flags) {
      const auto w = oracle::flag_distance(pid[p], lid[l], pid[p2], lid[l2], incident);
      CHECK(b.dist(b.chamber(flag_name(p, l)), b.chamber(flag_name(p2, l2))).word() == b.system().canonicalize(w).word());
    }
}

TEST_CASE("incidence shapes agree with Floyd-Warshall") {
  const auto check_shape = [](const IncidenceGeometry &g) {
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> id;
    for (const auto &p : g.points)
      id.emplace("p" + p, static_cast<int>(id.size()));
    for (const auto &l : g.lines)
      id.emplace("l" + l, static_cast<int>(id.size()));
    for (const auto &[p, l] : g.flags)
      edges.push_back({id["p" + p], id["l" + l]});
    const auto [girth, diameter] = oracle::girth_diameter(static_cast<int>(id.size()), edges);
    const auto shape = incidence_shape(g);
    CHECK(shape.girth == girth);
    CHECK(shape.diameter == diameter);
  };
  check_shape(fixture::fano_geometry());
  check_shape(difference_set_plane({0, 1, 3, 9}, 13));

  IncidenceGeometry k33{{"a", "b", "c"}, {"x", "y", "z"}, {}};
  for (const auto &p : k33.points)
    for (const auto &l : k33.lines)
      k33.flags.push_back({p, l});
  check_shape(k33);
  const auto digon = rank2_building(k33);
  CHECK(digon.size() == 9);
  CHECK(digon.system().matrix().at(0, 1) == 2);
  CHECK(check_building(digon).ok());

  // a hexagon with one chord has girth 4 and diameter 3
  IncidenceGeometry chord{{"1", "2", "3"}, {"a", "b", "c"}, {{"1", "a"}, {"2", "a"}, {"2", "b"}, {"3", "b"},
                                                           {"3", "c"}, {"1", "c"}, {"1", "b"}}};
  check_shape(chord);
  try {
    rank2_building(chord);
    FAIL("chorded hexagon accepted");
  } catch (const NotAPolygonError &e) {
    CHECK(e.shape().girth == 4);
    CHECK(e.shape().diameter == 3);
    CHECK(std::string(e.what()).find("girth 4, diameter 3") != std::string::npos);
  }
}

TEST_CASE("difference sets") {
  const auto pg = fixture::pg23();
  CHECK(pg->size() == 52);
  CHECK(check_building(*pg).ok());
  CHECK_THROWS_AS(difference_set_plane({0, 1, 2}, 7), ValidationError);
}

TEST_CASE("the general linear building") {
  const auto &g = fixture::gl32();
  CHECK(g.building->size() == 21);
  CHECK(g.building->name(g.standard_chamber) == "P00/L00");
  CHECK(g.standard_chamber == 0);
  CHECK(g.gl->group.order() == oracle::all_invertible(2).size());
  CHECK(gl_order(3, 3) == oracle::all_invertible(3).size());
  CHECK(check_building(*g.building).ok());
  CHECK_THROWS_AS(gl_building(3, 4), ValidationError);
  CHECK_THROWS_AS(gl_building(4, 2), ValidationError);
}

TEST_CASE("buildings and W-groupoids") {
  const auto &g = *fixture::fano_wgroupoid();
  CHECK(g.edge_count() == 441);
  CHECK(check_axioms(g).all());
  const auto back = wgroupoid_to_building(g);
  CHECK(back.size() == 21);
  for (std::size_t c = 0; c < 21; ++c)
    for (std::size_t d = 0; d < 21; ++d)
      CHECK(back.dist(c, d) == fixture::fano()->dist(c, d));

  try {
    wgroupoid_to_building(fixture::singer_quotient().wgroupoid);
    FAIL("quotient accepted as a building");
  } catch (const HypothesisError &e) {
    CHECK(std::string(e.what()).find("not simply connected") != std::string::npos);
  }
}

TEST_CASE("building check finds corrupted distances") {
  const auto &b = *fixture::fano();
  const auto &w = b.system();
  const auto r1 = check_building(b.with_dist(0, 0, w.generator(0)));
  CHECK_FALSE(r1.wd1);
  const auto r2 = check_building(b.with_dist(0, 5, w.canonicalize({0, 1, 0})));
  CHECK_FALSE(r2.ok());
  CHECK_FALSE(r2.witnesses.empty());
}
