#include <doctest.h>

#include <random>

#include "wg/group.hpp"
#include "wg/groupoid.hpp"

using namespace wg;

namespace {

RawGroupoid two_point_raw() {
  RawGroupoid raw;
  raw.vertices = {"a", "b"};
  raw.edges = {{"1a", "a", "a", "1a"}, {"1b", "b", "b", "1b"}, {"f", "a", "b", "g"}, {"g", "b", "a", "f"}};
  raw.identities = {{"a", "1a"}, {"b", "1b"}};
  raw.compose = {{"1a", "1a", "1a"}, {"1a", "f", "f"}, {"f", "1b", "f"}, {"f", "g", "1a"},
                 {"1b", "1b", "1b"}, {"1b", "g", "g"}, {"g", "1a", "g"}, {"g", "f", "1b"}};
  return raw;
}

GroupoidFault fault_of(const RawGroupoid &raw) {
  try {
    FiniteGroupoid::build(raw);
  } catch (const GroupoidError &e) {
    return e.fault();
  }
  FAIL("groupoid accepted");
  return GroupoidFault::empty;
}

} // namespace

TEST_CASE("finite groups") {
  const auto c7 = FiniteGroup::cyclic(7);
  CHECK(c7.order() == 7);
  CHECK_FALSE(c7.validate());
  CHECK(c7.element_order(3) == 7);
  CHECK(c7.mul(3, 5) == 1);
  CHECK(c7.inverse(2) == 5);
  CHECK(FiniteGroup::trivial().order() == 1);

  // a loop of order 5 with an involution cannot be a group
  std::vector<GroupElement> table = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(FiniteGroup::from_table({"e", "a", "b", "c", "d"}, table).validate());
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {0, 1, 1, 5}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {0, 1, 1}), ValidationError);
}

TEST_CASE("pair groupoids") {
  CHECK(pair_groupoid({"x", "y", "z"}).edge_count() == 9);
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i)
    names.push_back("c" + std::to_string(i));
  const auto p21 = pair_groupoid(names);
  CHECK(p21.edge_count() == 441);
  CHECK_NOTHROW(p21.validate());
  CHECK(is_connected(p21));
  CHECK(is_simply_connected(p21));
  const auto g = p21.edge("c2->c5");
  CHECK(p21.edge_name(p21.inverse(g)) == "c5->c2");
  CHECK(p21.edge_name(*p21.compose(g, p21.edge("c5->c9"))) == "c2->c9");
  CHECK_FALSE(p21.compose(g, g));
  CHECK(hom(p21, 3, 4).size() == 1);
}

TEST_CASE("one-vertex groupoid of a cyclic group") {
  const auto g = group_groupoid(FiniteGroup::cyclic(7));
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 7);
  CHECK_NOTHROW(g.validate());
  CHECK_FALSE(is_simply_connected(g));
  const auto lg = local_group(g, 0);
  CHECK(lg.group.order() == 7);
}

TEST_CASE("validated construction from raw tables") {
  const auto ok = FiniteGroupoid::build(two_point_raw());
  CHECK(ok.edge_count() == 4);
  CHECK(is_simply_connected(ok));
  CHECK(ok.to_raw().edges.size() == 4);

  auto raw = two_point_raw();
  raw.compose.push_back({"f", "f", "f"});
  CHECK(fault_of(raw) == GroupoidFault::non_composable_pair);

  raw = two_point_raw();
  raw.compose.pop_back();
  CHECK(fault_of(raw) == GroupoidFault::missing_composition);

  raw = two_point_raw();
  raw.edges.push_back({"f", "a", "b", "g"});
  CHECK(fault_of(raw) == GroupoidFault::duplicate_id);

  raw = two_point_raw();
  raw.edges[2].to = "zz";
  CHECK(fault_of(raw) == GroupoidFault::dangling_reference);

  raw = two_point_raw();
  raw.compose[3] = {"f", "g", "f"};
  const auto fault = fault_of(raw);
  CHECK((fault == GroupoidFault::wrong_endpoints || fault == GroupoidFault::inverse_law));

  CHECK(fault_of(RawGroupoid{}) == GroupoidFault::empty);
}

TEST_CASE("components and disjoint unions") {
  const auto u = disjoint_union(pair_groupoid({"a", "b"}), group_groupoid(FiniteGroup::cyclic(3), "c"));
  CHECK(u.vertex_count() == 3);
  CHECK(u.edge_count() == 7);
  CHECK_FALSE(is_connected(u));
  CHECK(components(u).size() == 2);
  CHECK(hom(u, 0, 2).empty());
  CHECK_NOTHROW(u.validate());

  std::vector<EdgeId> map;
  const auto sub = subgroupoid(u, {0, 1}, [](EdgeId) { return true; }, &map);
  CHECK(sub.edge_count() == 4);
  for (EdgeId e = 0; e < sub.edge_count(); ++e)
    CHECK(sub.edge_name(e) == u.edge_name(map[e]));
}

TEST_CASE("groupoid laws on random composites") {
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i)
    names.push_back(std::to_string(i));
  const auto g = disjoint_union(pair_groupoid(names), group_groupoid(FiniteGroup::cyclic(5), "z"));
  std::mt19937 rng(7);
  std::uniform_int_distribution<EdgeId> pick(0, static_cast<EdgeId>(g.edge_count() - 1));
  for (int trial = 0; trial < 500; ++trial) {
    const EdgeId a = pick(rng);
    const auto out = g.out_edges(g.target(a));
    const EdgeId b = out[rng() % out.size()];
    const auto out2 = g.out_edges(g.target(b));
    const EdgeId c = out2[rng() % out2.size()];
    CHECK(g.compose_unchecked(g.compose_unchecked(a, b), c) == g.compose_unchecked(a, g.compose_unchecked(b, c)));
    CHECK(g.compose_unchecked(a, g.inverse(a)) == g.identity(g.source(a)));
    CHECK(g.compose_unchecked(g.identity(g.source(a)), a) == a);
    CHECK(g.source(g.compose_unchecked(a, b)) == g.source(a));
    CHECK(g.target(g.compose_unchecked(a, b)) == g.target(b));
  }
}
