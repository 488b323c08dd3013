#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wg/bruhat.hpp"
#include "wg/linear.hpp"

using namespace wg;

namespace {

oracle::Mat3 to_mat3(const Matrix &m) {
  oracle::Mat3 out{};
  for (int i = 0; i < 9; ++i)
    out[i] = m.a[i];
  return out;
}

// Sizes of the B-double cosets of GL(3,q), B upper triangular, by brute force.
std::vector<std::size_t> double_coset_sizes(int q) {
  const auto all = oracle::all_invertible(q);
  std::vector<oracle::Mat3> borel;
  for (const auto &m : all)
    if (oracle::upper_triangular(m))
      borel.push_back(m);
  std::set<oracle::Mat3> seen;
  std::vector<std::size_t> sizes;
  for (const auto &g : all) {
    if (seen.count(g))
      continue;
    std::set<oracle::Mat3> coset;
    for (const auto &b1 : borel) {
      const auto bg = oracle::mat_mul(b1, g, q);
      for (const auto &b2 : borel)
        coset.insert(oracle::mat_mul(bg, b2, q));
    }
    seen.insert(coset.begin(), coset.end());
    sizes.push_back(coset.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::size_t> cell_sizes(const BruhatData &d) {
  std::vector<std::size_t> sizes;
  for (const auto &[w, cell] : d.cells)
    sizes.push_back(cell.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

TEST_CASE("one-chamber hypothesis") {
  try {
    from_one_chamber(fixture::singer_quotient().wgroupoid);
    FAIL("three chambers accepted");
  } catch (const HypothesisError &e) {
    CHECK(std::string(e.what()) == "not one-chamber: 3 chambers");
  }
}

TEST_CASE("the regular action of W(A2) has singleton cells") {
  const CoxeterSystem a2(CoxeterMatrix::type_a(2));
  const auto thin = std::make_shared<const Building>(thin_building(a2));
  const auto q = quotient(std::make_shared<const ChamberAction>(regular_action(thin)));
  CHECK(q.wgroupoid.chamber_count() == 1);
  CHECK(q.wgroupoid.edge_count() == 6);
  const auto d = from_one_chamber(q.wgroupoid);
  CHECK(d.cells.size() == 6);
  for (const auto &[w, cell] : d.cells)
    CHECK(cell.size() == 1);
  const auto r = check_property_B(d);
  CHECK(r.all());
  CHECK(r.bijective);
}

TEST_CASE("the GL(3,2) quotient is a Bruhat decomposition") {
  const auto d = from_one_chamber(fixture::gl_quotient().wgroupoid);
  CHECK(cell_sizes(d) == std::vector<std::size_t>{8, 16, 16, 32, 32, 64});
  const auto r = check_property_B(d);
  CHECK(r.all());
  CHECK(r.bijective);
  CHECK(r.witnesses.empty());

  // the same cells as the rank-profile computation, element by element
  const auto direct = gl_bruhat(3, 2);
  const auto &gl = *fixture::gl32().gl;
  REQUIRE(direct.group.order() == 168);
  for (GroupElement g = 0; g < 168; ++g) {
    const auto expected = direct.cell_of[gl.index_of(fixture::gl32().gl->matrices[g])];
    CHECK(d.cell_of[g].word() == expected.word());
  }
}

TEST_CASE("cell sizes agree with brute-force double cosets") {
  for (int q : {2, 3}) {
    const auto d = gl_bruhat(3, q);
    CHECK(cell_sizes(d) == double_coset_sizes(q));
    const auto gl = general_linear_group(3, q);
    for (GroupElement x : d.cell(d.system.identity()))
      CHECK(oracle::upper_triangular(to_mat3(gl.matrices[x])));
  }
  CHECK(cell_sizes(gl_bruhat(2, 3)) == std::vector<std::size_t>{12, 36});
}

TEST_CASE("words of permutation matrices") {
  const CoxeterSystem a2(CoxeterMatrix::type_a(2));
  CHECK(bruhat_word_of_matrix(identity_matrix(3), 2, a2).is_identity());
  const Matrix anti{3, {0, 0, 1, 0, 1, 0, 1, 0, 0}};
  CHECK(bruhat_word_of_matrix(anti, 2, a2) == a2.canonicalize({0, 1, 0}));
  const Matrix upper{3, {1, 1, 1, 0, 1, 1, 0, 0, 1}};
  CHECK(bruhat_word_of_matrix(upper, 2, a2).is_identity());
  const Matrix singular{3, {1, 0, 0, 0, 0, 0, 0, 0, 1}};
  CHECK_THROWS_AS(bruhat_word_of_matrix(singular, 2, a2), ValidationError);
  // the two simple transpositions land in different length-one cells
  const Matrix swap01{3, {0, 1, 0, 1, 0, 0, 0, 0, 1}};
  const Matrix swap12{3, {1, 0, 0, 0, 0, 1, 0, 1, 0}};
  const auto a = bruhat_word_of_matrix(swap01, 2, a2), b = bruhat_word_of_matrix(swap12, 2, a2);
  CHECK(a.length() == 1);
  CHECK(b.length() == 1);
  CHECK(a != b);
}

TEST_CASE("generator cells are closed under inverses") {
  const auto d = gl_bruhat(3, 3);
  for (Generator s = 0; s < 2; ++s) {
    const auto &cs = d.cell(d.system.generator(s));
    const std::set<GroupElement> members(cs.begin(), cs.end());
    for (auto x : cs)
      CHECK(members.count(d.group.inverse(x)));
  }
}

TEST_CASE("round trip through the one-chamber W-groupoid") {
  const auto d = gl_bruhat(3, 2);
  const auto g = bruhat_to_wgroupoid(d);
  CHECK(check_axioms(g).is_wgroupoid());
  const auto back = from_one_chamber(g);
  CHECK(back.cell_of == d.cell_of);
}

TEST_CASE("swapping two cell assignments breaks the decomposition") {
  const auto d = gl_bruhat(3, 2);
  const auto s = d.system.generator(0), t = d.system.generator(1);
  auto cell_of = d.cell_of;
  std::swap(cell_of[d.cell(s).front()], cell_of[d.cell(t).front()]);
  const auto bad = make_bruhat_data(d.group, d.system, cell_of);
  const auto r = check_property_B(bad);
  CHECK_FALSE(r.b);
  CHECK_FALSE(r.all());
  CHECK_FALSE(check_axioms(bruhat_to_wgroupoid(bad)).is_wgroupoid());
}

TEST_CASE("W-groupoid axioms match the Bruhat conditions under random swaps") {
  const auto d = gl_bruhat(3, 2);
  std::mt19937 rng(314);
  for (int trial = 0; trial < 25; ++trial) {
    auto cell_of = d.cell_of;
    const auto x = rng() % cell_of.size(), y = rng() % cell_of.size();
    if (x == d.group.identity() || y == d.group.identity())
      continue;
    std::swap(cell_of[x], cell_of[y]);
    const auto m = make_bruhat_data(d.group, d.system, cell_of);
    const auto r = check_property_B(m);
    const bool wg = check_axioms(bruhat_to_wgroupoid(m)).is_wgroupoid();
    CHECK(wg == (r.b_prime && r.b_double_prime && r.bijective));
  }
}
