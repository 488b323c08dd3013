#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "wg/bruhat.hpp"
#include "wg/covering.hpp"
#include "wg/io.hpp"

using namespace wg;

namespace {

std::filesystem::path scratch(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "wg_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string format_message(const std::string &text) {
  try {
    parse_document(text, "doc");
  } catch (const FormatError &e) {
    return e.what();
  }
  FAIL("document accepted");
  return {};
}

} // namespace

TEST_CASE("envelope round trip") {
  const auto doc = make_document(DocumentKind::building, building_to_json(*fixture::fano()));
  const auto text = dump(doc);
  CHECK(text.back() == '\n');
  const auto again = parse_document(text);
  CHECK(again == doc);
  CHECK(dump(again) == text);

  const auto path = scratch("fano.json");
  save(doc, path);
  CHECK(load(path) == doc);
  CHECK_THROWS_AS(load(scratch("missing.json")), IoError);
}

TEST_CASE("malformed documents") {
  const auto text = dump(make_document(DocumentKind::coxeter, coxeter_to_json(CoxeterMatrix::type_a(2))));
  const auto truncated = text.substr(0, text.size() / 2);
  CHECK(format_message(truncated).find("parse error at line") != std::string::npos);

  auto j = json::parse(text);
  j["kind"] = "spaceship";
  CHECK(format_message(j.dump()).find("spaceship") != std::string::npos);

  j = json::parse(text);
  j["format_version"] = 2;
  CHECK(format_message(j.dump()).find("version") != std::string::npos);

  j = json::parse(text);
  j["kind"] = "building";
  CHECK_THROWS_AS(parse_document(j.dump()), FormatError);

  CHECK_THROWS_AS(check_shape(DocumentKind::groupoid, json::object()), FormatError);
  CHECK_THROWS_AS(parse_kind("nope"), FormatError);
  for (auto k : {DocumentKind::coxeter, DocumentKind::groupoid, DocumentKind::wgroupoid, DocumentKind::building,
                 DocumentKind::incidence, DocumentKind::action, DocumentKind::bruhat, DocumentKind::morphism})
    CHECK(parse_kind(to_string(k)) == k);
}

TEST_CASE("payload converters round trip") {
  const auto m = CoxeterMatrix::dihedral(5);
  CHECK(coxeter_from_json(coxeter_to_json(m)) == m);

  const auto g = pair_groupoid({"a", "b", "c"});
  const auto g2 = groupoid_from_json(groupoid_to_json(g));
  CHECK(g2.edge_names() == g.edge_names());

  const auto &q = fixture::singer_quotient();
  const auto qj = quotient_to_json(q);
  CHECK(qj.contains("annotation"));
  const auto w = wgroupoid_from_json(qj);
  CHECK(w.edge_count() == 63);
  for (EdgeId e = 0; e < w.edge_count(); ++e)
    CHECK(w.delta(e).word() == q.wgroupoid.delta(e).word());
  CHECK(check_axioms(w).all());

  const auto b = building_from_json(building_to_json(*fixture::fano()));
  CHECK(b.chambers() == fixture::fano()->chambers());
  CHECK(b.generator_meaning() == fixture::fano()->generator_meaning());
  CHECK(check_building(b).ok());

  const auto inc = fixture::fano_geometry();
  const auto inc2 = incidence_from_json(incidence_to_json(inc));
  CHECK(inc2.flags == inc.flags);

  const auto grp = group_from_json(group_to_json(FiniteGroup::cyclic(7)));
  CHECK(grp.order() == 7);
  CHECK(grp.mul(4, 5) == 2);

  const auto act = action_from_json(action_to_json(*fixture::singer()), fixture::fano());
  CHECK(act.permutations() == fixture::singer()->permutations());

  const auto d = gl_bruhat(3, 2);
  const auto d2 = bruhat_from_json(bruhat_to_json(d));
  CHECK(d2.cell_of.size() == 168);
  for (std::size_t k = 0; k < 168; ++k)
    CHECK(d2.cell_of[k].word() == d.cell_of[k].word());
  CHECK(d2.borel == d.borel);

  const auto u = universal_cover(std::make_shared<const WGroupoid>(q.wgroupoid), 0);
  const auto p = morphism_from_json(morphism_to_json(u.projection));
  CHECK(p.vertex_map == u.projection.vertex_map);
  CHECK(p.edge_map == u.projection.edge_map);
  CHECK(is_covering(p).ok());
}

TEST_CASE("invalid payloads fail validation, not parsing") {
  auto a = action_to_json(*fixture::singer());
  std::swap(a["perms"]["1"], a["perms"]["2"]);
  CHECK_THROWS_AS(action_from_json(a, fixture::fano()), ValidationError);
}
