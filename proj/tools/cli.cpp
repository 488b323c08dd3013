#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "wg/io.hpp"

namespace wg::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Verdict lines plus supporting facts, printed as text or JSON.
struct Report {
  struct Verdict {
    std::string name;
    bool value;
    bool required; // informational verdicts do not affect the exit code
  };
  std::vector<std::pair<std::string, json>> facts;
  std::vector<Verdict> verdicts;
  std::vector<std::string> witnesses;

  void fact(std::string key, json value) { facts.emplace_back(std::move(key), std::move(value)); }
  void verdict(std::string name, bool value, bool required = true) {
    verdicts.push_back({std::move(name), value, required});
  }
  void add_witnesses(const std::vector<Witness> &ws) {
    for (const auto &w : ws)
      witnesses.push_back(to_string(w));
  }
  bool passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.value || !v.required; });
  }

  void print(std::ostream &out, bool as_json) const {
    if (as_json) {
      json j = json::object();
      json f = json::object();
      for (const auto &[k, v] : facts)
        f[k] = v;
      json v = json::object();
      for (const auto &x : verdicts)
        v[x.name] = x.value;
      j["facts"] = f;
      j["verdicts"] = v;
      j["witnesses"] = witnesses;
      j["pass"] = passed();
      out << j.dump(2) << "\n";
      return;
    }
    for (const auto &[k, v] : facts)
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto &x : verdicts)
      out << x.name << ": " << (x.required ? (x.value ? "pass" : "FAIL") : (x.value ? "yes" : "no")) << "\n";
    for (const auto &w : witnesses)
      out << "  witness " << w << "\n";
  }
};

std::string join(const std::vector<std::size_t> &xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

void emit(const Document &doc, const std::string &path, std::ostream &out) {
  if (path.empty() || path == "-")
    out << dump(doc);
  else
    save(doc, path);
}

CoxeterMatrix matrix_from_type(const std::string &type) {
  std::smatch m;
  if (std::regex_match(type, m, std::regex(R"(A(\d+))")))
    return CoxeterMatrix::type_a(std::stoi(m[1]));
  if (std::regex_match(type, m, std::regex(R"(I2\((\d+|inf)\))")))
    return CoxeterMatrix::dihedral(m[1] == "inf" ? 0 : std::stoi(m[1]));
  if (std::regex_match(type, m, std::regex(R"(A1xA1)")))
    return CoxeterMatrix::dihedral(2);
  throw UsageError("unknown Coxeter type '" + type + "' (expected A<n>, I2(<m>) or A1xA1)");
}

std::vector<int> parse_ints(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception &) {
        throw UsageError("not an integer: '" + item + "'");
      }
    }
  return out;
}

Document expect(const std::string &path, DocumentKind kind) {
  auto doc = load(path);
  if (doc.kind != kind)
    throw FormatError(path + ": expected a '" + to_string(kind) + "' document, found '" + to_string(doc.kind) + "'");
  return doc;
}

void report_axioms(Report &r, const WGroupoid &g, bool consequences) {
  r.fact("chambers", g.chamber_count());
  r.fact("edges", g.edge_count());
  const auto ax = check_axioms(g);
  r.verdict("WG1", ax.wg1);
  r.verdict("WG2", ax.wg2);
  r.verdict("WG2'", ax.wg2prime);
  r.verdict("WG3", ax.wg3);
  r.verdict("weak", ax.weak);
  r.verdict("strict", ax.strict, false);
  r.add_witnesses(ax.witnesses);
  if (consequences) {
    const auto cons = check_consequences(g, ax);
    for (const auto &line : cons.lines) {
      if (!line.applicable) {
        r.fact(line.name, "not applicable");
        continue;
      }
      r.verdict(line.name, line.holds);
      r.add_witnesses(line.witnesses);
    }
  }
}

void report_building(Report &r, const Building &b) {
  r.fact("chambers", b.size());
  if (!b.generator_meaning().empty())
    for (std::size_t s = 0; s < b.generator_meaning().size(); ++s)
      r.fact("generator " + std::to_string(s), b.generator_meaning()[s]);
  const auto rep = check_building(b);
  r.verdict("WD1", rep.wd1);
  r.verdict("WD2", rep.wd2);
  r.verdict("WD3", rep.wd3);
  r.add_witnesses(rep.witnesses);
}

void report_bruhat(Report &r, const BruhatData &d) {
  std::vector<std::size_t> sizes;
  for (const auto &[w, cell] : d.cells)
    sizes.push_back(cell.size());
  r.fact("group order", d.group.order());
  r.fact("cells", d.cells.size());
  r.fact("cell sizes", join(sizes));
  const auto rep = check_property_B(d);
  r.verdict("(B)", rep.b);
  r.verdict("(B')", rep.b_prime);
  r.verdict("(B'')", rep.b_double_prime);
  r.verdict("Prop C(ws) in C(w)C(s)", rep.prop);
  r.verdict("bijective", rep.bijective);
  r.add_witnesses(rep.witnesses);
}

struct Options {
  bool as_json = false;
  bool consequences = false;
  std::string file, building, action, out, input, base, edge, morphism_out, incidence_out, action_out;
  std::string type, coxeter, residues, incidence;
  std::optional<int> max_length;
  int modulus = 7, n = 3, q = 2;
  std::vector<int> gl;
  bool verify = false;
};

int cmd_check(const Options &o, std::ostream &out) {
  const auto doc = load(o.file);
  Report r;
  r.fact("kind", to_string(doc.kind));
  switch (doc.kind) {
  case DocumentKind::coxeter: {
    CoxeterSystem sys(coxeter_from_json(doc.payload));
    r.fact("rank", sys.rank());
    r.fact("finite", sys.is_finite());
    if (sys.is_finite())
      r.fact("order", sys.all_elements().size());
    r.verdict("Coxeter matrix", true);
    break;
  }
  case DocumentKind::groupoid: {
    bool ok = true;
    try {
      auto g = groupoid_from_json(doc.payload);
      r.fact("vertices", g.vertex_count());
      r.fact("edges", g.edge_count());
    } catch (const GroupoidError &e) {
      ok = false;
      r.witnesses.push_back(e.what());
    }
    r.verdict("groupoid axioms", ok);
    break;
  }
  case DocumentKind::wgroupoid:
    report_axioms(r, wgroupoid_from_json(doc.payload), o.consequences);
    break;
  case DocumentKind::building:
    report_building(r, building_from_json(doc.payload));
    break;
  case DocumentKind::incidence: {
    const auto geom = incidence_from_json(doc.payload);
    const auto shape = incidence_shape(geom);
    r.fact("points", geom.points.size());
    r.fact("lines", geom.lines.size());
    r.fact("flags", geom.flags.size());
    r.fact("girth", shape.girth);
    r.fact("diameter", shape.diameter);
    r.verdict("generalized polygon", shape.connected && shape.diameter >= 2 && shape.girth == 2 * shape.diameter);
    break;
  }
  case DocumentKind::action: {
    if (o.building.empty())
      throw UsageError("checking an action needs --building");
    auto b = std::make_shared<const Building>(building_from_json(expect(o.building, DocumentKind::building).payload));
    bool ok = true;
    try {
      const auto a = action_from_json(doc.payload, b);
      r.fact("group order", a.group().order());
      r.fact("orbits", orbits(a).size());
      r.verdict("free", is_free(a), false);
    } catch (const ActionError &e) {
      ok = false;
      r.witnesses.push_back(e.what());
    }
    r.verdict("type-preserving action", ok);
    break;
  }
  case DocumentKind::bruhat:
    report_bruhat(r, bruhat_from_json(doc.payload));
    break;
  case DocumentKind::morphism: {
    const auto m = morphism_from_json(doc.payload);
    const auto rep = is_covering(m);
    r.verdict("homomorphism", rep.homomorphism);
    r.verdict("delta preserved", rep.delta_preserving);
    r.verdict("surjective", rep.surjective);
    r.verdict("out-edge bijection", rep.out_edge_bijection);
    r.add_witnesses(rep.witnesses);
    break;
  }
  }
  r.print(out, o.as_json);
  return r.passed() ? 0 : 1;
}

int cmd_build(const std::string &which, const Options &o, std::ostream &out) {
  if (which == "thin") {
    std::optional<CoxeterMatrix> m;
    if (!o.coxeter.empty())
      m = coxeter_from_json(expect(o.coxeter, DocumentKind::coxeter).payload);
    else if (!o.type.empty())
      m = matrix_from_type(o.type);
    else
      throw UsageError("build thin needs --type or --coxeter");
    CoxeterSystem sys(*m);
    emit(make_document(DocumentKind::building, building_to_json(thin_building(sys, o.max_length))), o.out, out);
  } else if (which == "plane") {
    const auto residues = parse_ints(o.residues);
    const auto geom = difference_set_plane(residues, o.modulus);
    auto b = std::make_shared<const Building>(rank2_building(geom));
    if (!o.incidence_out.empty())
      save(make_document(DocumentKind::incidence, incidence_to_json(geom)), o.incidence_out);
    if (!o.action_out.empty())
      save(make_document(DocumentKind::action, action_to_json(singer_action(b, o.modulus))), o.action_out);
    emit(make_document(DocumentKind::building, building_to_json(*b)), o.out, out);
  } else if (which == "gl") {
    const auto gb = gl_building(o.n, o.q);
    if (!o.incidence_out.empty())
      save(make_document(DocumentKind::incidence, incidence_to_json(gb.geometry)), o.incidence_out);
    if (!o.action_out.empty())
      save(make_document(DocumentKind::action, action_to_json(*gb.action)), o.action_out);
    emit(make_document(DocumentKind::building, building_to_json(*gb.building)), o.out, out);
  } else if (which == "rank2") {
    if (o.incidence.empty())
      throw UsageError("build rank2 needs --incidence");
    const auto geom = incidence_from_json(expect(o.incidence, DocumentKind::incidence).payload);
    emit(make_document(DocumentKind::building, building_to_json(rank2_building(geom))), o.out, out);
  }
  return 0;
}

int cmd_quotient(const Options &o, std::ostream &out) {
  auto b = std::make_shared<const Building>(building_from_json(expect(o.building, DocumentKind::building).payload));
  auto a = std::make_shared<const ChamberAction>(action_from_json(expect(o.action, DocumentKind::action).payload, b));
  const auto q = quotient(a);
  const auto doc = make_document(DocumentKind::wgroupoid, quotient_to_json(q));
  if (o.out.empty() || o.out == "-") {
    out << dump(doc);
    return 0;
  }
  save(doc, o.out);
  Report r;
  r.fact("chambers", q.wgroupoid.chamber_count());
  r.fact("edges", q.wgroupoid.edge_count());
  r.verdict("free", is_free(*a), false);
  r.print(out, o.as_json);
  return 0;
}

VertexId vertex_or_first(const FiniteGroupoid &g, const std::string &name) {
  if (name.empty())
    return 0;
  auto v = g.find_vertex(name);
  if (!v)
    throw UsageError("unknown chamber '" + name + "'");
  return *v;
}

int cmd_cover(const Options &o, std::ostream &out) {
  auto g = std::make_shared<const WGroupoid>(wgroupoid_from_json(expect(o.input, DocumentKind::wgroupoid).payload));
  const auto uc = universal_cover(g, vertex_or_first(g->groupoid(), o.base));
  if (!o.morphism_out.empty())
    save(make_document(DocumentKind::morphism, morphism_to_json(uc.projection)), o.morphism_out);
  const auto doc = make_document(DocumentKind::wgroupoid, wgroupoid_to_json(*uc.cover));
  if (o.out.empty() || o.out == "-") {
    out << dump(doc);
    return 0;
  }
  save(doc, o.out);
  Report r;
  r.fact("chambers", uc.cover->chamber_count());
  r.fact("deck group order", uc.deck.group.order());
  r.verdict("deck action free", uc.deck.is_free(), false);
  r.print(out, o.as_json);
  return 0;
}

int cmd_collapse(const Options &o, std::ostream &out) {
  const auto g = wgroupoid_from_json(expect(o.input, DocumentKind::wgroupoid).payload);
  try {
    const auto b = collapse_units(g);
    emit(make_document(DocumentKind::building, building_to_json(b)), o.out, out);
    return 0;
  } catch (const CollapseError &e) {
    Report r;
    r.fact("error", e.what());
    r.verdict("WD1", e.report().wd1);
    r.verdict("WD2", e.report().wd2);
    r.verdict("WD3", e.report().wd3);
    r.verdict("collapse", false);
    r.add_witnesses(e.report().witnesses);
    r.print(out, o.as_json);
    return 1;
  }
}

int cmd_bruhat(const Options &o, std::ostream &out) {
  std::optional<BruhatData> data;
  Report r;
  if (!o.gl.empty()) {
    if (o.gl.size() != 2)
      throw UsageError("--gl takes n and q");
    data = gl_bruhat(o.gl[0], o.gl[1]);
    if (o.verify && o.gl[0] == 3) {
      // Cross-check against the one-chamber quotient of the flag building.
      const auto gb = gl_building(3, o.gl[1]);
      const auto q = quotient(gb.action);
      bool agree = true;
      for (EdgeId e = 0; e < q.wgroupoid.edge_count(); ++e) {
        const auto &want = data->cell_of[q.labels[e].element];
        if (want.word() != q.wgroupoid.delta(e).word()) {
          agree = false;
          r.witnesses.push_back("oracle (" + q.wgroupoid.groupoid().edge_name(e) + "): expected " + to_string(want) +
                                ", found " + to_string(q.wgroupoid.delta(e)));
          break;
        }
      }
      r.verdict("agrees with building quotient", agree);
    }
  } else if (!o.input.empty()) {
    data = from_one_chamber(wgroupoid_from_json(expect(o.input, DocumentKind::wgroupoid).payload));
  } else {
    throw UsageError("bruhat needs --gl n q or --input");
  }
  if (!o.out.empty())
    save(make_document(DocumentKind::bruhat, bruhat_to_json(*data)), o.out);
  if (o.verify) {
    report_bruhat(r, *data);
  } else {
    std::vector<std::size_t> sizes;
    for (const auto &[w, cell] : data->cells)
      sizes.push_back(cell.size());
    r.fact("cell sizes", join(sizes));
  }
  r.print(out, o.as_json);
  return r.passed() ? 0 : 1;
}

int cmd_geodesic(const Options &o, std::ostream &out) {
  const auto g = wgroupoid_from_json(expect(o.input, DocumentKind::wgroupoid).payload);
  auto e = g.groupoid().find_edge(o.edge);
  if (!e)
    throw UsageError("unknown edge '" + o.edge + "'");
  const auto rep = geodesics(g, *e);
  const auto &base = g.groupoid();
  if (o.as_json) {
    json j = {{"edge", o.edge}, {"delta", g.delta(*e).word()}};
    json gs = json::array();
    for (const auto &[type, gal] : rep.geodesics) {
      json steps = json::array();
      for (auto s : gal.steps)
        steps.push_back(base.edge_name(s));
      gs.push_back({{"type", type}, {"steps", steps}});
    }
    json vs = json::array();
    for (const auto &v : rep.violations)
      vs.push_back({{"type", v.type}, {"count", v.count}});
    j["geodesics"] = gs;
    j["violations"] = vs;
    j["pass"] = rep.ok();
    out << j.dump(2) << "\n";
  } else {
    out << "edge " << o.edge << ": W-length " << to_string(g.delta(*e)) << "\n";
    for (const auto &[type, gal] : rep.geodesics) {
      out << "  type " << to_string(type) << ":";
      for (auto s : gal.steps)
        out << " " << base.edge_name(s);
      out << "\n";
    }
    for (const auto &v : rep.violations)
      out << "  type " << to_string(v.type) << ": " << v.count << " geodesics\n";
    out << "geodesics: " << (rep.ok() ? "pass" : "FAIL") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_info(const Options &o, std::ostream &out) {
  const auto doc = load(o.file);
  Report r;
  r.fact("kind", to_string(doc.kind));
  r.fact("format_version", doc.format_version);
  const auto &p = doc.payload;
  switch (doc.kind) {
  case DocumentKind::coxeter:
    r.fact("rank", p.at("rank"));
    break;
  case DocumentKind::groupoid:
  case DocumentKind::wgroupoid:
    r.fact("vertices", p.at("vertices").size());
    r.fact("edges", p.at("edges").size());
    if (p.contains("annotation"))
      r.fact("orbit representatives", p.at("annotation").at("orbit_reps"));
    break;
  case DocumentKind::building:
    r.fact("chambers", p.at("chambers").size());
    r.fact("rank", p.at("coxeter").at("rank"));
    if (p.contains("generator_meaning"))
      r.fact("generator meaning", p.at("generator_meaning"));
    break;
  case DocumentKind::incidence:
    r.fact("points", p.at("points").size());
    r.fact("lines", p.at("lines").size());
    r.fact("flags", p.at("flags").size());
    break;
  case DocumentKind::action:
  case DocumentKind::bruhat:
    r.fact("group order", p.at("group").at("elements").size());
    break;
  case DocumentKind::morphism:
    r.fact("source edges", p.at("source").at("edges").size());
    r.fact("target edges", p.at("target").at("edges").size());
    break;
  }
  r.print(out, o.as_json);
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"W-groupoids, buildings and Bruhat decompositions", "wgtool"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "Machine-readable reports");

  auto *check = app.add_subcommand("check", "Run the axiom battery appropriate to a document");
  check->add_option("file", o.file, "Document to check")->required();
  check->add_option("--building", o.building, "Building document (for actions)");
  check->add_flag("--consequences", o.consequences, "Also verify the derived lemmas (W-groupoids)");

  auto *build = app.add_subcommand("build", "Construct a building");
  build->require_subcommand(1);
  auto *thin = build->add_subcommand("thin", "Thin building of a Coxeter group");
  thin->add_option("--type", o.type, "A<n>, I2(<m>) or A1xA1");
  thin->add_option("--coxeter", o.coxeter, "Coxeter document");
  thin->add_option("--max-length", o.max_length, "Only the ball of this radius");
  auto *plane = build->add_subcommand("plane", "Projective plane of a difference set");
  plane->add_option("--residues", o.residues, "Comma-separated residues")->required();
  plane->add_option("--modulus", o.modulus, "Modulus")->required();
  plane->add_option("--action-out", o.action_out, "Write the cyclic shift action");
  auto *gl = build->add_subcommand("gl", "Flag building of PG(2,q) with GL(3,q)");
  gl->add_option("--n", o.n, "Matrix size (3)");
  gl->add_option("--q", o.q, "Prime field size")->required();
  gl->add_option("--action-out", o.action_out, "Write the GL action");
  auto *rank2 = build->add_subcommand("rank2", "Building of a generalized polygon");
  rank2->add_option("--incidence", o.incidence, "Incidence document")->required();
  for (auto *sub : {thin, plane, gl, rank2})
    sub->add_option("--out", o.out, "Output file (default stdout)");
  for (auto *sub : {plane, gl})
    sub->add_option("--incidence-out", o.incidence_out, "Write the incidence geometry");

  auto *quot = app.add_subcommand("quotient", "Quotient W-groupoid of a chamber action");
  quot->add_option("--building", o.building, "Building document")->required();
  quot->add_option("--action", o.action, "Action document")->required();
  quot->add_option("--out", o.out, "Output file (default stdout)");

  auto *cover = app.add_subcommand("cover", "Universal cover of a W-groupoid");
  cover->add_option("--input", o.input, "W-groupoid document")->required();
  cover->add_option("--base", o.base, "Base chamber (default: first)");
  cover->add_option("--out", o.out, "Output file (default stdout)");
  cover->add_option("--morphism-out", o.morphism_out, "Write the covering projection");

  auto *collapse = app.add_subcommand("collapse", "Identify chambers at distance 1");
  collapse->add_option("--input", o.input, "Simply connected W-groupoid document")->required();
  collapse->add_option("--out", o.out, "Output file (default stdout)");

  auto *bruhat = app.add_subcommand("bruhat", "Bruhat decomposition of a one-chamber W-groupoid or GL(n,q)");
  bruhat->add_option("--gl", o.gl, "n q")->expected(2);
  bruhat->add_option("--input", o.input, "One-chamber W-groupoid document");
  bruhat->add_flag("--verify", o.verify, "Check (B), (B'), (B'') and the proposition");
  bruhat->add_option("--out", o.out, "Write the Bruhat data");

  auto *geo = app.add_subcommand("geodesic", "Geodesics of an edge");
  geo->add_option("--input", o.input, "W-groupoid document")->required();
  geo->add_option("--edge", o.edge, "Edge id")->required();

  auto *info = app.add_subcommand("info", "Summarize a document");
  info->add_option("file", o.file, "Document")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*check)
      return cmd_check(o, out);
    if (*build) {
      for (const auto *sub : {thin, plane, gl, rank2})
        if (*sub)
          return cmd_build(sub->get_name(), o, out);
    }
    if (*quot)
      return cmd_quotient(o, out);
    if (*cover)
      return cmd_cover(o, out);
    if (*collapse)
      return cmd_collapse(o, out);
    if (*bruhat)
      return cmd_bruhat(o, out);
    if (*geo)
      return cmd_geodesic(o, out);
    if (*info)
      return cmd_info(o, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError &e) {
    err << "format error: " << e.what() << "\n";
    return 2;
  } catch (const IoError &e) {
    err << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace wg::cli
