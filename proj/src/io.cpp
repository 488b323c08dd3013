#include "wg/io.hpp"

#include <fstream>
#include <sstream>

#include "wg/config.hpp"

namespace wg {

namespace {

constexpr std::pair<DocumentKind, const char *> kKinds[] = {
    {DocumentKind::coxeter, "coxeter"},     {DocumentKind::groupoid, "groupoid"}, {DocumentKind::wgroupoid, "wgroupoid"},
    {DocumentKind::building, "building"},   {DocumentKind::incidence, "incidence"}, {DocumentKind::action, "action"},
    {DocumentKind::bruhat, "bruhat"},       {DocumentKind::morphism, "morphism"},
};

enum class Type { object, array, integer, string, boolean };

const char *type_name(Type t) {
  switch (t) {
  case Type::object:
    return "an object";
  case Type::array:
    return "an array";
  case Type::integer:
    return "an integer";
  case Type::string:
    return "a string";
  case Type::boolean:
    return "a boolean";
  }
  return "?";
}

bool has_type(const json &j, Type t) {
  switch (t) {
  case Type::object:
    return j.is_object();
  case Type::array:
    return j.is_array();
  case Type::integer:
    return j.is_number_integer();
  case Type::string:
    return j.is_string();
  case Type::boolean:
    return j.is_boolean();
  }
  return false;
}

const json &field(const json &j, const char *name, Type t, const std::string &where) {
  if (!j.is_object())
    throw FormatError(where + " must be an object");
  auto it = j.find(name);
  if (it == j.end())
    throw FormatError(where + " is missing field '" + name + "'");
  if (!has_type(*it, t))
    throw FormatError(where + "." + name + " must be " + type_name(t));
  return *it;
}

template <class T> T get(const json &j, const std::string &where) {
  try {
    return j.get<T>();
  } catch (const json::exception &e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void check_groupoid_fields(const json &p, const std::string &where, bool with_delta) {
  field(p, "vertices", Type::array, where);
  const auto &edges = field(p, "edges", Type::array, where);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    for (const char *name : {"id", "from", "to", "inv"})
      field(edges[i], name, Type::string, at);
    if (with_delta)
      field(edges[i], "delta", Type::array, at);
  }
  field(p, "compose", Type::array, where);
  field(p, "identities", Type::object, where);
}

Word word_from_json(const json &j, const std::string &where) {
  if (!j.is_array())
    throw FormatError(where + " must be an array of generators");
  Word w;
  for (const auto &x : j) {
    if (!x.is_number_integer())
      throw FormatError(where + " must contain integers");
    w.push_back(x.get<int>());
  }
  return w;
}

json word_to_json(const Element &e) { return json(e.word()); }

} // namespace

const char *to_string(DocumentKind kind) {
  for (const auto &[k, name] : kKinds)
    if (k == kind)
      return name;
  return "?";
}

DocumentKind parse_kind(const std::string &text) {
  for (const auto &[k, name] : kKinds)
    if (text == name)
      return k;
  throw FormatError("unknown document kind '" + text + "'");
}

void check_shape(DocumentKind kind, const json &p) {
  const std::string where = std::string("payload of kind '") + to_string(kind) + "'";
  if (!p.is_object())
    throw FormatError(where + " must be an object");
  switch (kind) {
  case DocumentKind::coxeter:
    field(p, "rank", Type::integer, where);
    field(p, "matrix", Type::array, where);
    break;
  case DocumentKind::groupoid:
    check_groupoid_fields(p, where, false);
    break;
  case DocumentKind::wgroupoid:
    field(p, "coxeter", Type::object, where);
    check_groupoid_fields(p, where, true);
    break;
  case DocumentKind::building:
    field(p, "coxeter", Type::object, where);
    field(p, "chambers", Type::array, where);
    field(p, "dist", Type::object, where);
    break;
  case DocumentKind::incidence:
    field(p, "points", Type::array, where);
    field(p, "lines", Type::array, where);
    field(p, "flags", Type::array, where);
    break;
  case DocumentKind::action: {
    const auto &g = field(p, "group", Type::object, where);
    field(g, "elements", Type::array, where + ".group");
    field(g, "mult", Type::array, where + ".group");
    field(p, "perms", Type::object, where);
    break;
  }
  case DocumentKind::bruhat: {
    const auto &g = field(p, "group", Type::object, where);
    field(g, "elements", Type::array, where + ".group");
    field(g, "mult", Type::array, where + ".group");
    field(p, "coxeter", Type::object, where);
    field(p, "borel", Type::array, where);
    field(p, "cells", Type::object, where);
    break;
  }
  case DocumentKind::morphism:
    check_shape(DocumentKind::wgroupoid, field(p, "source", Type::object, where));
    check_shape(DocumentKind::wgroupoid, field(p, "target", Type::object, where));
    field(p, "vertex_map", Type::object, where);
    field(p, "edge_map", Type::object, where);
    break;
  }
}

Document parse_document(std::string_view text, const std::string &source) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError(source + ": parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + " (byte " + std::to_string(e.byte) + ")");
  }
  const std::string where = source + ": document";
  const auto &version = field(j, "format_version", Type::integer, where);
  if (version.get<long long>() != kFormatVersion)
    throw FormatError(source + ": unsupported format_version " + version.dump() + " (expected " +
                      std::to_string(kFormatVersion) + ")");
  Document doc;
  doc.kind = parse_kind(field(j, "kind", Type::string, where).get<std::string>());
  doc.payload = field(j, "payload", Type::object, where);
  try {
    check_shape(doc.kind, doc.payload);
  } catch (const FormatError &e) {
    throw FormatError(source + ": " + e.what());
  }
  return doc;
}

Document load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.string());
}

std::string dump(const Document &doc) {
  json j = {{"format_version", doc.format_version}, {"kind", to_string(doc.kind)}, {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

void save(const Document &doc, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << dump(doc);
  if (!out)
    throw IoError("error writing " + path.string());
}

Document make_document(DocumentKind kind, json payload) { return Document{kind, std::move(payload), kFormatVersion}; }

json coxeter_to_json(const CoxeterMatrix &m) { return {{"rank", m.rank()}, {"matrix", m.entries()}}; }

CoxeterMatrix coxeter_from_json(const json &j) {
  const std::string where = "coxeter";
  const int rank = get<int>(field(j, "rank", Type::integer, where), where + ".rank");
  auto entries = get<std::vector<std::vector<int>>>(field(j, "matrix", Type::array, where), where + ".matrix");
  if (static_cast<int>(entries.size()) != rank)
    throw FormatError("coxeter.matrix has " + std::to_string(entries.size()) + " rows, rank is " +
                      std::to_string(rank));
  return CoxeterMatrix(std::move(entries));
}

json groupoid_to_json(const FiniteGroupoid &g) {
  const auto raw = g.to_raw();
  json edges = json::array();
  for (const auto &e : raw.edges)
    edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"inv", e.inv}});
  json compose = json::array();
  for (const auto &t : raw.compose)
    compose.push_back({t[0], t[1], t[2]});
  return {{"vertices", raw.vertices}, {"edges", edges}, {"compose", compose}, {"identities", raw.identities}};
}

FiniteGroupoid groupoid_from_json(const json &j) {
  const std::string where = "groupoid";
  check_groupoid_fields(j, where, false);
  RawGroupoid raw;
  raw.vertices = get<std::vector<std::string>>(j.at("vertices"), where + ".vertices");
  for (const auto &e : j.at("edges"))
    raw.edges.push_back({e.at("id").get<std::string>(), e.at("from").get<std::string>(),
                         e.at("to").get<std::string>(), e.at("inv").get<std::string>()});
  for (const auto &t : j.at("compose")) {
    if (!t.is_array() || t.size() != 3)
      throw FormatError("groupoid.compose entries must be [g, h, gh] triples");
    raw.compose.push_back({get<std::string>(t[0], "compose"), get<std::string>(t[1], "compose"),
                           get<std::string>(t[2], "compose")});
  }
  raw.identities = get<std::map<std::string, std::string>>(j.at("identities"), where + ".identities");
  return FiniteGroupoid::build(raw);
}

json wgroupoid_to_json(const WGroupoid &g) {
  json j = groupoid_to_json(g.groupoid());
  j["coxeter"] = coxeter_to_json(g.system().matrix());
  auto &edges = j["edges"];
  for (auto &e : edges)
    e["delta"] = word_to_json(g.delta(g.groupoid().edge(e["id"].get<std::string>())));
  return j;
}

WGroupoid wgroupoid_from_json(const json &j) {
  check_shape(DocumentKind::wgroupoid, j);
  CoxeterSystem sys(coxeter_from_json(j.at("coxeter")));
  auto base = groupoid_from_json(j);
  std::map<std::string, Word> assignment;
  for (const auto &e : j.at("edges"))
    assignment[e.at("id").get<std::string>()] = word_from_json(e.at("delta"), "delta of " + e.at("id").dump());
  return make_wgroupoid(std::move(base), std::move(sys), assignment);
}

json quotient_to_json(const QuotientWGroupoid &q) {
  json j = wgroupoid_to_json(q.wgroupoid);
  const auto &b = q.action->building();
  const auto &grp = q.action->group();
  json reps = json::array();
  for (auto r : q.orbit_reps)
    reps.push_back(b.name(r));
  json labels = json::object();
  for (EdgeId e = 0; e < q.labels.size(); ++e)
    labels[q.wgroupoid.groupoid().edge_name(e)] = grp.label(q.labels[e].element);
  j["annotation"] = {{"orbit_reps", reps}, {"edge_elements", labels}};
  return j;
}

json building_to_json(const Building &b) {
  json dist = json::object();
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t d = 0; d < b.size(); ++d)
      dist[b.name(c) + "|" + b.name(d)] = word_to_json(b.dist(c, d));
  json j = {{"coxeter", coxeter_to_json(b.system().matrix())}, {"chambers", b.chambers()}, {"dist", dist}};
  if (b.partial())
    j["partial"] = true;
  if (!b.generator_meaning().empty())
    j["generator_meaning"] = b.generator_meaning();
  return j;
}

Building building_from_json(const json &j) {
  check_shape(DocumentKind::building, j);
  CoxeterSystem sys(coxeter_from_json(j.at("coxeter")));
  auto names = get<std::vector<std::string>>(j.at("chambers"), "building.chambers");
  const auto &dist = j.at("dist");
  const std::size_t n = names.size();
  std::vector<Element> table(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) {
      const std::string key = names[c] + "|" + names[d];
      auto it = dist.find(key);
      if (it == dist.end())
        throw FormatError("building.dist is missing '" + key + "'");
      table[c * n + d] = sys.canonicalize(word_from_json(*it, "building.dist['" + key + "']"));
    }
  if (dist.size() != n * n)
    throw FormatError("building.dist has " + std::to_string(dist.size()) + " entries, expected " +
                      std::to_string(n * n));
  bool partial = false;
  if (auto it = j.find("partial"); it != j.end())
    partial = get<bool>(*it, "building.partial");
  Building b(std::move(sys), std::move(names), std::move(table), partial);
  if (auto it = j.find("generator_meaning"); it != j.end())
    b.set_generator_meaning(get<std::vector<std::string>>(*it, "building.generator_meaning"));
  return b;
}

json incidence_to_json(const IncidenceGeometry &g) {
  json flags = json::array();
  for (const auto &[p, l] : g.flags)
    flags.push_back({p, l});
  return {{"points", g.points}, {"lines", g.lines}, {"flags", flags}};
}

IncidenceGeometry incidence_from_json(const json &j) {
  check_shape(DocumentKind::incidence, j);
  IncidenceGeometry g;
  g.points = get<std::vector<std::string>>(j.at("points"), "incidence.points");
  g.lines = get<std::vector<std::string>>(j.at("lines"), "incidence.lines");
  for (const auto &f : j.at("flags")) {
    if (!f.is_array() || f.size() != 2)
      throw FormatError("incidence.flags entries must be [point, line] pairs");
    g.flags.emplace_back(get<std::string>(f[0], "flag point"), get<std::string>(f[1], "flag line"));
  }
  return g;
}

json group_to_json(const FiniteGroup &g) {
  const std::size_t n = g.order();
  if (n * n > table_budget())
    throw CapacityError("group of order " + std::to_string(n) + " is too large to serialize its table");
  json mult = json::array();
  for (GroupElement a = 0; a < n; ++a) {
    json row = json::array();
    for (GroupElement b = 0; b < n; ++b)
      row.push_back(g.mul(a, b));
    mult.push_back(std::move(row));
  }
  return {{"elements", g.labels()}, {"mult", mult}};
}

FiniteGroup group_from_json(const json &j) {
  auto labels = get<std::vector<std::string>>(field(j, "elements", Type::array, "group"), "group.elements");
  const std::size_t n = labels.size();
  const auto &mult = field(j, "mult", Type::array, "group");
  if (mult.size() != n)
    throw FormatError("group.mult has " + std::to_string(mult.size()) + " rows for " + std::to_string(n) +
                      " elements");
  std::vector<GroupElement> table;
  table.reserve(n * n);
  for (const auto &row : mult) {
    if (!row.is_array() || row.size() != n)
      throw FormatError("group.mult rows must have " + std::to_string(n) + " entries");
    for (const auto &x : row) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() >= n)
        throw FormatError("group.mult entries must be element indices below " + std::to_string(n));
      table.push_back(x.get<GroupElement>());
    }
  }
  auto g = FiniteGroup::from_table(std::move(labels), std::move(table));
  if (auto bad = g.validate())
    throw ValidationError("group table: " + *bad);
  return g;
}

json action_to_json(const ChamberAction &a) {
  const auto &b = a.building();
  json perms = json::object();
  for (GroupElement g = 0; g < a.group().order(); ++g) {
    json p = json::object();
    for (std::uint32_t c = 0; c < b.size(); ++c)
      p[b.name(c)] = b.name(a.act(g, c));
    perms[a.group().label(g)] = std::move(p);
  }
  return {{"group", group_to_json(a.group())}, {"perms", perms}};
}

ChamberAction action_from_json(const json &j, std::shared_ptr<const Building> building) {
  check_shape(DocumentKind::action, j);
  auto group = group_from_json(j.at("group"));
  const auto &perms = j.at("perms");
  const auto &b = *building;
  std::vector<ChamberPermutation> table(group.order(), ChamberPermutation(b.size()));
  for (GroupElement g = 0; g < group.order(); ++g) {
    auto it = perms.find(group.label(g));
    if (it == perms.end() || !it->is_object())
      throw FormatError("action.perms has no permutation for element '" + group.label(g) + "'");
    if (it->size() != b.size())
      throw FormatError("permutation of '" + group.label(g) + "' has " + std::to_string(it->size()) +
                        " entries for " + std::to_string(b.size()) + " chambers");
    for (std::uint32_t c = 0; c < b.size(); ++c) {
      auto img = it->find(b.name(c));
      if (img == it->end() || !img->is_string())
        throw FormatError("permutation of '" + group.label(g) + "' does not map chamber '" + b.name(c) + "'");
      auto d = b.find(img->get<std::string>());
      if (!d)
        throw FormatError("permutation of '" + group.label(g) + "' names unknown chamber '" +
                          img->get<std::string>() + "'");
      table[g][c] = static_cast<std::uint32_t>(*d);
    }
  }
  if (perms.size() != group.order())
    throw FormatError("action.perms has entries for unknown group elements");
  return ChamberAction::make(std::move(building), std::move(group), std::move(table));
}

json bruhat_to_json(const BruhatData &d) {
  json cells = json::object();
  json borel = json::array();
  for (GroupElement g = 0; g < d.group.order(); ++g) {
    cells[d.group.label(g)] = word_to_json(d.cell_of[g]);
    borel.push_back(static_cast<bool>(d.borel[g]));
  }
  return {{"group", group_to_json(d.group)},
          {"coxeter", coxeter_to_json(d.system.matrix())},
          {"borel", borel},
          {"cells", cells}};
}

BruhatData bruhat_from_json(const json &j) {
  check_shape(DocumentKind::bruhat, j);
  auto group = group_from_json(j.at("group"));
  CoxeterSystem sys(coxeter_from_json(j.at("coxeter")));
  const auto &cells = j.at("cells");
  std::vector<Element> cell_of;
  for (GroupElement g = 0; g < group.order(); ++g) {
    auto it = cells.find(group.label(g));
    if (it == cells.end())
      throw FormatError("bruhat.cells has no entry for '" + group.label(g) + "'");
    cell_of.push_back(sys.canonicalize(word_from_json(*it, "bruhat.cells['" + group.label(g) + "']")));
  }
  auto d = make_bruhat_data(std::move(group), std::move(sys), std::move(cell_of));
  const auto borel = get<std::vector<bool>>(j.at("borel"), "bruhat.borel");
  if (borel.size() != d.borel.size() || borel != d.borel)
    throw FormatError("bruhat.borel disagrees with the cell of the identity");
  return d;
}

json morphism_to_json(const WGroupoidMorphism &m) {
  const auto &s = m.source->groupoid();
  const auto &t = m.target->groupoid();
  json vmap = json::object(), emap = json::object();
  for (VertexId v = 0; v < m.vertex_map.size(); ++v)
    vmap[s.vertex_name(v)] = t.vertex_name(m.vertex_map[v]);
  for (EdgeId e = 0; e < m.edge_map.size(); ++e)
    emap[s.edge_name(e)] = t.edge_name(m.edge_map[e]);
  return {{"source", wgroupoid_to_json(*m.source)},
          {"target", wgroupoid_to_json(*m.target)},
          {"vertex_map", vmap},
          {"edge_map", emap}};
}

WGroupoidMorphism morphism_from_json(const json &j) {
  check_shape(DocumentKind::morphism, j);
  WGroupoidMorphism m;
  m.source = std::make_shared<const WGroupoid>(wgroupoid_from_json(j.at("source")));
  m.target = std::make_shared<const WGroupoid>(wgroupoid_from_json(j.at("target")));
  const auto &s = m.source->groupoid();
  const auto &t = m.target->groupoid();
  const auto &vmap = j.at("vertex_map");
  const auto &emap = j.at("edge_map");
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    auto it = vmap.find(s.vertex_name(v));
    if (it == vmap.end() || !it->is_string())
      throw FormatError("morphism.vertex_map does not map '" + s.vertex_name(v) + "'");
    m.vertex_map.push_back(t.vertex(it->get<std::string>()));
  }
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    auto it = emap.find(s.edge_name(e));
    if (it == emap.end() || !it->is_string())
      throw FormatError("morphism.edge_map does not map '" + s.edge_name(e) + "'");
    m.edge_map.push_back(t.edge(it->get<std::string>()));
  }
  return m;
}

} // namespace wg
