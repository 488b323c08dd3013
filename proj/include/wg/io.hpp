#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wg/action.hpp"
#include "wg/bruhat.hpp"
#include "wg/building.hpp"
#include "wg/covering.hpp"
#include "wg/quotient.hpp"
#include "wg/wmetric.hpp"

namespace wg {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { coxeter, groupoid, wgroupoid, building, incidence, action, bruhat, morphism };

const char *to_string(DocumentKind kind);
DocumentKind parse_kind(const std::string &text);

/// Malformed input: bad JSON, wrong shape, unknown kind or version.
class FormatError : public Error {
public:
  using Error::Error;
};

/// Envelope of every file: {"format_version": 1, "kind": ..., "payload": ...}.
struct Document {
  DocumentKind kind = DocumentKind::coxeter;
  json payload;
  int format_version = kFormatVersion;

  friend bool operator==(const Document &, const Document &) = default;
};

/// Parses and checks the envelope and the payload shape for its kind.
/// `source` names the input in error messages.
Document parse_document(std::string_view text, const std::string &source = "<input>");
Document load(const std::filesystem::path &path);

/// Normalized text: two-space indentation, sorted keys, trailing newline.
std::string dump(const Document &doc);
void save(const Document &doc, const std::filesystem::path &path);

/// Throws FormatError naming the first missing or mistyped field.
void check_shape(DocumentKind kind, const json &payload);

json coxeter_to_json(const CoxeterMatrix &m);
CoxeterMatrix coxeter_from_json(const json &j);

json groupoid_to_json(const FiniteGroupoid &g);
FiniteGroupoid groupoid_from_json(const json &j);

json wgroupoid_to_json(const WGroupoid &g);
WGroupoid wgroupoid_from_json(const json &j);
/// Adds the annotation block (orbit representatives, group element per edge).
json quotient_to_json(const QuotientWGroupoid &q);

json building_to_json(const Building &b);
Building building_from_json(const json &j);

json incidence_to_json(const IncidenceGeometry &g);
IncidenceGeometry incidence_from_json(const json &j);

/// Throws CapacityError when the multiplication table is over table_budget().
json group_to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const json &j);

json action_to_json(const ChamberAction &a);
/// Validated with ChamberAction::make.
ChamberAction action_from_json(const json &j, std::shared_ptr<const Building> building);

json bruhat_to_json(const BruhatData &d);
BruhatData bruhat_from_json(const json &j);

json morphism_to_json(const WGroupoidMorphism &m);
WGroupoidMorphism morphism_from_json(const json &j);

Document make_document(DocumentKind kind, json payload);

} // namespace wg
