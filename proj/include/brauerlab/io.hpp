#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "brauerlab/brauer.hpp"
#include "brauerlab/catalog.hpp"
#include "brauerlab/construct.hpp"
#include "brauerlab/fiber.hpp"
#include "brauerlab/fields.hpp"
#include "brauerlab/geometry.hpp"
#include "brauerlab/report.hpp"

namespace brauerlab::io {

using Json = nlohmann::ordered_json;

// Serialization. Every object with a parser below re-parses to an equal value.
Json to_json(const InvariantValue& x);
Json to_json(const LocalPlace& p);
Json to_json(const FieldProfile& profile);
Json to_json(const PlaceBijection& phi);
Json to_json(const CatalogPair& pair);
Json to_json(const BrauerClass& a);
Json to_json(const AdmissibleSet& set);
Json to_json(const Cardinality& c);
Json to_json(const FiberDescription& f);
Json to_json(const ComparisonResult& c);
Json to_json(const Report& r);
Json to_json(const ReciprocityCertificate& c);
Json to_json(const GroupDescriptor& g);
Json to_json(const SubmanifoldClass& s);
Json to_json(const SubmanifoldReport& r);
Json to_json(const RigidityReport& r);
Json to_json(const ScenarioReport& r);

// Parsing. `source` names the file (or other origin) in error messages, which
// also carry the JSON path of the offending field. Errors are
// Error(ParseError).
InvariantValue invariant_from_json(const Json& j, const std::string& source = "<input>");
FieldProfile profile_from_json(const Json& j, const std::string& source = "<input>");
PlaceBijection bijection_from_json(const Json& j, const std::string& source = "<input>");
CatalogPair catalog_pair_from_json(const Json& j, const std::string& source = "<input>");
BrauerClass class_from_json(const Json& j, const std::string& source = "<input>");
FiberDescription fiber_from_json(const Json& j, const std::string& source = "<input>");
GroupDescriptor descriptor_from_json(const Json& j, const std::string& source = "<input>");

Json parse_text(const std::string& text, const std::string& source);
Json read_file(const std::filesystem::path& path);

}  // namespace brauerlab::io
