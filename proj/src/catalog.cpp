#include "brauerlab/catalog.hpp"

#include <cstdlib>

#include "brauerlab/error.hpp"
#include "brauerlab/io.hpp"
#include "catalog_data.hpp"

namespace brauerlab {

namespace {

std::optional<std::filesystem::path> catalog_directory(const CatalogOptions& options) {
  if (options.directory) return options.directory;
  if (const char* env = std::getenv("BRAUERLAB_CATALOG"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

void require_valid(const CatalogPair& pair, const std::string& origin) {
  Report report;
  report.merge(validate_profile(pair.source));
  report.merge(validate_profile(pair.target));
  report.merge(check_equivalence(pair), "certificate: ");
  if (!report.ok()) {
    throw Error(ErrorCode::ParseError, origin + ": catalog entry '" + pair.entry + "' is invalid: " +
                                           report.violations.front());
  }
}

}  // namespace

std::string to_string(Equivalence e) { return e == Equivalence::Local ? "local" : "arithmetic"; }

Report check_equivalence(const CatalogPair& pair) {
  return pair.equivalence == Equivalence::Local
             ? check_local_equivalence(pair.source, pair.target, pair.bijection)
             : check_arithmetic_equivalence(pair.source, pair.target, pair.bijection);
}

std::vector<std::string> embedded_catalog_entries() {
  std::vector<std::string> out;
  for (const auto& e : detail::embedded_entries()) out.emplace_back(e.name);
  return out;
}

CatalogPair load_catalog(const std::string& entry, const CatalogOptions& options) {
  CatalogPair pair;
  std::string origin;
  bool found = false;
  if (const auto dir = catalog_directory(options)) {
    const auto path = *dir / (entry + ".json");
    if (std::filesystem::is_regular_file(path)) {
      origin = path.string();
      pair = io::catalog_pair_from_json(io::read_file(path), origin);
      found = true;
    }
  }
  if (!found) {
    for (const auto& e : detail::embedded_entries()) {
      if (e.name != entry) continue;
      origin = "embedded:" + entry;
      pair = io::catalog_pair_from_json(io::parse_text(std::string(e.json), origin), origin);
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::UnknownEntry, "no catalog entry named '" + entry + "'");
  if (pair.entry != entry) {
    throw Error(ErrorCode::ParseError, origin + ": file declares entry '" + pair.entry + "'");
  }
  if (entry == "perlis8" && options.perlis_signature) {
    pair.source.signature = *options.perlis_signature;
    pair.target.signature = *options.perlis_signature;
  }
  require_valid(pair, origin);
  return pair;
}

}  // namespace brauerlab
