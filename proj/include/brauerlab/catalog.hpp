#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "brauerlab/fields.hpp"

namespace brauerlab {

enum class Equivalence { Local, Arithmetic };

/// Two profiles with a certified place bijection and the equivalence the
/// certificate is advertised to satisfy.
struct CatalogPair {
  std::string entry;
  FieldProfile source;
  FieldProfile target;
  PlaceBijection bijection;
  Equivalence equivalence = Equivalence::Local;
  std::vector<std::string> notes;
};

struct CatalogOptions {
  /// Directory searched for <entry>.json before the embedded data. Defaults
  /// to $BRAUERLAB_CATALOG when unset.
  std::optional<std::filesystem::path> directory;
  /// Replaces the declared default signature of the perlis8 profiles.
  std::optional<ArchSignature> perlis_signature;
};

/// Loads "perlis8", "twin4", "twin8" or a file-provided entry. Throws
/// UnknownEntry for names found nowhere and ParseError for entries whose
/// profiles or certificate fail validation.
CatalogPair load_catalog(const std::string& entry, const CatalogOptions& options = {});

std::vector<std::string> embedded_catalog_entries();

Report check_equivalence(const CatalogPair& pair);

std::string to_string(Equivalence e);

}  // namespace brauerlab
