#pragma once

#include <string_view>
#include <vector>

namespace brauerlab::detail {

struct EmbeddedEntry {
  std::string_view name;
  std::string_view json;
};

const std::vector<EmbeddedEntry>& embedded_entries();

}  // namespace brauerlab::detail
