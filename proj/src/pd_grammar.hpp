#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quandle::detail {

struct PdEntry {
  char kind;  // 'X', 'O' or 'M'
  std::vector<std::string> labels;
  int line;
  int column;
};

/// Tokenizes `K[l1,l2,...]` entries for the kinds listed in `allowed`.
/// Separators are whitespace, commas and semicolons; `#` comments run to the
/// end of the line. Throws ParseError.
std::vector<PdEntry> scan_pd_entries(std::string_view text, std::string_view allowed);

}  // namespace quandle::detail
