#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "charval/permutation.hpp"

namespace charval {

struct GroupDescription {
  int degree = 0;
  std::vector<Permutation> generators;
};

// Text format: first non-comment line `degree N`, then one generator per line in
// cycle notation with 1-based points, e.g. `(1 2 3)(4 5)`. Blank lines and text
// after `#` are ignored. Errors carry ErrorCode::ParseError with line:column.
GroupDescription parse_group_text(std::string_view text);
GroupDescription read_group_file(const std::string& path);

// Inverse of parse_group_text for a degree and generator list.
std::string format_group_text(int degree, const std::vector<Permutation>& generators);

}  // namespace charval
