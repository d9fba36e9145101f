#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "charval/char_table.hpp"
#include "charval/invariants.hpp"
#include "charval/verify.hpp"

namespace charval {

using Json = nlohmann::ordered_json;

// Key order is fixed so output is byte-stable for golden files.
Json to_json(const std::string& name, const CharTable& table);
Json to_json(const InvariantReport& report);
Json to_json(const Verdict& verdict);
Json to_json(const std::vector<Verdict>& verdicts);

}  // namespace charval
