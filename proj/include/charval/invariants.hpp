#pragma once

#include <optional>
#include <vector>

#include "charval/char_table.hpp"
#include "charval/cyclo.hpp"
#include "charval/perm_group.hpp"

namespace charval {

// Character-value invariants of one group. All value sets are sorted by
// display_less and duplicate free.
struct InvariantReport {
  std::size_t order = 0;
  std::size_t class_count = 0;
  std::vector<Cyc> cv;    // all table values
  std::vector<long> cd;   // degrees, ascending
  std::vector<Cyc> cdc;   // cv minus cd
  std::vector<Cyc> ncv;   // values that are not positive integers
  std::vector<std::size_t> per_char_cv_sizes;
  std::vector<long> cod;  // codegree per row
  long b = 0;             // largest degree
  std::optional<int> dl;  // empty when not solvable
  bool is_rational_group = false;
  std::vector<int> root_of_unity_elements;  // class indices
  StructureFlags flags;
};

// Sorts by display_less and removes duplicates.
std::vector<Cyc> canonical_value_set(std::vector<Cyc> values);
bool contains(const std::vector<Cyc>& set, const Cyc& value);

std::vector<Cyc> per_char_values(const CharTable& table, std::size_t row);
std::vector<int> root_of_unity_elements(const CharTable& table);

InvariantReport report(const CharTable& table);

}  // namespace charval
