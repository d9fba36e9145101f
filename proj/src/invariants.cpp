#include "charval/invariants.hpp"

#include <algorithm>

namespace charval {

std::vector<Cyc> canonical_value_set(std::vector<Cyc> values) {
  std::sort(values.begin(), values.end(), display_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool contains(const std::vector<Cyc>& set, const Cyc& value) {
  return std::binary_search(set.begin(), set.end(), value, display_less);
}

std::vector<Cyc> per_char_values(const CharTable& table, std::size_t row) {
  return canonical_value_set(table.rows.at(row).values);
}

std::vector<int> root_of_unity_elements(const CharTable& table) {
  std::vector<int> out;
  const Cyc one(1);
  for (std::size_t c = 0; c < table.classes().size(); ++c) {
    bool unit = std::all_of(table.rows.begin(), table.rows.end(), [&](const Character& chi) {
      return classify(chi.values[c]).abs_squared == one;
    });
    if (unit) out.push_back(static_cast<int>(c));
  }
  return out;
}

InvariantReport report(const CharTable& table) {
  const PermGroup& group = *table.group;
  InvariantReport r;
  r.order = group.order();
  r.class_count = table.classes().size();

  std::vector<Cyc> all;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const Character& chi = table.rows[row];
    all.insert(all.end(), chi.values.begin(), chi.values.end());
    r.cd.push_back(chi.degree);
    r.per_char_cv_sizes.push_back(per_char_values(table, row).size());
    r.cod.push_back(codegree(table, row));
    r.b = std::max(r.b, chi.degree);
  }
  r.cv = canonical_value_set(std::move(all));
  std::sort(r.cd.begin(), r.cd.end());
  r.cd.erase(std::unique(r.cd.begin(), r.cd.end()), r.cd.end());
  for (const auto& v : r.cv) {
    const bool is_degree = v.is_rational() && v.rational().get_den() == 1 && v.rational().get_num().fits_slong_p() &&
                           std::binary_search(r.cd.begin(), r.cd.end(), v.rational().get_num().get_si());
    if (!is_degree) r.cdc.push_back(v);
    if (!classify(v).is_positive_natural) r.ncv.push_back(v);
  }
  r.dl = derived_series(group).derived_length;
  r.is_rational_group = std::all_of(r.cv.begin(), r.cv.end(), [](const Cyc& v) { return v.is_rational(); });
  r.root_of_unity_elements = root_of_unity_elements(table);
  r.flags = structure_flags(group);
  return r;
}

}  // namespace charval
