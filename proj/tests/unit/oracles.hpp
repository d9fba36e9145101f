#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "charval/char_table.hpp"
#include "charval/perm_group.hpp"

// Brute-force references computed directly from permutations, without the
// Cayley table or class machinery under test.
namespace oracle {

inline std::vector<charval::Permutation> elements(const charval::PermGroup& g) { return g.elements(); }

inline std::size_t centralizer_order(const charval::PermGroup& g, const charval::Permutation& x) {
  std::size_t n = 0;
  for (const auto& y : g.elements()) {
    if (x * y == y * x) ++n;
  }
  return n;
}

inline std::set<charval::Permutation> conjugacy_class(const charval::PermGroup& g, const charval::Permutation& x) {
  std::set<charval::Permutation> out;
  for (const auto& y : g.elements()) out.insert(y.inverse() * x * y);
  return out;
}

inline std::size_t class_count(const charval::PermGroup& g) {
  std::set<std::set<charval::Permutation>> classes;
  for (const auto& x : g.elements()) classes.insert(conjugacy_class(g, x));
  return classes.size();
}

// First orthogonality with plain Cyc arithmetic: sum_i |C_i| chi(g_i) conj(psi(g_i)) = |G| delta.
inline bool first_orthogonality(const charval::CharTable& t) {
  const auto& cls = t.classes();
  for (std::size_t a = 0; a < t.rows.size(); ++a) {
    for (std::size_t b = 0; b < t.rows.size(); ++b) {
      charval::Cyc sum(0);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        sum = sum + charval::Cyc(static_cast<long>(cls.class_sizes[i])) * t.rows[a].values[i] *
                        charval::conjugate(t.rows[b].values[i]);
      }
      if (!(sum == charval::Cyc(a == b ? static_cast<long>(t.group->order()) : 0L))) return false;
    }
  }
  return true;
}

// Second orthogonality, with centralizer orders counted by brute force.
inline bool second_orthogonality(const charval::CharTable& t) {
  const auto& cls = t.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      charval::Cyc sum(0);
      for (const auto& row : t.rows) sum = sum + row.values[i] * charval::conjugate(row.values[j]);
      long expected = 0;
      if (i == j) {
        expected = static_cast<long>(centralizer_order(*t.group, t.group->element(cls.representatives[i])));
      }
      if (!(sum == charval::Cyc(expected))) return false;
    }
  }
  return true;
}

}  // namespace oracle
