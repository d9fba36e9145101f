#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charval/char_table.hpp"
#include "charval/invariants.hpp"
#include "charval/perm_group.hpp"

namespace charval {

// Family constructors. Each returns a permutation group with a fixed generator list.
namespace families {

PermGroup trivial();
PermGroup cyclic(int n, std::size_t bound = kDefaultOrderBound);
PermGroup elem_abelian(int p, int k, std::size_t bound = kDefaultOrderBound);
// Dihedral group of the given ORDER 2t, acting on Z_t by x -> x+1 and x -> -x.
PermGroup dihedral(int order, std::size_t bound = kDefaultOrderBound);
PermGroup sym(int n, std::size_t bound = kDefaultOrderBound);
PermGroup alt(int n, std::size_t bound = kDefaultOrderBound);
PermGroup quaternion8();
// Translations of Z_3^k together with x -> -x.
PermGroup frob_3k_2(int k, std::size_t bound = kDefaultOrderBound);
// x -> a x + b over F_q.
PermGroup gamma(int q, std::size_t bound = kDefaultOrderBound);

using IntMatrix = std::vector<std::vector<int>>;
// Affine group of (Z_m)^dim generated by the unit translations and the given matrices.
PermGroup affine(int modulus, int dim, const std::vector<IntMatrix>& linear, std::size_t bound = kDefaultOrderBound);
// Linear action of the given matrices on (Z_m)^dim, without translations.
PermGroup linear(int modulus, int dim, const std::vector<IntMatrix>& matrices, std::size_t bound = kDefaultOrderBound);
// Right regular representation of a group given by a multiplication rule on 0..n-1.
PermGroup regular(int n, const std::function<int(int, int)>& mul, const std::vector<int>& generators,
                  std::size_t bound = kDefaultOrderBound);
// (H x K) / <(z_H, z_K)> for central elements of order 2 given as element indices.
PermGroup central_product(const PermGroup& h, int z_h, const PermGroup& k, int z_k,
                          std::size_t bound = kDefaultOrderBound);

}  // namespace families

enum class Tier { Core, Optional };

// Claims a catalog entry must satisfy; unset fields are not checked.
struct ExpectedProperties {
  std::optional<std::size_t> order;
  std::optional<std::size_t> class_count;
  std::optional<std::vector<std::string>> cv;  // display strings
  std::optional<std::vector<long>> cd;
  std::optional<std::vector<std::string>> cdc;
  std::optional<std::size_t> cdc_size;
  std::optional<std::size_t> ncv_size;
  bool nonlinear_rows_have_four_values = false;
  bool all_rows_at_most_four_values = false;
  std::optional<std::size_t> max_row_values;
  std::optional<std::pair<long, std::size_t>> rows_of_degree;  // (degree, count)
  std::optional<bool> rational;
  std::optional<bool> solvable;
  std::optional<bool> nilpotent;
  std::optional<bool> extraspecial;
  std::optional<std::pair<std::size_t, std::size_t>> frobenius;  // (kernel order, complement order)
  bool frobenius_complement_cyclic = false;
  std::optional<std::size_t> unique_minimal_normal_order;
  std::optional<std::size_t> normal_subgroup_count;
  // (quotient order, count) of normal N with G/N nonabelian of that order.
  std::optional<std::pair<std::size_t, std::size_t>> nonabelian_quotients;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  std::string source;
  Tier tier = Tier::Core;
  std::function<PermGroup(std::size_t bound)> construct;
  ExpectedProperties expected;
  // Has A5 or A6 as a composition factor.
  bool excluded_composition_factor = false;
  // Catalog names of H and K when the group is built as H x K.
  std::optional<std::pair<std::string, std::string>> factors;
};

const std::vector<CatalogEntry>& catalog();
std::vector<const CatalogEntry*> catalog_entries(bool include_optional);

// Looks up a name or alias; throws UnknownName.
const CatalogEntry& find_entry(std::string_view name);

// Builds a registered entry, or a family selector such as "dihedral:14",
// "cyclic:7", "elem_abelian:2,3", "sym:5", "alt:6", "frob_3k_2:2", "gamma:8".
// Throws ConstructionMismatch when a registered entry's order differs from its claim.
PermGroup build(std::string_view name, std::size_t bound = kDefaultOrderBound);

// Failed claims of the entry, empty when every expected property holds.
std::vector<std::string> check_expected(const CatalogEntry& entry, const CharTable& table,
                                        const InvariantReport& report);

}  // namespace charval
