#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "charval/permutation.hpp"

namespace charval {

inline constexpr std::size_t kDefaultOrderBound = 2500;
inline constexpr std::size_t kMaxClassCount = 128;

// Sorted element indices of a PermGroup.
using ElementSet = std::vector<int>;

// Conjugacy classes with the power and inverse maps the character table needs.
struct ClassData {
  std::vector<ElementSet> classes;
  std::vector<int> representatives;
  std::vector<std::size_t> class_sizes;
  std::vector<int> inverse_class;
  // power_classes[i][t] is the class of rep_i^t for 0 <= t < element_orders[i].
  std::vector<std::vector<int>> power_classes;
  std::vector<int> element_orders;
  // class_of[x] for every element index x.
  std::vector<int> class_of;

  std::size_t size() const noexcept { return classes.size(); }
  int power_class(int cls, long exponent) const;
};

// A permutation group held by full element enumeration, with a Cayley table
// over element indices. Element 0 is always the identity.
class PermGroup {
 public:
  static PermGroup from_generators(std::vector<Permutation> generators, int degree,
                                   std::size_t bound = kDefaultOrderBound);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<int>& generator_indices() const noexcept { return generator_indices_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

  // -1 when the permutation is not in the group.
  int index_of(const Permutation& p) const;

  int mul(int a, int b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  }
  int inv(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  int power(int a, long exponent) const;
  int commutator(int a, int b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int conjugate(int a, int by) const noexcept { return mul(mul(inv(by), a), by); }
  int element_order(int a) const noexcept { return orders_[static_cast<std::size_t>(a)]; }
  int exponent() const noexcept { return exponent_; }

  const ClassData& classes() const noexcept { return classes_; }

 private:
  PermGroup() = default;
  void build_classes();

  int degree_ = 0;
  int exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<int> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<std::uint16_t> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  ClassData classes_;
};

PermGroup group_from_generators(const std::vector<Permutation>& generators,
                                std::size_t bound = kDefaultOrderBound);

inline const ClassData& conjugacy_classes(const PermGroup& group) { return group.classes(); }

// Subgroup helpers over element indices.
ElementSet generate_subgroup(const PermGroup& group, std::span<const int> generators);
ElementSet normal_closure(const PermGroup& group, std::span<const int> generators);
bool is_subgroup(const PermGroup& group, const ElementSet& set);
bool is_normal(const PermGroup& group, const ElementSet& set);
bool is_abelian(const PermGroup& group, const ElementSet& set);
bool is_cyclic(const PermGroup& group, const ElementSet& set);
ElementSet commutator_subgroup(const PermGroup& group, const ElementSet& subgroup);
ElementSet whole_group(const PermGroup& group);
ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet classes_to_elements(const ClassData& classes, std::span<const int> class_indices);
std::size_t centralizer_order(const PermGroup& group, int element);

struct DerivedSeries {
  std::vector<ElementSet> terms;  // G = terms[0] > terms[1] > ...
  // Number of strict steps down to {1}; empty when the series stalls above {1}.
  std::optional<int> derived_length;

  bool solvable() const noexcept { return derived_length.has_value(); }
};

DerivedSeries derived_series(const PermGroup& group);
ElementSet center(const PermGroup& group);

// Sorted by (order, element indices); always contains {1} and G.
std::vector<ElementSet> normal_subgroups(const PermGroup& group);

PermGroup quotient_group(const PermGroup& group, const ElementSet& normal,
                         std::size_t bound = kDefaultOrderBound);
PermGroup direct_product(const PermGroup& h, const PermGroup& k,
                         std::size_t bound = kDefaultOrderBound);

struct FrobeniusDecomposition {
  ElementSet kernel;
  ElementSet complement;
};

struct StructureFlags {
  bool abelian = false;
  std::optional<int> elementary_abelian_prime;
  bool nilpotent = false;
  std::optional<int> p_group_prime;
  bool extraspecial = false;
  std::map<int, ElementSet> o_p;  // largest normal p-subgroup, per prime dividing |G|
  std::optional<FrobeniusDecomposition> frobenius;
};

StructureFlags structure_flags(const PermGroup& group);

bool is_nilpotent(const PermGroup& group);
bool is_extraspecial(const PermGroup& group);
std::optional<FrobeniusDecomposition> frobenius_decomposition(const PermGroup& group,
                                                              const std::vector<ElementSet>& normals);

std::vector<int> prime_divisors(long n);
// p when n = p^k for k >= 1.
std::optional<int> prime_power_base(long n);

}  // namespace charval
