#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "charval/cyclo.hpp"
#include "charval/perm_group.hpp"

namespace charval {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct Character {
  std::vector<Cyc> values;  // indexed by class
  long degree = 0;
  std::vector<int> kernel;    // classes with chi(g) = chi(1)
  std::vector<int> center_z;  // classes with |chi(g)|^2 = chi(1)^2
};

struct CharTable {
  std::shared_ptr<const PermGroup> group;
  std::vector<Character> rows;
  long dixon_prime = 0;

  const ClassData& classes() const { return group->classes(); }
  std::size_t size() const noexcept { return rows.size(); }
};

// a(i, j, k) = #{(x, y) : x in C_i, y in C_j, x y = z_k} for the representative z_k.
class ClassCoefficients {
 public:
  explicit ClassCoefficients(const PermGroup& group);

  std::size_t class_count() const noexcept { return k_; }
  long operator()(std::size_t i, std::size_t j, std::size_t l) const noexcept { return data_[(i * k_ + j) * k_ + l]; }

 private:
  std::size_t k_;
  std::vector<long> data_;
};

inline ClassCoefficients class_mult_coeffs(const PermGroup& group) { return ClassCoefficients(group); }

// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order).
long choose_dixon_prime(long order, long exponent);
inline long choose_dixon_prime(const PermGroup& group) {
  return choose_dixon_prime(static_cast<long>(group.order()), group.exponent());
}

struct TableOptions {
  std::uint64_t seed = kDefaultSeed;
};

// Exact irreducible characters by the Burnside-Dixon-Schneider method. Rows are
// sorted by degree, then by the display strings of their values. Both
// orthogonality relations are verified before returning.
CharTable character_table(std::shared_ptr<const PermGroup> group, const TableOptions& options = {});
CharTable character_table(const PermGroup& group, const TableOptions& options = {});

// Throws OrthogonalityFailure unless both orthogonality relations hold exactly.
void verify_orthogonality(const CharTable& table);

// |G : ker chi| / chi(1); throws NonIntegralCodegree if that is not an integer.
long codegree(const CharTable& table, std::size_t row);

// Element indices in ker chi and Z(chi).
ElementSet kernel_elements(const CharTable& table, std::size_t row);
ElementSet center_elements(const CharTable& table, std::size_t row);

}  // namespace charval
