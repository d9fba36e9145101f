#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charval {

// A bijection of {0, ..., degree-1}. Products compose left to right:
// (a * b)(i) = b(a(i)), so a word g1 g2 ... acts with g1 first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation power(long exponent) const;
  int order() const;

  // Cycle notation with 1-based points, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Product of disjoint cycles given with 0-based points; unlisted points are fixed.
Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

}  // namespace charval
