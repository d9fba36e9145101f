#pragma once

#include <gmpxx.h>

#include <string_view>
#include <vector>

namespace charval {

// Weakly decreasing positive parts. Used both for partitions (irreducible
// characters of S_n) and cycle types (conjugacy classes of S_n).
class Partition {
 public:
  Partition() = default;
  // Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts the parts into decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);
  // "13,1,1" or "5^2,3" style (a^k repeats a).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  Partition transpose() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

using CycleType = Partition;

// chi_lambda(rho) by the Murnaghan-Nakayama border-strip recursion.
mpz_class mn_value(const Partition& lambda, const CycleType& rho);

// chi_lambda(1) = n! / product of hook lengths.
mpz_class hook_degree(const Partition& lambda);

bool is_self_conjugate(const Partition& lambda);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

// Sign of a permutation with the given cycle type.
int cycle_type_sign(const CycleType& rho);

}  // namespace charval
