#include "charval/permutation.hpp"

#include <numeric>
#include <sstream>

#include "charval/error.hpp"

namespace charval {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || static_cast<std::size_t>(image) >= images_.size()) {
      throw Error(ErrorCode::PointOutOfRange, "image " + std::to_string(image));
    }
    if (seen[static_cast<std::size_t>(image)]) {
      throw Error(ErrorCode::RepeatedPoint, "image " + std::to_string(image) + " repeated");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return result;
}

Permutation Permutation::power(long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

int Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  long result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long length = 0;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images_[p])) {
      seen[p] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return static_cast<int>(result);
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out << '(';
    bool first = true;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images_[p])) {
      seen[p] = true;
      if (!first) out << ' ';
      out << p + 1;
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compose permutations of different degrees");
  }
  Permutation result;
  result.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    result.images_[i] = b.images_[static_cast<std::size_t>(a.images_[i])];
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

Permutation perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point < 0 || point >= degree) {
        throw Error(ErrorCode::PointOutOfRange,
                    "point " + std::to_string(point) + " outside degree " + std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(point)]) {
        throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(point) + " occurs twice");
      }
      used[static_cast<std::size_t>(point)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace charval
