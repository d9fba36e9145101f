#include "charval/symchar.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>

#include "charval/error.hpp"

namespace charval {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto number = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidPartition, "bad number '" + std::string(token) + "'");
    }
    return value;
  };
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      auto caret = token.find('^');
      int part = number(token.substr(0, caret));
      int repeat = caret == std::string_view::npos ? 1 : number(token.substr(caret + 1));
      if (repeat < 0 || repeat > 100000) throw Error(ErrorCode::InvalidPartition, "bad repeat count");
      parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
    }
    pos = comma + 1;
  }
  return from_unsorted(std::move(parts));
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    for (int col = 0; col < parts_.front(); ++col) {
      int height = 0;
      for (int p : parts_) {
        if (p > col) ++height;
      }
      t.push_back(height);
    }
  }
  return Partition(std::move(t));
}

namespace {

// First-column hook lengths (beta numbers): parts[i] + (r - 1 - i), strictly decreasing.
std::vector<int> beta_set(const std::vector<int>& parts) {
  const int r = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (r - 1 - i);
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int r = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (r - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

class MnEvaluator {
 public:
  explicit MnEvaluator(const std::vector<int>& rho) : rho_(rho) {}

  mpz_class value(const std::vector<int>& lambda, std::size_t next) {
    if (next == rho_.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int strip = rho_[next];
    const std::vector<int> beta = beta_set(lambda);
    mpz_class total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int target = beta[i] - strip;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      // Height of the removed strip = beta numbers strictly between target and beta[i].
      int height = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++height;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      mpz_class term = value(from_beta_set(std::move(moved)), next + 1);
      if (height % 2 == 0) total += term; else total -= term;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const std::vector<int>& rho_;
  std::map<std::pair<std::vector<int>, std::size_t>, mpz_class> memo_;
};

}  // namespace

mpz_class mn_value(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.size()) {
    throw Error(ErrorCode::SizeMismatch, "partition of " + std::to_string(lambda.size()) +
                                             " against cycle type of " + std::to_string(rho.size()));
  }
  MnEvaluator evaluator(rho.parts());
  return evaluator.value(lambda.parts(), 0);
}

mpz_class hook_degree(const Partition& lambda) {
  const Partition conjugate = lambda.transpose();
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const long arm = lambda.parts()[i] - j - 1;
      const long leg = conjugate.parts()[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return numerator / hooks;
}

bool is_self_conjugate(const Partition& lambda) { return lambda.transpose() == lambda; }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

int cycle_type_sign(const CycleType& rho) {
  int even_cycles = 0;
  for (int part : rho.parts()) {
    if (part % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

}  // namespace charval
