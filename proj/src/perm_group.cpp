#include "charval/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "charval/error.hpp"

namespace charval {

int ClassData::power_class(int cls, long exponent) const {
  const auto& row = power_classes[static_cast<std::size_t>(cls)];
  long m = static_cast<long>(row.size());
  long t = ((exponent % m) + m) % m;
  return row[static_cast<std::size_t>(t)];
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators, int degree,
                                     std::size_t bound) {
  if (bound > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "order bound above 65535 is not supported");
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree " + std::to_string(g.degree()) +
                                                 " differs from " + std::to_string(degree));
    }
  }

  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  const std::size_t ngens = group.generators_.size();

  // Breadth-first closure; element i = element(parent[i]) * gen[via[i]].
  std::vector<int> parent{-1};
  std::vector<int> via{-1};
  std::vector<int> right_gen;  // right_gen[x * ngens + g] = index of x * gen_g
  group.elements_.push_back(Permutation::identity(degree));
  group.index_.emplace(group.elements_.back(), 0);
  for (std::size_t x = 0; x < group.elements_.size(); ++x) {
    for (std::size_t g = 0; g < ngens; ++g) {
      Permutation product = group.elements_[x] * group.generators_[g];
      auto [it, inserted] = group.index_.try_emplace(std::move(product), static_cast<int>(group.elements_.size()));
      if (inserted) {
        if (group.elements_.size() >= bound) {
          throw Error(ErrorCode::OrderBoundExceeded,
                      "group order exceeds bound " + std::to_string(bound));
        }
        group.elements_.push_back(it->first);
        parent.push_back(static_cast<int>(x));
        via.push_back(static_cast<int>(g));
      }
      right_gen.push_back(it->second);
    }
  }

  const std::size_t n = group.elements_.size();
  group.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint16_t* row = &group.table_[x * n];
    row[0] = static_cast<std::uint16_t>(x);
    for (std::size_t i = 1; i < n; ++i) {
      int left = row[static_cast<std::size_t>(parent[i])];
      row[i] = static_cast<std::uint16_t>(right_gen[static_cast<std::size_t>(left) * ngens +
                                                    static_cast<std::size_t>(via[i])]);
    }
  }

  group.inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint16_t* row = &group.table_[x * n];
    for (std::size_t y = 0; y < n; ++y) {
      if (row[y] == 0) {
        group.inverse_[x] = static_cast<int>(y);
        break;
      }
    }
  }

  group.orders_.assign(n, 1);
  long exponent = 1;
  for (std::size_t x = 1; x < n; ++x) {
    int order = 1;
    for (int y = static_cast<int>(x); y != 0; y = group.mul(y, static_cast<int>(x))) ++order;
    group.orders_[x] = order;
    exponent = std::lcm(exponent, static_cast<long>(order));
  }
  group.exponent_ = static_cast<int>(exponent);

  for (const auto& g : group.generators_) group.generator_indices_.push_back(group.index_of(g));
  group.build_classes();
  return group;
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::power(int a, long exponent) const {
  long m = orders_[static_cast<std::size_t>(a)];
  long e = ((exponent % m) + m) % m;
  int result = 0;
  for (long i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

void PermGroup::build_classes() {
  const std::size_t n = order();
  ClassData& data = classes_;
  data.class_of.assign(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (data.class_of[start] != -1) continue;
    const int cls = static_cast<int>(data.classes.size());
    ElementSet members{static_cast<int>(start)};
    data.class_of[start] = cls;
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      for (int g : generator_indices_) {
        int c = conjugate(members[pos], g);
        if (data.class_of[static_cast<std::size_t>(c)] == -1) {
          data.class_of[static_cast<std::size_t>(c)] = cls;
          members.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    data.representatives.push_back(static_cast<int>(start));
    data.class_sizes.push_back(members.size());
    data.element_orders.push_back(element_order(static_cast<int>(start)));
    data.classes.push_back(std::move(members));
  }
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    int rep = data.representatives[c];
    data.inverse_class.push_back(data.class_of[static_cast<std::size_t>(inv(rep))]);
    std::vector<int> powers;
    int x = 0;
    for (int t = 0; t < data.element_orders[c]; ++t) {
      powers.push_back(data.class_of[static_cast<std::size_t>(x)]);
      x = mul(x, rep);
    }
    data.power_classes.push_back(std::move(powers));
  }
}

PermGroup group_from_generators(const std::vector<Permutation>& generators, std::size_t bound) {
  if (generators.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need at least one generator to infer the degree");
  }
  return PermGroup::from_generators(generators, generators.front().degree(), bound);
}

ElementSet generate_subgroup(const PermGroup& group, std::span<const int> generators) {
  std::vector<char> member(group.order(), 0);
  ElementSet elements{0};
  member[0] = 1;
  std::vector<int> gens;
  for (int g : generators) {
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  for (std::size_t pos = 0; pos < elements.size(); ++pos) {
    for (int g : gens) {
      int y = group.mul(elements[pos], g);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = 1;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

ElementSet normal_closure(const PermGroup& group, std::span<const int> generators) {
  std::vector<char> seen(group.order(), 0);
  std::vector<int> conjugates;
  for (int g : generators) {
    if (!seen[static_cast<std::size_t>(g)]) {
      seen[static_cast<std::size_t>(g)] = 1;
      conjugates.push_back(g);
    }
  }
  for (std::size_t pos = 0; pos < conjugates.size(); ++pos) {
    for (int h : group.generator_indices()) {
      int c = group.conjugate(conjugates[pos], h);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return generate_subgroup(group, conjugates);
}

bool is_subgroup(const PermGroup& group, const ElementSet& set) {
  if (set.empty() || set.front() != 0) return false;
  std::vector<char> member(group.order(), 0);
  for (int x : set) member[static_cast<std::size_t>(x)] = 1;
  for (int x : set) {
    for (int y : set) {
      if (!member[static_cast<std::size_t>(group.mul(x, y))]) return false;
    }
  }
  return true;
}

bool is_normal(const PermGroup& group, const ElementSet& set) {
  if (!is_subgroup(group, set)) return false;
  std::vector<char> member(group.order(), 0);
  for (int x : set) member[static_cast<std::size_t>(x)] = 1;
  for (int x : set) {
    for (int g : group.generator_indices()) {
      if (!member[static_cast<std::size_t>(group.conjugate(x, g))]) return false;
    }
  }
  return true;
}

bool is_abelian(const PermGroup& group, const ElementSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (group.mul(set[i], set[j]) != group.mul(set[j], set[i])) return false;
    }
  }
  return true;
}

bool is_cyclic(const PermGroup& group, const ElementSet& set) {
  return std::any_of(set.begin(), set.end(), [&](int x) {
    return static_cast<std::size_t>(group.element_order(x)) == set.size();
  });
}

ElementSet commutator_subgroup(const PermGroup& group, const ElementSet& subgroup) {
  std::vector<char> seen(group.order(), 0);
  std::vector<int> commutators;
  for (int x : subgroup) {
    for (int y : subgroup) {
      int c = group.commutator(x, y);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        commutators.push_back(c);
      }
    }
  }
  return generate_subgroup(group, commutators);
}

ElementSet whole_group(const PermGroup& group) {
  ElementSet all(group.order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet classes_to_elements(const ClassData& classes, std::span<const int> class_indices) {
  ElementSet out;
  for (int c : class_indices) {
    const auto& members = classes.classes[static_cast<std::size_t>(c)];
    out.insert(out.end(), members.begin(), members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t centralizer_order(const PermGroup& group, int element) {
  std::size_t count = 0;
  for (std::size_t y = 0; y < group.order(); ++y) {
    if (group.mul(element, static_cast<int>(y)) == group.mul(static_cast<int>(y), element)) ++count;
  }
  return count;
}

DerivedSeries derived_series(const PermGroup& group) {
  DerivedSeries series;
  series.terms.push_back(whole_group(group));
  while (true) {
    const ElementSet& last = series.terms.back();
    if (last.size() == 1) {
      series.derived_length = static_cast<int>(series.terms.size()) - 1;
      break;
    }
    ElementSet next = commutator_subgroup(group, last);
    if (next.size() == last.size()) break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

ElementSet center(const PermGroup& group) {
  ElementSet out;
  for (std::size_t x = 0; x < group.order(); ++x) {
    int xi = static_cast<int>(x);
    bool central = std::all_of(group.generator_indices().begin(), group.generator_indices().end(),
                               [&](int g) { return group.mul(xi, g) == group.mul(g, xi); });
    if (central) out.push_back(xi);
  }
  return out;
}

namespace {

// Product N*M of two normal subgroups.
ElementSet join_normal(const PermGroup& group, const ElementSet& n, const ElementSet& m) {
  std::vector<char> member(group.order(), 0);
  for (int x : n) member[static_cast<std::size_t>(x)] = 1;
  ElementSet out = n;
  for (int y : m) {
    if (member[static_cast<std::size_t>(y)]) continue;
    for (int x : n) {
      int p = group.mul(x, y);
      if (!member[static_cast<std::size_t>(p)]) {
        member[static_cast<std::size_t>(p)] = 1;
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool by_size_then_elements(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const PermGroup& group) {
  const ClassData& data = group.classes();
  if (data.size() > kMaxClassCount) {
    throw Error(ErrorCode::TooManyClasses,
                std::to_string(data.size()) + " classes exceeds " + std::to_string(kMaxClassCount));
  }
  // Every normal subgroup is a union of classes and hence a product of the
  // normal closures of its classes.
  std::vector<ElementSet> closures;
  for (std::size_t c = 1; c < data.size(); ++c) {
    int rep = data.representatives[c];
    ElementSet closure = normal_closure(group, std::span<const int>(&rep, 1));
    if (std::find(closures.begin(), closures.end(), closure) == closures.end()) {
      closures.push_back(std::move(closure));
    }
  }
  std::vector<ElementSet> found{ElementSet{0}};
  for (std::size_t pos = 0; pos < found.size(); ++pos) {
    for (const auto& closure : closures) {
      ElementSet joined = join_normal(group, found[pos], closure);
      if (std::find(found.begin(), found.end(), joined) == found.end()) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end(), by_size_then_elements);
  return found;
}

PermGroup quotient_group(const PermGroup& group, const ElementSet& normal, std::size_t bound) {
  if (!is_normal(group, normal)) {
    throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  }
  // Right cosets N x, numbered in order of their least element.
  std::vector<int> coset_of(group.order(), -1);
  int cosets = 0;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (coset_of[x] != -1) continue;
    for (int n : normal) coset_of[static_cast<std::size_t>(group.mul(n, static_cast<int>(x)))] = cosets;
    ++cosets;
  }
  std::vector<int> coset_rep(static_cast<std::size_t>(cosets), -1);
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (coset_rep[static_cast<std::size_t>(coset_of[x])] == -1) {
      coset_rep[static_cast<std::size_t>(coset_of[x])] = static_cast<int>(x);
    }
  }
  std::vector<Permutation> generators;
  for (int g : group.generator_indices()) {
    std::vector<int> images(static_cast<std::size_t>(cosets));
    for (int c = 0; c < cosets; ++c) {
      images[static_cast<std::size_t>(c)] =
          coset_of[static_cast<std::size_t>(group.mul(coset_rep[static_cast<std::size_t>(c)], g))];
    }
    generators.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(generators), cosets, bound);
}

PermGroup direct_product(const PermGroup& h, const PermGroup& k, std::size_t bound) {
  if (h.order() * k.order() > bound) {
    throw Error(ErrorCode::OrderBoundExceeded, "direct product order " +
                                                   std::to_string(h.order() * k.order()) +
                                                   " exceeds bound " + std::to_string(bound));
  }
  const int degree = h.degree() + k.degree();
  std::vector<Permutation> generators;
  for (const auto& g : h.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < h.degree(); ++i) images[static_cast<std::size_t>(i)] = g(i);
    generators.emplace_back(std::move(images));
  }
  for (const auto& g : k.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (int i = 0; i < k.degree(); ++i) images[static_cast<std::size_t>(h.degree() + i)] = h.degree() + g(i);
    generators.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(generators), degree, bound);
}

std::vector<int> prime_divisors(long n) {
  std::vector<int> primes;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

std::optional<int> prime_power_base(long n) {
  auto primes = prime_divisors(n);
  if (primes.size() != 1) return std::nullopt;
  return primes.front();
}

}  // namespace charval
