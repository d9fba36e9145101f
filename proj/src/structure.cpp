#include <algorithm>

#include "charval/perm_group.hpp"

namespace charval {

bool is_nilpotent(const PermGroup& group) {
  // Upper central series: Z_{i+1} = { g : [g, s] in Z_i for every generator s }.
  std::vector<char> current(group.order(), 0);
  current[0] = 1;
  std::size_t size = 1;
  while (true) {
    std::vector<char> next(group.order(), 0);
    std::size_t next_size = 0;
    for (std::size_t x = 0; x < group.order(); ++x) {
      bool ok = std::all_of(group.generator_indices().begin(), group.generator_indices().end(), [&](int s) {
        return current[static_cast<std::size_t>(group.commutator(static_cast<int>(x), s))] != 0;
      });
      if (ok) {
        next[x] = 1;
        ++next_size;
      }
    }
    if (next_size == group.order()) return true;
    if (next_size == size) return false;
    current = std::move(next);
    size = next_size;
  }
}

bool is_extraspecial(const PermGroup& group) {
  auto p = prime_power_base(static_cast<long>(group.order()));
  if (!p) return false;
  ElementSet z = center(group);
  if (z.size() != static_cast<std::size_t>(*p)) return false;
  if (commutator_subgroup(group, whole_group(group)) != z) return false;
  std::vector<char> central(group.order(), 0);
  for (int x : z) central[static_cast<std::size_t>(x)] = 1;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (!central[static_cast<std::size_t>(group.power(static_cast<int>(x), *p))]) return false;
  }
  return true;
}

namespace {

bool centralizers_inside(const PermGroup& group, const std::vector<char>& in_kernel, const ElementSet& kernel) {
  for (int n : kernel) {
    if (n == 0) continue;
    for (std::size_t g = 0; g < group.order(); ++g) {
      if (in_kernel[g]) continue;
      if (group.mul(n, static_cast<int>(g)) == group.mul(static_cast<int>(g), n)) return false;
    }
  }
  return true;
}

// Subgroup generated by gens if it has at most `limit` elements, else empty.
ElementSet bounded_subgroup(const PermGroup& group, std::span<const int> gens, std::size_t limit) {
  std::vector<char> member(group.order(), 0);
  ElementSet elements{0};
  member[0] = 1;
  for (std::size_t pos = 0; pos < elements.size(); ++pos) {
    for (int g : gens) {
      int y = group.mul(elements[pos], g);
      if (!member[static_cast<std::size_t>(y)]) {
        if (elements.size() == limit) return {};
        member[static_cast<std::size_t>(y)] = 1;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::optional<ElementSet> find_complement(const PermGroup& group, const std::vector<char>& in_kernel,
                                          std::size_t complement_order) {
  auto meets_trivially = [&](const ElementSet& h) {
    return std::none_of(h.begin() + 1, h.end(), [&](int x) { return in_kernel[static_cast<std::size_t>(x)] != 0; });
  };
  auto admissible = [&](int x) {
    return x != 0 && !in_kernel[static_cast<std::size_t>(x)] &&
           complement_order % static_cast<std::size_t>(group.element_order(x)) == 0;
  };
  const ClassData& data = group.classes();
  // A complement is determined up to conjugacy, so one generator may be a class representative.
  for (int rep : data.representatives) {
    if (!admissible(rep)) continue;
    if (static_cast<std::size_t>(group.element_order(rep)) == complement_order) {
      ElementSet h = bounded_subgroup(group, std::span<const int>(&rep, 1), complement_order);
      if (meets_trivially(h)) return h;
    }
  }
  for (int rep : data.representatives) {
    if (!admissible(rep)) continue;
    for (std::size_t y = 1; y < group.order(); ++y) {
      if (!admissible(static_cast<int>(y))) continue;
      const int gens[2] = {rep, static_cast<int>(y)};
      ElementSet h = bounded_subgroup(group, gens, complement_order);
      if (h.size() == complement_order && meets_trivially(h)) return h;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FrobeniusDecomposition> frobenius_decomposition(const PermGroup& group,
                                                              const std::vector<ElementSet>& normals) {
  std::vector<const ElementSet*> ordered;
  for (const auto& n : normals) {
    if (n.size() > 1 && n.size() < group.order()) ordered.push_back(&n);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ElementSet* a, const ElementSet* b) { return a->size() > b->size(); });
  for (const ElementSet* kernel : ordered) {
    std::vector<char> in_kernel(group.order(), 0);
    for (int x : *kernel) in_kernel[static_cast<std::size_t>(x)] = 1;
    if (!centralizers_inside(group, in_kernel, *kernel)) continue;
    auto complement = find_complement(group, in_kernel, group.order() / kernel->size());
    if (complement) return FrobeniusDecomposition{*kernel, std::move(*complement)};
  }
  return std::nullopt;
}

StructureFlags structure_flags(const PermGroup& group) {
  StructureFlags flags;
  const ElementSet all = whole_group(group);
  flags.abelian = is_abelian(group, all);
  flags.p_group_prime = prime_power_base(static_cast<long>(group.order()));
  if (flags.abelian && flags.p_group_prime) {
    int p = *flags.p_group_prime;
    bool elementary = std::all_of(all.begin() + 1, all.end(), [&](int x) { return group.element_order(x) == p; });
    if (elementary) flags.elementary_abelian_prime = p;
  }
  flags.nilpotent = is_nilpotent(group);
  flags.extraspecial = is_extraspecial(group);

  const std::vector<ElementSet> normals = normal_subgroups(group);
  for (int p : prime_divisors(static_cast<long>(group.order()))) {
    const ElementSet* best = &normals.front();
    for (const auto& n : normals) {
      if (n.size() > best->size() && prime_power_base(static_cast<long>(n.size())) == p) best = &n;
    }
    flags.o_p.emplace(p, *best);
  }
  flags.frobenius = frobenius_decomposition(group, normals);
  return flags;
}

}  // namespace charval
