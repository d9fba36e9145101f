#include "charval/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "charval/error.hpp"

namespace charval {

namespace families {

namespace {

std::vector<int> iota_images(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return images;
}

int ipow(int base, int exponent) {
  int r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::vector<int> decode(int index, int modulus, int dim) {
  std::vector<int> v(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    v[static_cast<std::size_t>(i)] = index % modulus;
    index /= modulus;
  }
  return v;
}

int encode(const std::vector<int>& v, int modulus) {
  int index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * modulus + (((v[i] % modulus) + modulus) % modulus);
  return index;
}

Permutation matrix_action(int modulus, int dim, const IntMatrix& a) {
  const int points = ipow(modulus, dim);
  std::vector<int> images(static_cast<std::size_t>(points));
  for (int x = 0; x < points; ++x) {
    const auto v = decode(x, modulus, dim);
    std::vector<int> w(static_cast<std::size_t>(dim), 0);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) w[static_cast<std::size_t>(r)] += a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
    }
    images[static_cast<std::size_t>(x)] = encode(w, modulus);
  }
  return Permutation(std::move(images));
}

// Arithmetic in F_q, q = p^m, elements encoded base p as polynomial coefficients.
class SmallField {
 public:
  SmallField(int p, int m, std::vector<int> modulus_poly) : p_(p), m_(m), poly_(std::move(modulus_poly)) {}

  static SmallField of_order(int q) {
    switch (q) {
      case 4: return SmallField(2, 2, {1, 1, 1});      // x^2 + x + 1
      case 8: return SmallField(2, 3, {1, 1, 0, 1});   // x^3 + x + 1
      case 9: return SmallField(3, 2, {1, 0, 1});      // x^2 + 1
      case 16: return SmallField(2, 4, {1, 1, 0, 0, 1});  // x^4 + x + 1
      default: break;
    }
    for (int d = 2; d * d <= q; ++d) {
      if (q % d == 0) throw Error(ErrorCode::InvalidArgument, "no field table for order " + std::to_string(q));
    }
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "field order must be at least 2");
    return SmallField(q, 1, {0, 1});
  }

  int order() const { return ipow(p_, m_); }
  int dimension() const { return m_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const {
    auto x = decode(a, p_, m_);
    auto y = decode(b, p_, m_);
    for (int i = 0; i < m_; ++i) x[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
    return encode(x, p_);
  }

  int mul(int a, int b) const {
    if (m_ == 1) return (a * b) % p_;
    auto x = decode(a, p_, m_);
    auto y = decode(b, p_, m_);
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) prod[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    for (int top = 2 * m_ - 2; top >= m_; --top) {
      const int c = prod[static_cast<std::size_t>(top)] % p_;
      for (int i = 0; i <= m_; ++i) prod[static_cast<std::size_t>(top - m_ + i)] -= c * poly_[static_cast<std::size_t>(i)];
    }
    prod.resize(static_cast<std::size_t>(m_));
    return encode(prod, p_);
  }

  int multiplicative_order(int a) const {
    int x = a;
    int k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
      if (k > order()) return 0;
    }
    return k;
  }

  int primitive_element() const {
    for (int a = 2; a < order(); ++a) {
      if (multiplicative_order(a) == order() - 1) return a;
    }
    return 1;
  }

 private:
  int p_;
  int m_;
  std::vector<int> poly_;
};

// Translations of F_q by its additive basis and multiplication by the given scalars.
PermGroup field_affine(const SmallField& field, const std::vector<int>& scalars, std::size_t bound) {
  const int q = field.order();
  std::vector<Permutation> gens;
  for (int i = 0; i < field.dimension(); ++i) {
    const int basis = ipow(field.characteristic(), i);
    std::vector<int> images(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) images[static_cast<std::size_t>(x)] = field.add(x, basis);
    gens.emplace_back(std::move(images));
  }
  for (int a : scalars) {
    std::vector<int> images(static_cast<std::size_t>(q));
    for (int x = 0; x < q; ++x) images[static_cast<std::size_t>(x)] = field.mul(a, x);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(gens), q, bound);
}

}  // namespace

PermGroup trivial() { return PermGroup::from_generators({}, 1); }

PermGroup cyclic(int n, std::size_t bound) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic order must be positive");
  if (n == 1) return trivial();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = (x + 1) % n;
  return PermGroup::from_generators({Permutation(std::move(images))}, n, bound);
}

PermGroup elem_abelian(int p, int k, std::size_t bound) {
  if (p < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "elementary abelian group needs p >= 2, k >= 1");
  std::vector<Permutation> gens;
  for (int i = 0; i < k; ++i) {
    auto images = iota_images(p * k);
    for (int x = 0; x < p; ++x) images[static_cast<std::size_t>(i * p + x)] = i * p + (x + 1) % p;
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(gens), p * k, bound);
}

PermGroup dihedral(int order, std::size_t bound) {
  if (order < 6 || order % 2 != 0) throw Error(ErrorCode::InvalidArgument, "dihedral order must be even and >= 6");
  return affine(order / 2, 1, {{{-1}}}, bound);
}

PermGroup sym(int n, std::size_t bound) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  if (n == 1) return trivial();
  if (n == 2) return cyclic(2, bound);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 0);
  return PermGroup::from_generators({perm_from_cycles({cycle}, n), perm_from_cycles({{0, 1}}, n)}, n, bound);
}

PermGroup alt(int n, std::size_t bound) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  if (n <= 2) return trivial();
  if (n == 3) return PermGroup::from_generators({perm_from_cycles({{0, 1, 2}}, 3)}, 3, bound);
  // (0 1 2) with an (n or n-1)-cycle of even parity.
  std::vector<int> cycle;
  for (int i = n % 2 == 1 ? 0 : 1; i < n; ++i) cycle.push_back(i);
  return PermGroup::from_generators({perm_from_cycles({{0, 1, 2}}, n), perm_from_cycles({cycle}, n)}, n, bound);
}

PermGroup quaternion8() {
  // Elements sign * unit, index = 4 * (sign < 0) + unit with units 1, i, j, k.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = [](int a, int b) {
    const int sign = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * kSign[a % 4][b % 4];
    return (sign < 0 ? 4 : 0) + kUnit[a % 4][b % 4];
  };
  return regular(8, mul, {1, 2});
}

PermGroup frob_3k_2(int k, std::size_t bound) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  IntMatrix minus(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) minus[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
  return affine(3, k, {minus}, bound);
}

PermGroup gamma(int q, std::size_t bound) {
  if (q < 3) throw Error(ErrorCode::InvalidArgument, "gamma(q) needs q > 2");
  const SmallField field = SmallField::of_order(q);
  return field_affine(field, {field.primitive_element()}, bound);
}

PermGroup affine(int modulus, int dim, const std::vector<IntMatrix>& linear_parts, std::size_t bound) {
  const int points = ipow(modulus, dim);
  std::vector<Permutation> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> images(static_cast<std::size_t>(points));
    for (int x = 0; x < points; ++x) {
      auto v = decode(x, modulus, dim);
      v[static_cast<std::size_t>(i)] += 1;
      images[static_cast<std::size_t>(x)] = encode(v, modulus);
    }
    gens.emplace_back(std::move(images));
  }
  for (const auto& a : linear_parts) gens.push_back(matrix_action(modulus, dim, a));
  return PermGroup::from_generators(std::move(gens), points, bound);
}

PermGroup linear(int modulus, int dim, const std::vector<IntMatrix>& matrices, std::size_t bound) {
  std::vector<Permutation> gens;
  for (const auto& a : matrices) gens.push_back(matrix_action(modulus, dim, a));
  return PermGroup::from_generators(std::move(gens), ipow(modulus, dim), bound);
}

PermGroup regular(int n, const std::function<int(int, int)>& mul, const std::vector<int>& generators,
                  std::size_t bound) {
  std::vector<Permutation> gens;
  for (int g : generators) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = mul(x, g);
    gens.emplace_back(std::move(images));
  }
  return PermGroup::from_generators(std::move(gens), n, bound);
}

PermGroup central_product(const PermGroup& h, int z_h, const PermGroup& k, int z_k, std::size_t bound) {
  PermGroup product = direct_product(h, k, std::max(bound, h.order() * k.order()));
  std::vector<int> images = iota_images(h.degree() + k.degree());
  for (int i = 0; i < h.degree(); ++i) images[static_cast<std::size_t>(i)] = h.element(z_h)(i);
  for (int i = 0; i < k.degree(); ++i) images[static_cast<std::size_t>(h.degree() + i)] = h.degree() + k.element(z_k)(i);
  const int diagonal = product.index_of(Permutation(std::move(images)));
  if (diagonal < 0) throw Error(ErrorCode::InvalidArgument, "central pair is not in the product");
  return quotient_group(product, ElementSet{0, diagonal}, bound);
}

}  // namespace families

namespace {

using families::IntMatrix;

int central_involution(const PermGroup& g) {
  for (int z : center(g)) {
    if (g.element_order(z) == 2) return z;
  }
  throw Error(ErrorCode::InvalidArgument, "no central involution");
}

// Elements (v, k) of Z_m^2 x Z_n multiplied by (v, k)(w, l) = (v + A^k w, k + l).
PermGroup semidirect_plane(int modulus, const IntMatrix& action, int cyclic_order) {
  const int plane = modulus * modulus;
  auto apply = [&](int k, int v0, int v1) {
    for (int t = 0; t < k; ++t) {
      const int w0 = action[0][0] * v0 + action[0][1] * v1;
      const int w1 = action[1][0] * v0 + action[1][1] * v1;
      v0 = ((w0 % modulus) + modulus) % modulus;
      v1 = ((w1 % modulus) + modulus) % modulus;
    }
    return std::make_pair(v0, v1);
  };
  auto mul = [=](int a, int b) {
    const int ka = a / plane, kb = b / plane;
    const int a0 = a % plane % modulus, a1 = a % plane / modulus;
    const int b0 = b % plane % modulus, b1 = b % plane / modulus;
    auto [c0, c1] = apply(ka, b0, b1);
    const int v0 = (a0 + c0) % modulus, v1 = (a1 + c1) % modulus;
    return ((ka + kb) % cyclic_order) * plane + v1 * modulus + v0;
  };
  return families::regular(plane * cyclic_order, mul, {1, modulus, plane});
}

// Elements (a, k) of Z_m x Z_n multiplied by (a, k)(c, l) = (a + r^k c, k + l).
PermGroup semidirect_cyclic(int modulus, int multiplier, int cyclic_order) {
  auto mul = [=](int x, int y) {
    const int a = x % modulus, k = x / modulus;
    const int c = y % modulus, l = y / modulus;
    long scaled = c;
    for (int t = 0; t < k; ++t) scaled = scaled * multiplier % modulus;
    return ((k + l) % cyclic_order) * modulus + static_cast<int>((a + scaled) % modulus);
  };
  return families::regular(modulus * cyclic_order, mul, {1, modulus});
}

std::vector<std::string> strings(std::initializer_list<const char*> items) {
  return std::vector<std::string>(items.begin(), items.end());
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, std::vector<std::string> aliases, std::string source,
                 std::function<PermGroup(std::size_t)> construct, ExpectedProperties expected) -> CatalogEntry& {
    CatalogEntry e;
    e.name = std::move(name);
    e.aliases = std::move(aliases);
    e.source = std::move(source);
    e.construct = std::move(construct);
    e.expected = std::move(expected);
    entries.push_back(std::move(e));
    return entries.back();
  };
  auto product_of = [&](const std::string& h, const std::string& k) {
    return [h, k](std::size_t bound) { return direct_product(build(h, bound), build(k, bound), bound); };
  };

  add("C1", {"trivial"}, "trivial group: cdc(G) empty iff G = 1", [](std::size_t) { return families::trivial(); },
      {.order = 1, .cv = strings({"1"}), .cdc_size = 0});
  add("C2", {"cyclic_2"}, "|cdc(G)| = 1 iff G = C2^*", [](std::size_t b) { return families::cyclic(2, b); },
      {.order = 2, .cv = strings({"-1", "1"}), .cdc = strings({"-1"})});
  add("C2^2", {"elem_abelian_2_2"}, "|cdc(G)| = 1 iff G = C2^*",
      [](std::size_t b) { return families::elem_abelian(2, 2, b); }, {.order = 4, .cdc_size = 1});
  add("C2^3", {"elem_abelian_2_3"}, "|cdc(G)| = 1 iff G = C2^*",
      [](std::size_t b) { return families::elem_abelian(2, 3, b); }, {.order = 8, .cdc_size = 1});
  for (int n : {3, 4, 5, 6, 7, 8}) {
    const std::size_t order = static_cast<std::size_t>(n);
    add("C" + std::to_string(n), {"cyclic_" + std::to_string(n)}, "cyclic tables: a column of distinct values",
        [n](std::size_t b) { return families::cyclic(n, b); }, {.order = order, .class_count = order});
  }
  add("C3^2", {"elem_abelian_3_2"}, "abelian comparison group",
      [](std::size_t b) { return families::elem_abelian(3, 2, b); }, {.order = 9});

  add("frob_3k_2_1", {"S3", "sym_3", "dih_6", "gamma_3"}, "Theorem C(a), k = 1; cv = {1, -1, 0, 2}",
      [](std::size_t b) { return families::frob_3k_2(1, b); },
      {.order = 6, .cv = strings({"-1", "0", "1", "2"}), .cd = std::vector<long>{1, 2}, .cdc = strings({"-1", "0"}),
       .frobenius = std::pair<std::size_t, std::size_t>{3, 2}});
  add("frob_3k_2_2", {}, "Theorem C(a), k = 2", [](std::size_t b) { return families::frob_3k_2(2, b); },
      {.order = 18, .cd = std::vector<long>{1, 2}, .cdc = strings({"-1", "0"}),
       .frobenius = std::pair<std::size_t, std::size_t>{9, 2}});
  add("frob_3k_2_3", {}, "Theorem C(a), k = 3", [](std::size_t b) { return families::frob_3k_2(3, b); },
      {.order = 54, .cd = std::vector<long>{1, 2}, .cdc = strings({"-1", "0"}),
       .frobenius = std::pair<std::size_t, std::size_t>{27, 2}});
  add("S4", {"sym_4"}, "Theorem C(b); rational group with |cv(chi)| <= 4",
      [](std::size_t b) { return families::sym(4, b); },
      {.order = 24, .class_count = 5, .cv = strings({"-1", "0", "1", "2", "3"}), .cd = std::vector<long>{1, 2, 3},
       .cdc_size = 2, .all_rows_at_most_four_values = true, .rational = true});

  add("D8", {"dih_8"}, "Theorem D; cv = {1, 2, 0, -1, -2}",
      [](std::size_t b) { return families::dihedral(8, b); },
      {.order = 8, .cv = strings({"-2", "-1", "0", "1", "2"}), .cdc_size = 3, .nilpotent = true, .extraspecial = true});
  add("Q8", {"quaternion_8"}, "Theorem D; cv = {1, 2, 0, -1, -2}", [](std::size_t) { return families::quaternion8(); },
      {.order = 8, .cv = strings({"-2", "-1", "0", "1", "2"}), .cdc_size = 3, .nilpotent = true, .extraspecial = true});
  add("dih_16", {}, "nilpotent comparison group for Theorem D", [](std::size_t b) { return families::dihedral(16, b); },
      {.order = 16, .nilpotent = true, .extraspecial = false});

  add("dih_10", {"sg_10_1", "D10"}, "four-value example, SmallGroup(10,1)",
      [](std::size_t b) { return families::dihedral(10, b); },
      {.order = 10, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{5, 2}});
  for (int t : {7, 9, 11}) {
    add("dih_" + std::to_string(2 * t), {}, "ncv(D_2t) > 3 for odd t >= 5",
        [t](std::size_t b) { return families::dihedral(2 * t, b); },
        {.order = static_cast<std::size_t>(2 * t), .frobenius = std::pair<std::size_t, std::size_t>{t, 2}});
  }

  add("gamma_4", {"A4", "alt_4"}, "Gamma_q: doubly transitive Frobenius group, cyclic complement of order q-1",
      [](std::size_t b) { return families::gamma(4, b); },
      {.order = 12, .frobenius = std::pair<std::size_t, std::size_t>{4, 3}, .frobenius_complement_cyclic = true});
  for (int q : {5, 7, 8, 9}) {
    const std::size_t uq = static_cast<std::size_t>(q);
    add("gamma_" + std::to_string(q), {}, "Gamma_q: doubly transitive Frobenius group, cyclic complement of order q-1",
        [q](std::size_t b) { return families::gamma(q, b); },
        {.order = uq * (uq - 1), .frobenius = std::pair<std::size_t, std::size_t>{uq, uq - 1},
         .frobenius_complement_cyclic = true});
  }

  add("C2xS3", {}, "Theorem E: C2^* x (C3^* : C2)", product_of("C2", "S3"), {.order = 12, .cdc_size = 3})
      .factors = std::pair<std::string, std::string>{"C2", "S3"};
  add("C2^2xS3", {}, "Theorem E: C2^* x (C3^* : C2)", product_of("C2^2", "S3"), {.order = 24, .cdc_size = 3})
      .factors = std::pair<std::string, std::string>{"C2^2", "S3"};
  add("D8xC2", {}, "Theorem D with a direct factor", product_of("D8", "C2"),
      {.order = 16, .class_count = 10, .cdc_size = 3, .nilpotent = true})
      .factors = std::pair<std::string, std::string>{"D8", "C2"};
  add("D8xC2^2", {}, "Theorem D with a direct factor", product_of("D8", "C2^2"),
      {.order = 32, .class_count = 20, .cdc_size = 3, .nilpotent = true})
      .factors = std::pair<std::string, std::string>{"D8", "C2^2"};
  add("Q8xC2", {}, "Theorem D with a direct factor", product_of("Q8", "C2"),
      {.order = 16, .class_count = 10, .cdc_size = 3, .nilpotent = true})
      .factors = std::pair<std::string, std::string>{"Q8", "C2"};

  const IntMatrix unipotent2{{1, 1}, {0, 1}};
  add("sg_21_1", {"C7:C3"}, "four-value example, SmallGroup(21,1): x -> 2x + b mod 7",
      [](std::size_t b) { return families::affine(7, 1, {{{2}}}, b); },
      {.order = 21, .nonlinear_rows_have_four_values = true, .rows_of_degree = std::pair<long, std::size_t>{3, 2},
       .frobenius = std::pair<std::size_t, std::size_t>{7, 3}});
  add("He3", {"sg_27_3"}, "four-value example, SmallGroup(27,3): unitriangular 3x3 over F3, socle C3",
      [](std::size_t b) {
        return families::linear(3, 3, {IntMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, IntMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}, b);
      },
      {.order = 27, .class_count = 11, .nonlinear_rows_have_four_values = true, .nilpotent = true,
       .extraspecial = true, .unique_minimal_normal_order = 3});
  add("sg_27_4", {"C9:C3"}, "four-value example, SmallGroup(27,4): x -> 4^k x + c mod 9",
      [](std::size_t b) { return families::affine(9, 1, {{{4}}}, b); },
      {.order = 27, .nonlinear_rows_have_four_values = true, .rows_of_degree = std::pair<long, std::size_t>{3, 2},
       .nilpotent = true, .unique_minimal_normal_order = 3});
  add("sg_36_9", {"C3^2:C4"}, "four-value example, SmallGroup(36,9): Frobenius C3^2 : C4",
      [](std::size_t b) { return families::affine(3, 2, {IntMatrix{{0, -1}, {1, 0}}}, b); },
      {.order = 36, .nonlinear_rows_have_four_values = true, .rows_of_degree = std::pair<long, std::size_t>{4, 2},
       .frobenius = std::pair<std::size_t, std::size_t>{9, 4}, .frobenius_complement_cyclic = true,
       .unique_minimal_normal_order = 9});
  add("sg_55_1", {"C11:C5"}, "four-value example, SmallGroup(55,1): x -> 3x + b mod 11",
      [](std::size_t b) { return families::affine(11, 1, {{{3}}}, b); },
      {.order = 55, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{11, 5}});
  add("sg_78_1", {"D26:C3"}, "four-value example, SmallGroup(78,1): x -> 4^k x + c mod 13",
      [](std::size_t b) { return families::affine(13, 1, {{{4}}}, b); },
      {.order = 78, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{13, 6}});
  add("sg_80_49", {"C2^4:C5"}, "four-value example, SmallGroup(80,49): socle C2^4 is the unique minimal normal subgroup",
      [](std::size_t b) {
        const auto field = families::SmallField::of_order(16);
        const int g = field.primitive_element();
        return families::field_affine(field, {field.mul(g, field.mul(g, g))}, b);
      },
      {.order = 80, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{16, 5},
       .unique_minimal_normal_order = 16});
  add("sg_81_3", {"C3^2:C9"}, "four-value example, SmallGroup(81,3)",
      [unipotent2](std::size_t) { return semidirect_plane(3, unipotent2, 9); },
      {.order = 81, .nonlinear_rows_have_four_values = true, .nilpotent = true});
  add("sg_81_4", {"C9:C9"}, "four-value example, SmallGroup(81,4)",
      [](std::size_t) { return semidirect_cyclic(9, 4, 9); },
      {.order = 81, .nonlinear_rows_have_four_values = true, .nilpotent = true});
  add("sg_81_12", {"C3xHe3"}, "four-value example, SmallGroup(81,12)", product_of("C3", "He3"),
      {.order = 81, .nonlinear_rows_have_four_values = true, .nilpotent = true})
      .factors = std::pair<std::string, std::string>{"C3", "He3"};
  add("sg_81_13", {"C3x(C9:C3)"}, "four-value example, SmallGroup(81,13)", product_of("C3", "sg_27_4"),
      {.order = 81, .nonlinear_rows_have_four_values = true, .nilpotent = true})
      .factors = std::pair<std::string, std::string>{"C3", "sg_27_4"};
  add("sg_136_12", {"C17:C8"}, "four-value example, SmallGroup(136,12): x -> 2x + b mod 17",
      [](std::size_t b) { return families::affine(17, 1, {{{2}}}, b); },
      {.order = 136, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{17, 8}});
  add("sg_50_4", {"Dih(C5^2)"}, "four-value example, SmallGroup(50,4): 12 degree-2 characters, 9 normal subgroups",
      [](std::size_t b) { return families::affine(5, 2, {IntMatrix{{-1, 0}, {0, -1}}}, b); },
      {.order = 50, .nonlinear_rows_have_four_values = true, .rows_of_degree = std::pair<long, std::size_t>{2, 12},
       .normal_subgroup_count = 9, .nonabelian_quotients = std::pair<std::size_t, std::size_t>{10, 6}});
  add("sg_147_4", {"C7^2:C3"}, "four-value example, SmallGroup(147,4): scalar action of order 3 on F7^2",
      [](std::size_t b) { return families::affine(7, 2, {IntMatrix{{2, 0}, {0, 2}}}, b); },
      {.order = 147, .nonlinear_rows_have_four_values = true, .frobenius = std::pair<std::size_t, std::size_t>{49, 3}});

  add("A5", {"alt_5"}, "A5 has a character with five character values", [](std::size_t b) { return families::alt(5, b); },
      {.order = 60, .class_count = 5, .max_row_values = 5, .rational = false, .solvable = false})
      .excluded_composition_factor = true;
  add("S5", {"sym_5"}, "|ncv(S5)| = 3", [](std::size_t b) { return families::sym(5, b); },
      {.order = 120, .class_count = 7, .ncv_size = 3, .rational = true, .solvable = false})
      .excluded_composition_factor = true;
  add("A6", {"alt_6"}, "A6 spot check", [](std::size_t b) { return families::alt(6, b); },
      {.order = 360, .class_count = 7, .solvable = false})
      .excluded_composition_factor = true;

  add("sg_250_14", {"C5^2:D10"}, "four-value example, SmallGroup(250,14): translations, [[1,1],[0,1]], diag(1,-1)",
      [unipotent2](std::size_t b) { return families::affine(5, 2, {unipotent2, IntMatrix{{1, 0}, {0, -1}}}, b); },
      {.order = 250, .nonlinear_rows_have_four_values = true})
      .tier = Tier::Optional;
  add("dih_250", {"Dih(C5^3)"}, "C5^2 : D10 with D10 acting through C2 by inversion; four-value comparison for order 250",
      [](std::size_t b) { return families::affine(5, 3, {IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}, b); },
      {.order = 250, .nonlinear_rows_have_four_values = true, .rows_of_degree = std::pair<long, std::size_t>{2, 62},
       .nonabelian_quotients = std::pair<std::size_t, std::size_t>{10, 31}})
      .tier = Tier::Optional;
  add("extraspecial_32_plus", {"D8oD8"}, "extraspecial 2-group of order 32, central product D8 o D8",
      [](std::size_t b) {
        const PermGroup d8 = families::dihedral(8, b);
        return families::central_product(d8, central_involution(d8), d8, central_involution(d8), b);
      },
      {.order = 32, .cdc_size = 3, .nilpotent = true, .extraspecial = true})
      .tier = Tier::Optional;
  add("extraspecial_32_minus", {"D8oQ8"}, "extraspecial 2-group of order 32, central product D8 o Q8",
      [](std::size_t b) {
        const PermGroup d8 = families::dihedral(8, b);
        const PermGroup q8 = families::quaternion8();
        return families::central_product(d8, central_involution(d8), q8, central_involution(q8), b);
      },
      {.order = 32, .cdc_size = 3, .nilpotent = true, .extraspecial = true})
      .tier = Tier::Optional;
  return entries;
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::UnknownName, "bad family argument '" + std::string(text) + "'");
  }
  return value;
}

std::optional<PermGroup> build_family(std::string_view selector, std::size_t bound) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view family = selector.substr(0, colon);
  const std::string_view args = selector.substr(colon + 1);
  if (family == "cyclic") return families::cyclic(parse_int(args), bound);
  if (family == "dihedral") return families::dihedral(parse_int(args), bound);
  if (family == "sym") return families::sym(parse_int(args), bound);
  if (family == "alt") return families::alt(parse_int(args), bound);
  if (family == "frob_3k_2") return families::frob_3k_2(parse_int(args), bound);
  if (family == "gamma") return families::gamma(parse_int(args), bound);
  if (family == "elem_abelian") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::UnknownName, "elem_abelian needs p,k");
    return families::elem_abelian(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)), bound);
  }
  return std::nullopt;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::vector<const CatalogEntry*> catalog_entries(bool include_optional) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (include_optional || e.tier == Tier::Core) out.push_back(&e);
  }
  return out;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name || std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end()) return e;
  }
  throw Error(ErrorCode::UnknownName, "no catalog group named '" + std::string(name) + "'");
}

PermGroup build(std::string_view name, std::size_t bound) {
  if (auto group = build_family(name, bound)) return std::move(*group);
  const CatalogEntry& entry = find_entry(name);
  PermGroup group = entry.construct(bound);
  if (entry.expected.order && group.order() != *entry.expected.order) {
    throw Error(ErrorCode::ConstructionMismatch, entry.name + " has order " + std::to_string(group.order()) +
                                                     ", expected " + std::to_string(*entry.expected.order));
  }
  return group;
}

namespace {

std::vector<std::string> display(const std::vector<Cyc>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

std::vector<std::string> canonical_strings(const std::vector<std::string>& items) {
  std::vector<Cyc> values;
  for (const auto& s : items) values.push_back(parse_cyc(s));
  return display(canonical_value_set(std::move(values)));
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::vector<ElementSet> minimal_normal_subgroups(const std::vector<ElementSet>& normals) {
  std::vector<ElementSet> minimal;
  for (const auto& n : normals) {
    if (n.size() == 1) continue;
    bool is_minimal = std::none_of(normals.begin(), normals.end(), [&](const ElementSet& m) {
      return m.size() > 1 && m.size() < n.size() && std::includes(n.begin(), n.end(), m.begin(), m.end());
    });
    if (is_minimal) minimal.push_back(n);
  }
  return minimal;
}

}  // namespace

std::vector<std::string> check_expected(const CatalogEntry& entry, const CharTable& table,
                                        const InvariantReport& r) {
  const ExpectedProperties& x = entry.expected;
  const PermGroup& group = *table.group;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(entry.name + ": " + what);
  };
  if (x.order) expect(r.order == *x.order, "order " + std::to_string(r.order));
  if (x.class_count) expect(r.class_count == *x.class_count, "class count " + std::to_string(r.class_count));
  if (x.cv) expect(display(r.cv) == canonical_strings(*x.cv), "cv = " + join(display(r.cv)));
  if (x.cd) expect(r.cd == *x.cd, "cd differs");
  if (x.cdc) expect(display(r.cdc) == canonical_strings(*x.cdc), "cdc = " + join(display(r.cdc)));
  if (x.cdc_size) expect(r.cdc.size() == *x.cdc_size, "|cdc| = " + std::to_string(r.cdc.size()));
  if (x.ncv_size) expect(r.ncv.size() == *x.ncv_size, "|ncv| = " + std::to_string(r.ncv.size()));
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    const std::size_t values = r.per_char_cv_sizes[row];
    if (x.nonlinear_rows_have_four_values && table.rows[row].degree > 1) {
      expect(values == 4, "row " + std::to_string(row) + " has " + std::to_string(values) + " values");
    }
    if (x.all_rows_at_most_four_values) {
      expect(values <= 4, "row " + std::to_string(row) + " has " + std::to_string(values) + " values");
    }
  }
  if (x.max_row_values) {
    const std::size_t most = *std::max_element(r.per_char_cv_sizes.begin(), r.per_char_cv_sizes.end());
    expect(most == *x.max_row_values, "largest row value count " + std::to_string(most));
  }
  if (x.rows_of_degree) {
    const auto count = static_cast<std::size_t>(std::count_if(table.rows.begin(), table.rows.end(), [&](const Character& c) {
      return c.degree == x.rows_of_degree->first;
    }));
    expect(count == x.rows_of_degree->second, std::to_string(count) + " rows of degree " +
                                                  std::to_string(x.rows_of_degree->first));
  }
  if (x.rational) expect(r.is_rational_group == *x.rational, "rationality differs");
  if (x.solvable) expect(r.dl.has_value() == *x.solvable, "solvability differs");
  if (x.nilpotent) expect(r.flags.nilpotent == *x.nilpotent, "nilpotency differs");
  if (x.extraspecial) expect(r.flags.extraspecial == *x.extraspecial, "extraspecial flag differs");
  if (x.frobenius) {
    const auto& f = r.flags.frobenius;
    expect(f && f->kernel.size() == x.frobenius->first && f->complement.size() == x.frobenius->second,
           "Frobenius decomposition differs");
    if (f && x.frobenius_complement_cyclic) expect(is_cyclic(group, f->complement), "complement not cyclic");
  }
  if (x.unique_minimal_normal_order || x.normal_subgroup_count || x.nonabelian_quotients) {
    const auto normals = normal_subgroups(group);
    if (x.unique_minimal_normal_order) {
      const auto minimal = minimal_normal_subgroups(normals);
      expect(minimal.size() == 1 && minimal.front().size() == *x.unique_minimal_normal_order,
             std::to_string(minimal.size()) + " minimal normal subgroups");
    }
    if (x.normal_subgroup_count) {
      expect(normals.size() == *x.normal_subgroup_count, std::to_string(normals.size()) + " normal subgroups");
    }
    if (x.nonabelian_quotients) {
      std::size_t count = 0;
      for (const auto& n : normals) {
        if (group.order() / n.size() != x.nonabelian_quotients->first) continue;
        const PermGroup quotient = quotient_group(group, n);
        if (!is_abelian(quotient, whole_group(quotient))) ++count;
      }
      expect(count == x.nonabelian_quotients->second, std::to_string(count) + " nonabelian quotients");
    }
  }
  return failures;
}

}  // namespace charval
