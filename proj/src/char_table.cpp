#include "charval/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "charval/error.hpp"
#include "charval/finite_field.hpp"

namespace charval {

using fp::u64;

ClassCoefficients::ClassCoefficients(const PermGroup& group) : k_(group.classes().size()) {
  const ClassData& data = group.classes();
  data_.assign(k_ * k_ * k_, 0);
  for (std::size_t l = 0; l < k_; ++l) {
    const int z = data.representatives[l];
    for (std::size_t i = 0; i < k_; ++i) {
      for (int x : data.classes[i]) {
        const int y = group.mul(group.inv(x), z);
        const auto j = static_cast<std::size_t>(data.class_of[static_cast<std::size_t>(y)]);
        ++data_[(i * k_ + j) * k_ + l];
      }
    }
  }
}

long choose_dixon_prime(long order, long exponent) {
  constexpr long kSearchLimit = 10'000'000;
  for (long p = exponent + 1; p <= kSearchLimit; p += exponent) {
    if (p * p > 4 * order && fp::is_prime(static_cast<u64>(p))) return p;
  }
  throw Error(ErrorCode::PrimeSearchExhausted, "no prime below 10^7 is 1 mod " + std::to_string(exponent));
}

namespace {

// A subspace of F_p^k kept as reduced row-echelon basis rows.
struct Subspace {
  fp::Matrix basis;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const fp::Field& field, fp::Matrix rows) {
  Subspace s;
  s.pivots = fp::rref(field, rows);
  s.basis = std::move(rows);
  return s;
}

// Splits an M-invariant subspace into the eigenspaces of M restricted to it.
std::vector<Subspace> split(const fp::Field& field, const Subspace& space, const ClassCoefficients& a,
                            std::size_t cls, std::mt19937_64& rng) {
  const std::size_t k = a.class_count();
  const std::size_t d = space.basis.size();
  // Column c of the restriction holds the pivot coordinates of M b_c.
  fp::Matrix restricted(d, std::vector<u64>(d, 0));
  for (std::size_t c = 0; c < d; ++c) {
    const auto& b = space.basis[c];
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t j = space.pivots[r];
      u64 sum = 0;
      for (std::size_t l = 0; l < k; ++l) {
        if (b[l] == 0) continue;
        sum = field.add(sum, field.mul(field.reduce(a(cls, j, l)), b[l]));
      }
      restricted[r][c] = sum;
    }
  }
  const std::vector<u64> eigenvalues = fp::roots(field, fp::charpoly(field, restricted), rng);
  if (eigenvalues.size() == 1) return {space};

  std::vector<Subspace> pieces;
  std::size_t total = 0;
  for (u64 lambda : eigenvalues) {
    fp::Matrix shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = field.sub(shifted[i][i], lambda);
    fp::Matrix vectors;
    for (const auto& coords : fp::nullspace(field, shifted)) {
      std::vector<u64> v(k, 0);
      for (std::size_t c = 0; c < d; ++c) {
        if (coords[c] == 0) continue;
        for (std::size_t l = 0; l < k; ++l) v[l] = field.add(v[l], field.mul(coords[c], space.basis[c][l]));
      }
      vectors.push_back(std::move(v));
    }
    total += vectors.size();
    pieces.push_back(make_subspace(field, std::move(vectors)));
  }
  if (total != d) {
    throw Error(ErrorCode::EigensplitFailure, "class matrix is not diagonalizable on a subspace");
  }
  return pieces;
}

std::vector<std::vector<u64>> central_characters(const fp::Field& field, const ClassCoefficients& a,
                                                 std::uint64_t seed) {
  const std::size_t k = a.class_count();
  std::mt19937_64 rng(seed);
  fp::Matrix identity(k, std::vector<u64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(field, identity)};
  for (std::size_t cls = 1; cls < k; ++cls) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
    std::vector<Subspace> next;
    for (const auto& space : spaces) {
      if (space.basis.size() == 1) {
        next.push_back(space);
        continue;
      }
      for (auto& piece : split(field, space, a, cls, rng)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> omegas;
  for (const auto& space : spaces) {
    if (space.basis.size() != 1) {
      throw Error(ErrorCode::EigensplitFailure, "a common eigenspace has dimension " +
                                                    std::to_string(space.basis.size()));
    }
    std::vector<u64> v = space.basis.front();
    if (v[0] == 0) throw Error(ErrorCode::EigensplitFailure, "eigenvector vanishes on the identity class");
    const u64 scale = field.inv(v[0]);
    for (auto& x : v) x = field.mul(x, scale);
    omegas.push_back(std::move(v));
  }
  return omegas;
}

long recover_degree(const fp::Field& field, const ClassData& data, std::size_t order, const std::vector<u64>& omega) {
  u64 sum = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const u64 term = field.mul(omega[i], omega[static_cast<std::size_t>(data.inverse_class[i])]);
    sum = field.add(sum, field.mul(term, field.inv(field.reduce(static_cast<long long>(data.class_sizes[i])))));
  }
  if (sum == 0) throw Error(ErrorCode::EigensplitFailure, "degenerate central character");
  const u64 square = field.mul(field.reduce(static_cast<long long>(order)), field.inv(sum));
  for (u64 d = 1; 2 * d < field.p(); ++d) {
    if (field.mul(d, d) == square) return static_cast<long>(d);
  }
  throw Error(ErrorCode::EigensplitFailure, "degree square has no root below p/2");
}

struct IntegralValue {
  int conductor;
  std::vector<long long> coeffs;
};

IntegralValue integral(const Cyc& value) {
  IntegralValue out{value.conductor(), {}};
  for (const auto& c : value.coeffs()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw Error(ErrorCode::OrthogonalityFailure, "value " + value.to_string() + " is not an algebraic integer");
    }
    out.coeffs.push_back(c.get_num().get_si());
  }
  return out;
}

// Sum of weight[t] * x[t] * y[t], exact.
Cyc weighted_dot(const std::vector<IntegralValue>& x, const std::vector<IntegralValue>& y,
                 const std::vector<long long>& weight) {
  int n = 1;
  for (const auto& v : x) n = std::lcm(n, v.conductor);
  for (const auto& v : y) n = std::lcm(n, v.conductor);
  std::vector<long long> acc(static_cast<std::size_t>(n), 0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    const std::size_t sx = static_cast<std::size_t>(n / x[t].conductor);
    const std::size_t sy = static_cast<std::size_t>(n / y[t].conductor);
    for (std::size_t i = 0; i < x[t].coeffs.size(); ++i) {
      if (x[t].coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < y[t].coeffs.size(); ++j) {
        if (y[t].coeffs[j] == 0) continue;
        acc[(i * sx + j * sy) % acc.size()] += weight[t] * x[t].coeffs[i] * y[t].coeffs[j];
      }
    }
  }
  std::vector<mpq_class> full(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) full[i] = mpq_class(static_cast<long>(acc[i]));
  return Cyc::from_exponent_sum(n, full);
}

}  // namespace

void verify_orthogonality(const CharTable& table) {
  const ClassData& data = table.classes();
  const std::size_t k = data.size();
  const long order = static_cast<long>(table.group->order());
  if (table.rows.size() != k) {
    throw Error(ErrorCode::OrthogonalityFailure, "row count differs from class count");
  }
  std::vector<std::vector<IntegralValue>> values(k), conjugates(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& v : table.rows[r].values) {
      values[r].push_back(integral(v));
      conjugates[r].push_back(integral(conjugate(v)));
    }
  }
  std::vector<long long> sizes;
  for (auto s : data.class_sizes) sizes.push_back(static_cast<long long>(s));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r; s < k; ++s) {
      const Cyc inner = weighted_dot(values[r], conjugates[s], sizes);
      if (!(inner == Cyc(r == s ? order : 0L))) {
        throw Error(ErrorCode::OrthogonalityFailure, "rows " + std::to_string(r) + ", " + std::to_string(s) +
                                                         " give " + inner.to_string());
      }
    }
  }
  const std::vector<long long> ones(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<IntegralValue> column_i, column_j_conj;
    for (std::size_t r = 0; r < k; ++r) column_i.push_back(values[r][i]);
    for (std::size_t j = i; j < k; ++j) {
      column_j_conj.clear();
      for (std::size_t r = 0; r < k; ++r) column_j_conj.push_back(conjugates[r][j]);
      const Cyc inner = weighted_dot(column_i, column_j_conj, ones);
      const long expected = i == j ? order / static_cast<long>(data.class_sizes[i]) : 0L;
      if (!(inner == Cyc(expected))) {
        throw Error(ErrorCode::OrthogonalityFailure, "columns " + std::to_string(i) + ", " + std::to_string(j) +
                                                         " give " + inner.to_string());
      }
    }
  }
}

CharTable character_table(std::shared_ptr<const PermGroup> group, const TableOptions& options) {
  const ClassData& data = group->classes();
  const std::size_t k = data.size();
  if (k > kMaxClassCount) {
    throw Error(ErrorCode::TooManyClasses, std::to_string(k) + " classes exceeds " + std::to_string(kMaxClassCount));
  }
  const long p = choose_dixon_prime(*group);
  const fp::Field field(static_cast<u64>(p));
  const ClassCoefficients coefficients(*group);
  const auto omegas = central_characters(field, coefficients, options.seed);

  const long e = group->exponent();
  const u64 w = field.pow(fp::primitive_root(static_cast<u64>(p)), static_cast<u64>((p - 1) / e));

  CharTable table;
  table.dixon_prime = p;
  for (const auto& omega : omegas) {
    Character chi;
    chi.degree = recover_degree(field, data, group->order(), omega);
    const u64 d = static_cast<u64>(chi.degree);
    std::vector<u64> theta(k);
    for (std::size_t i = 0; i < k; ++i) {
      theta[i] = field.mul(field.mul(d, omega[i]), field.inv(field.reduce(static_cast<long long>(data.class_sizes[i]))));
    }
    for (std::size_t i = 0; i < k; ++i) {
      const int m = data.element_orders[i];
      const u64 root_inv = field.inv(field.pow(w, static_cast<u64>(e / m)));
      const u64 m_inv = field.inv(static_cast<u64>(m));
      std::vector<mpq_class> multiplicities(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) {
        // mu_j = (1/m) sum_t theta(g^t) zeta^{-j t}
        const u64 step = field.pow(root_inv, static_cast<u64>(j));
        u64 twiddle = 1;
        u64 sum = 0;
        for (int t = 0; t < m; ++t) {
          const auto power = static_cast<std::size_t>(data.power_classes[i][static_cast<std::size_t>(t)]);
          sum = field.add(sum, field.mul(theta[power], twiddle));
          twiddle = field.mul(twiddle, step);
        }
        const u64 mu = field.mul(sum, m_inv);
        if (mu > d) {
          throw Error(ErrorCode::EigensplitFailure, "eigenvalue multiplicity " + std::to_string(mu) +
                                                        " exceeds degree " + std::to_string(d));
        }
        multiplicities[static_cast<std::size_t>(j)] = static_cast<unsigned long>(mu);
      }
      chi.values.push_back(Cyc::from_exponent_sum(m, multiplicities));
    }
    const Cyc degree_value(chi.degree);
    const Cyc degree_squared(chi.degree * chi.degree);
    for (std::size_t i = 0; i < k; ++i) {
      if (chi.values[i] == degree_value) chi.kernel.push_back(static_cast<int>(i));
      if (classify(chi.values[i]).abs_squared == degree_squared) chi.center_z.push_back(static_cast<int>(i));
    }
    table.rows.push_back(std::move(chi));
  }

  std::vector<std::vector<std::string>> keys;
  std::vector<std::size_t> order(table.rows.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& row : table.rows) {
    std::vector<std::string> key;
    for (const auto& v : row.values) key.push_back(v.to_string());
    keys.push_back(std::move(key));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (table.rows[x].degree != table.rows[y].degree) return table.rows[x].degree < table.rows[y].degree;
    return keys[x] < keys[y];
  });
  std::vector<Character> sorted;
  for (auto idx : order) sorted.push_back(std::move(table.rows[idx]));
  table.rows = std::move(sorted);
  table.group = std::move(group);

  verify_orthogonality(table);
  return table;
}

CharTable character_table(const PermGroup& group, const TableOptions& options) {
  return character_table(std::make_shared<const PermGroup>(group), options);
}

ElementSet kernel_elements(const CharTable& table, std::size_t row) {
  return classes_to_elements(table.classes(), table.rows.at(row).kernel);
}

ElementSet center_elements(const CharTable& table, std::size_t row) {
  return classes_to_elements(table.classes(), table.rows.at(row).center_z);
}

long codegree(const CharTable& table, std::size_t row) {
  const Character& chi = table.rows.at(row);
  std::size_t kernel_size = 0;
  for (int c : chi.kernel) kernel_size += table.classes().class_sizes[static_cast<std::size_t>(c)];
  const long index = static_cast<long>(table.group->order() / kernel_size);
  if (index % chi.degree != 0) {
    throw Error(ErrorCode::NonIntegralCodegree,
                std::to_string(index) + "/" + std::to_string(chi.degree) + " is not an integer");
  }
  return index / chi.degree;
}

}  // namespace charval
