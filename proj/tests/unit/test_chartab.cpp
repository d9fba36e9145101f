#include <doctest.h>

#include <algorithm>
#include <set>

#include "charval/catalog.hpp"
#include "charval/char_table.hpp"
#include "charval/error.hpp"
#include "oracles.hpp"

using namespace charval;

namespace {

std::set<std::string> value_strings(const CharTable& t) {
  std::set<std::string> out;
  for (const auto& row : t.rows) {
    for (const auto& v : row.values) out.insert(v.to_string());
  }
  return out;
}

}  // namespace

TEST_CASE("dixon prime") {
  CHECK(choose_dixon_prime(6, 6) == 7);
  CHECK(choose_dixon_prime(24, 12) == 13);
  CHECK(choose_dixon_prime(60, 30) == 31);
  CHECK(choose_dixon_prime(360, 60) == 61);
  CHECK(choose_dixon_prime(136, 136) == 137);
  // p > 2 sqrt(|G|) strictly
  CHECK(choose_dixon_prime(9, 1) == 7);
}

TEST_CASE("class coefficients") {
  const PermGroup s3 = families::sym(3);
  const auto a = class_mult_coeffs(s3);
  const auto& cls = s3.classes();
  // sum over j of a(i, j, l) |C_l| = |C_i| |C_j| summed, i.e. counts all products
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      long total = 0;
      for (std::size_t l = 0; l < cls.size(); ++l) total += a(i, j, l) * static_cast<long>(cls.class_sizes[l]);
      CHECK(total == static_cast<long>(cls.class_sizes[i] * cls.class_sizes[j]));
    }
  }
}

TEST_CASE("S3 and S4 tables") {
  const CharTable s3 = character_table(families::sym(3));
  CHECK(value_strings(s3) == std::set<std::string>{"-1", "0", "1", "2"});
  const CharTable s4 = character_table(families::sym(4));
  CHECK(value_strings(s4) == std::set<std::string>{"-1", "0", "1", "2", "3"});
  std::vector<long> degrees;
  for (const auto& r : s4.rows) degrees.push_back(r.degree);
  CHECK(degrees == std::vector<long>{1, 1, 2, 3, 3});
}

TEST_CASE("D8 value set and codegree") {
  const CharTable t = character_table(families::dihedral(8));
  CHECK(value_strings(t) == std::set<std::string>{"-2", "-1", "0", "1", "2"});
  const auto& last = t.rows.back();
  CHECK(last.degree == 2);
  CHECK(codegree(t, t.rows.size() - 1) == 4);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (std::all_of(t.rows[r].values.begin(), t.rows[r].values.end(), [](const Cyc& v) { return v == Cyc(1); })) {
      CHECK(codegree(t, r) == 1);
    }
  }
}

TEST_CASE("cyclic tables are Fourier matrices") {
  for (int n : {2, 5, 6, 8}) {
    const PermGroup g = families::cyclic(n);
    const CharTable t = character_table(g);
    CHECK(value_strings(t).size() == static_cast<std::size_t>(n));
    // the column of the generator has n distinct values
    const int gen_class = g.classes().class_of[static_cast<std::size_t>(g.generator_indices()[0])];
    std::set<std::string> column;
    for (const auto& row : t.rows) column.insert(row.values[static_cast<std::size_t>(gen_class)].to_string());
    CHECK(column.size() == static_cast<std::size_t>(n));
    // faithful linear characters have codegree n
    std::size_t faithful = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (t.rows[r].kernel.size() == 1) {
        CHECK(codegree(t, r) == n);
        ++faithful;
      }
    }
    CHECK(faithful == static_cast<std::size_t>(euler_phi(n)));
  }
}

TEST_CASE("C7:C3 degree-3 rows") {
  const CharTable t = character_table(build("sg_21_1"));
  const Cyc eta = parse_cyc("z(7) + z(7)^2 + z(7)^4");
  for (const auto& row : t.rows) {
    if (row.degree != 3) continue;
    std::set<std::string> values;
    for (const auto& v : row.values) values.insert(v.to_string());
    CHECK(values.size() == 4);
    CHECK(values.count("0") == 1);
    CHECK((values.count(eta.to_string()) == 1 || values.count(conjugate(eta).to_string()) == 1));
  }
}

TEST_CASE("orthogonality against independent oracles") {
  for (const char* name : {"S3", "S4", "Q8", "A5", "sg_21_1", "gamma_8", "He3", "sg_36_9"}) {
    CAPTURE(name);
    const CharTable t = character_table(build(name));
    CHECK(t.rows.size() == t.classes().size());
    CHECK(oracle::first_orthogonality(t));
    CHECK(oracle::second_orthogonality(t));
    long sum = 0;
    for (const auto& r : t.rows) {
      sum += r.degree * r.degree;
      CHECK(static_cast<long>(t.group->order()) % r.degree == 0);
    }
    CHECK(sum == static_cast<long>(t.group->order()));
  }
}

TEST_CASE("values at inverses are conjugates") {
  const CharTable t = character_table(build("sg_55_1"));
  const auto& cls = t.classes();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < cls.size(); ++c) {
      CHECK(row.values[static_cast<std::size_t>(cls.inverse_class[c])] == conjugate(row.values[c]));
    }
  }
}

TEST_CASE("kernels are normal subgroups") {
  const PermGroup g = build("S4");
  const CharTable t = character_table(g);
  const auto normals = normal_subgroups(g);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const ElementSet k = kernel_elements(t, r);
    CHECK(std::find(normals.begin(), normals.end(), k) != normals.end());
    const ElementSet z = center_elements(t, r);
    CHECK(std::includes(z.begin(), z.end(), k.begin(), k.end()));
  }
}

TEST_CASE("seed does not change the table") {
  const PermGroup g = build("gamma_9");
  const CharTable a = character_table(g, {.seed = 1});
  const CharTable b = character_table(g, {.seed = 987654321});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t r = 0; r < a.rows.size(); ++r) CHECK(a.rows[r].values == b.rows[r].values);
}

TEST_CASE("verify_orthogonality rejects a corrupted table") {
  CharTable t = character_table(families::sym(3));
  t.rows[2].values[1] = Cyc(1);
  try {
    verify_orthogonality(t);
    FAIL("expected OrthogonalityFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrthogonalityFailure);
  }
}
