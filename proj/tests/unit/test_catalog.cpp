#include <doctest.h>

#include <set>

#include "charval/catalog.hpp"
#include "charval/error.hpp"

using namespace charval;

TEST_CASE("every core entry meets its expected properties") {
  for (const auto* e : catalog_entries(false)) {
    CAPTURE(e->name);
    const CharTable t = character_table(build(e->name));
    const auto failures = check_expected(*e, t, report(t));
    for (const auto& f : failures) MESSAGE(f);
    CHECK(failures.empty());
  }
}

TEST_CASE("names and aliases are unique") {
  std::set<std::string> seen;
  for (const auto& e : catalog()) {
    CHECK(seen.insert(e.name).second);
    for (const auto& a : e.aliases) CHECK(seen.insert(a).second);
  }
}

TEST_CASE("aliases resolve") {
  CHECK(find_entry("sym_3").name == "frob_3k_2_1");
  CHECK(find_entry("A4").name == "gamma_4");
  CHECK(find_entry("sg_10_1").name == "dih_10");
  CHECK(find_entry("sg_27_3").name == "He3");
  try {
    find_entry("no_such_group");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownName);
  }
}

TEST_CASE("family selectors") {
  CHECK(build("dihedral:14").order() == 14);
  CHECK(build("cyclic:7").order() == 7);
  CHECK(build("elem_abelian:2,3").order() == 8);
  CHECK(build("sym:5").order() == 120);
  CHECK(build("alt:6").order() == 360);
  CHECK(build("frob_3k_2:2").order() == 18);
  CHECK(build("gamma:8").order() == 56);
  CHECK_THROWS_AS(build("gamma:6"), Error);
  CHECK_THROWS_AS(build("cyclic:x"), Error);
}

TEST_CASE("gamma groups are Frobenius with cyclic complement of order q-1") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const PermGroup g = families::gamma(q);
    CHECK(g.order() == static_cast<std::size_t>(q * (q - 1)));
    const auto f = structure_flags(g).frobenius;
    REQUIRE(f);
    CHECK(f->kernel.size() == static_cast<std::size_t>(q));
    CHECK(f->complement.size() == static_cast<std::size_t>(q - 1));
    CHECK(is_cyclic(g, f->complement));
  }
}

TEST_CASE("quaternion relations") {
  const PermGroup q = families::quaternion8();
  const int i = q.generator_indices()[0];
  const int j = q.generator_indices()[1];
  CHECK(q.element_order(i) == 4);
  CHECK(q.power(j, 2) == q.power(i, 2));
  CHECK(q.conjugate(i, j) == q.inv(i));
  CHECK(center(q).size() == 2);
}

TEST_CASE("central products of order 32 are extraspecial") {
  for (const char* name : {"extraspecial_32_plus", "extraspecial_32_minus"}) {
    const PermGroup g = build(name);
    CHECK(g.order() == 32);
    CHECK(is_extraspecial(g));
  }
}

TEST_CASE("unique minimal normal subgroups") {
  // minimal normal subgroups of C2^4:C5, C3^2:C4, He3
  for (auto [name, size] : std::vector<std::pair<const char*, std::size_t>>{{"sg_80_49", 16}, {"sg_36_9", 9}, {"He3", 3}}) {
    const PermGroup g = build(name);
    std::vector<ElementSet> minimal;
    const auto normals = normal_subgroups(g);
    for (const auto& n : normals) {
      if (n.size() == 1) continue;
      bool is_min = true;
      for (const auto& m : normals) {
        if (m.size() > 1 && m.size() < n.size() && std::includes(n.begin(), n.end(), m.begin(), m.end())) is_min = false;
      }
      if (is_min) minimal.push_back(n);
    }
    CAPTURE(name);
    REQUIRE(minimal.size() == 1);
    CHECK(minimal[0].size() == size);
  }
}
