#include <doctest.h>

#include "charval/catalog.hpp"
#include "charval/invariants.hpp"

using namespace charval;

namespace {

std::vector<std::string> strings(const std::vector<Cyc>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

InvariantReport report_of(const char* name) { return report(character_table(build(name))); }

}  // namespace

TEST_CASE("S3") {
  const auto r = report_of("S3");
  CHECK(strings(r.cv) == std::vector<std::string>{"-1", "0", "1", "2"});
  CHECK(r.cd == std::vector<long>{1, 2});
  CHECK(strings(r.cdc) == std::vector<std::string>{"-1", "0"});
  CHECK(strings(r.ncv) == std::vector<std::string>{"-1", "0"});
  CHECK(r.b == 2);
  CHECK(r.dl == 2);
  CHECK(r.is_rational_group);
}

TEST_CASE("S4 and C2") {
  auto r = report_of("S4");
  CHECK(strings(r.cv) == std::vector<std::string>{"-1", "0", "1", "2", "3"});
  CHECK(r.cdc.size() == 2);
  r = report_of("C2");
  CHECK(strings(r.cv) == std::vector<std::string>{"-1", "1"});
  CHECK(strings(r.cdc) == std::vector<std::string>{"-1"});
}

TEST_CASE("set invariants hold everywhere") {
  for (const auto* e : catalog_entries(false)) {
    CAPTURE(e->name);
    const CharTable t = character_table(build(e->name));
    const auto r = report(t);
    CHECK(contains(r.cv, Cyc(1)));
    for (const auto& v : r.ncv) {
      CHECK(contains(r.cdc, v));
      CHECK_FALSE(classify(v).is_positive_natural);
    }
    for (const auto& v : r.cdc) {
      CHECK(contains(r.cv, v));
      CHECK_FALSE((v.is_rational() && v.rational() > 0 &&
                   std::binary_search(r.cd.begin(), r.cd.end(), v.rational().get_num().get_si())));
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      CHECK(r.per_char_cv_sizes[i] == per_char_values(t, i).size());
      if (t.rows[i].degree > 1) CHECK(r.per_char_cv_sizes[i] >= 3);
    }
    CHECK(std::is_sorted(r.cv.begin(), r.cv.end(), display_less));
  }
}

TEST_CASE("per-row values") {
  const CharTable a5 = character_table(build("A5"));
  bool five = false;
  for (std::size_t i = 0; i < a5.rows.size(); ++i) {
    const auto values = per_char_values(a5, i);
    if (a5.rows[i].degree == 3) {
      CHECK(values.size() == 5);
      five = true;
    }
  }
  CHECK(five);
  CHECK(per_char_values(a5, 0).size() == 1);
}

TEST_CASE("root of unity elements") {
  const CharTable c6 = character_table(build("C6"));
  CHECK(root_of_unity_elements(c6).size() == 6);
  const CharTable s3 = character_table(build("S3"));
  const auto s3_roots = root_of_unity_elements(s3);
  REQUIRE(s3_roots.size() == 1);
  CHECK(s3.classes().element_orders[static_cast<std::size_t>(s3_roots[0])] == 3);
  CHECK(root_of_unity_elements(character_table(build("D8"))).empty());
}

TEST_CASE("canonical value sets") {
  const auto set = canonical_value_set({Cyc(2), Cyc(-1), Cyc(2), Cyc::root_of_unity(3, 1), Cyc(0)});
  CHECK(strings(set) == std::vector<std::string>{"-1", "0", "2", "z(3)"});
  CHECK(contains(set, Cyc(0)));
  CHECK_FALSE(contains(set, Cyc(1)));
}
