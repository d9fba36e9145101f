#include <doctest.h>

#include <algorithm>

#include "charval/cyclo.hpp"
#include "charval/error.hpp"

using namespace charval;

namespace {

Cyc z(int n, long k = 1) { return Cyc::root_of_unity(n, k); }

}  // namespace

TEST_CASE("rationals") {
  CHECK(Cyc(3).to_string() == "3");
  CHECK(Cyc(mpq_class(6, 4)).to_string() == "3/2");
  CHECK(Cyc(-2).to_string() == "-2");
  CHECK(Cyc().is_zero());
  CHECK((Cyc(2) * Cyc(mpq_class(1, 2))) == Cyc(1));
}

TEST_CASE("roots of unity reduce to the conductor") {
  CHECK(z(4, 2) == Cyc(-1));
  CHECK(z(1) == Cyc(1));
  CHECK(z(2) == Cyc(-1));
  CHECK((z(3) + z(3, 2)) == Cyc(-1));
  Cyc sum5;
  for (int k = 0; k < 5; ++k) sum5 = sum5 + z(5, k);
  CHECK(sum5.is_zero());
  CHECK(z(6).conductor() == 3);
  CHECK(z(12, 4) == z(3));
  CHECK((z(8) + z(8, 7)).conductor() == 8);
  CHECK((z(8) * z(8)) == z(4));
  CHECK(z(7, 7) == Cyc(1));
  CHECK(z(7, -1) == z(7, 6));
}

TEST_CASE("display grammar") {
  CHECK(z(3).to_string() == "z(3)");
  CHECK((-Cyc(1) - z(3)).to_string() == "-1 - z(3)");
  CHECK((z(7) + z(7, 2) + z(7, 4)).to_string() == "z(7) + z(7)^2 + z(7)^4");
  CHECK((Cyc(mpq_class(1, 2)) + Cyc(3) * z(8)).to_string() == "1/2 + 3*z(8)");
  CHECK((-Cyc(1) - z(5, 2) - z(5, 3)).to_string() == "-1 - z(5)^2 - z(5)^3");
  CHECK(z(4).to_string() == "z(4)");
  CHECK((-z(4)).to_string() == "-z(4)");
}

TEST_CASE("parse round trip") {
  for (const Cyc& v : {Cyc(0), Cyc(-7), Cyc(mpq_class(-3, 5)), z(3), -Cyc(1) - z(3), z(7) + z(7, 2) + z(7, 4),
                       Cyc(mpq_class(1, 2)) + Cyc(3) * z(8), z(5, 2) - z(5, 3)}) {
    CHECK(parse_cyc(v.to_string()) == v);
  }
  CHECK(parse_cyc("z(6)") == z(6));
  CHECK_THROWS_AS(parse_cyc("z(0)"), Error);
  CHECK_THROWS_AS(parse_cyc("1 +"), Error);
}

TEST_CASE("conjugation and galois action") {
  CHECK(conjugate(z(5)) == z(5, 4));
  CHECK(conjugate(z(4)) == -z(4));
  const Cyc eta = z(7) + z(7, 2) + z(7, 4);
  CHECK(galois(eta, 2) == eta);
  CHECK(galois(eta, 3) == conjugate(eta));
  CHECK((eta + conjugate(eta)) == Cyc(-1));
  CHECK(galois(Cyc(5), 2) == Cyc(5));
  try {
    galois(z(5), 5);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("arith matches operators") {
  const Cyc a = z(5) + Cyc(2);
  const Cyc b = z(3);
  CHECK(arith(a, b, ArithOp::Add) == a + b);
  CHECK(arith(a, b, ArithOp::Sub) == a - b);
  CHECK(arith(a, b, ArithOp::Mul) == a * b);
  CHECK(((a * b) - (b * a)).is_zero());
  CHECK((a * (b + Cyc(1))) == (a * b + a));
}

TEST_CASE("classify") {
  auto c = classify(Cyc(3));
  CHECK(c.is_rational);
  CHECK(c.is_rational_integer);
  CHECK(c.is_positive_natural);
  CHECK_FALSE(classify(Cyc(0)).is_positive_natural);
  CHECK_FALSE(classify(Cyc(mpq_class(1, 2))).is_rational_integer);
  c = classify(z(7) + z(7, 2) + z(7, 4));
  CHECK_FALSE(c.is_rational);
  CHECK(c.abs_squared == Cyc(2));
  CHECK(classify(z(9)).abs_squared == Cyc(1));
}

TEST_CASE("display order puts rationals first") {
  std::vector<Cyc> v{z(3), Cyc(2), Cyc(-1), Cyc(0), -Cyc(1) - z(3)};
  std::sort(v.begin(), v.end(), display_less);
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.to_string());
  CHECK(s == std::vector<std::string>{"-1", "0", "2", "-1 - z(3)", "z(3)"});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  CHECK(euler_phi(36) == 12);
  CHECK(euler_phi(17) == 16);
}
