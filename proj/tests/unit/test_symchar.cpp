#include <doctest.h>

#include "charval/error.hpp"
#include "charval/symchar.hpp"

using namespace charval;

namespace {

// Exterior square of the standard character, in terms of fixed points.
long wedge_oracle(const CycleType& rho) {
  long fixed = 0;
  long fixed_by_square = 0;
  for (int part : rho.parts()) {
    if (part == 1) ++fixed;
    if (part <= 2) fixed_by_square += part;
  }
  return (fixed * fixed - fixed_by_square) / 2 - fixed + 1;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("13,1,1").parts() == std::vector<int>{13, 1, 1});
  CHECK(Partition::parse("5^2,3").parts() == std::vector<int>{5, 5, 3});
  CHECK(Partition::parse("5^2,3").size() == 13);
  CHECK(Partition::from_unsorted({2, 4, 1}).parts() == std::vector<int>{4, 2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({3, 0}), Error);
  CHECK_THROWS_AS(Partition::parse("3,x"), Error);
  CHECK(Partition({4, 2, 1}).transpose().parts() == std::vector<int>{3, 2, 1, 1});
}

TEST_CASE("trivial and sign characters") {
  for (const auto& rho : partitions_of(6)) {
    CHECK(mn_value(Partition({6}), rho) == 1);
    CHECK(mn_value(Partition({1, 1, 1, 1, 1, 1}), rho) == cycle_type_sign(rho));
  }
}

TEST_CASE("size mismatch") {
  try {
    mn_value(Partition({3}), Partition({2}));
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("hook degrees") {
  CHECK(hook_degree(Partition({5})) == 1);
  CHECK(hook_degree(Partition({6, 1})) == 6);
  CHECK(hook_degree(Partition({13, 1, 1})) == 91);
  for (int n = 1; n <= 7; ++n) {
    mpz_class sum = 0;
    for (const auto& lambda : partitions_of(n)) sum += hook_degree(lambda) * hook_degree(lambda);
    CHECK(sum == factorial(n));
  }
  for (int n = 1; n <= 8; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : partitions_of(n)) CHECK(mn_value(lambda, ones) == hook_degree(lambda));
  }
}

TEST_CASE("partition counts") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(20).size() == 627);
}

TEST_CASE("self conjugacy") {
  CHECK_FALSE(is_self_conjugate(Partition({2, 1, 1})));
  CHECK(is_self_conjugate(Partition({2, 2})));
  CHECK(is_self_conjugate(Partition({3, 1, 1})));
  for (int n = 6; n <= 20; ++n) CHECK_FALSE(is_self_conjugate(Partition({n - 2, 1, 1})));
}

TEST_CASE("exterior square oracle for (n-2,1,1)") {
  for (int n = 4; n <= 20; ++n) {
    const Partition lambda({n - 2, 1, 1});
    for (const auto& rho : partitions_of(n)) {
      CAPTURE(n);
      CHECK(mn_value(lambda, rho) == wedge_oracle(rho));
    }
  }
}

TEST_CASE("tabulated values for n = 15") {
  const Partition lambda({13, 1, 1});
  CHECK(mn_value(lambda, Partition({9, 4, 2})) == 0);
  CHECK(mn_value(lambda, Partition({11, 2, 2})) == -1);
  CHECK(mn_value(lambda, Partition({5, 4, 2, 2, 2})) == -2);
  CHECK(mn_value(lambda, Partition({7, 2, 2, 2, 2})) == -3);
}

TEST_CASE("S5 column sums") {
  // sum over lambda of chi(rho)^2 is the centralizer order
  const auto parts = partitions_of(5);
  for (const auto& rho : parts) {
    mpz_class sum = 0;
    for (const auto& lambda : parts) sum += mn_value(lambda, rho) * mn_value(lambda, rho);
    mpz_class centralizer = 1;
    std::vector<int> mult(6, 0);
    for (int p : rho.parts()) {
      centralizer *= p;
      centralizer *= ++mult[static_cast<std::size_t>(p)];
    }
    CHECK(sum == centralizer);
  }
}
