#include <doctest.h>

#include "charval/finite_field.hpp"

using namespace charval::fp;

TEST_CASE("field arithmetic") {
  const Field f(31);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.pow(3, 30) == 1);
  CHECK(f.sub(2, 5) == 28);
  CHECK(is_prime(137));
  CHECK_FALSE(is_prime(91));
  const u64 g = primitive_root(31);
  u64 x = g;
  int order = 1;
  while (x != 1) {
    x = f.mul(x, g);
    ++order;
  }
  CHECK(order == 30);
}

TEST_CASE("roots of a split polynomial") {
  const Field f(101);
  // (x-3)(x-7)(x-50)(x^2+1 has no roots mod 101? 101 = 1 mod 4, so it does: +-10)
  Poly p{1};
  for (u64 r : {3u, 7u, 50u}) p = poly_mul(f, p, Poly{f.neg(r), 1});
  p = poly_mul(f, p, Poly{1, 0, 1});
  std::mt19937_64 rng(1);
  CHECK(roots(f, p, rng) == std::vector<u64>{3, 7, 10, 50, 91});
}

TEST_CASE("roots skip irreducible factors") {
  const Field f(7);
  // x^2 + 1 is irreducible mod 7
  Poly p = poly_mul(f, Poly{1, 0, 1}, Poly{f.neg(2), 1});
  std::mt19937_64 rng(5);
  CHECK(roots(f, p, rng) == std::vector<u64>{2});
}

TEST_CASE("characteristic polynomial and nullspace") {
  const Field f(13);
  const Matrix a{{2, 1, 0}, {0, 2, 0}, {0, 0, 5}};
  // (x-2)^2 (x-5)
  Poly expected = poly_mul(f, poly_mul(f, Poly{f.neg(2), 1}, Poly{f.neg(2), 1}), Poly{f.neg(5), 1});
  CHECK(charpoly(f, a) == expected);
  Matrix shifted = a;
  for (int i = 0; i < 3; ++i) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = f.sub(shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], 2);
  CHECK(nullspace(f, shifted).size() == 1);
}

TEST_CASE("polynomial gcd and powmod") {
  const Field f(17);
  const Poly a = poly_mul(f, Poly{1, 1}, Poly{2, 1});
  const Poly b = poly_mul(f, Poly{1, 1}, Poly{3, 1});
  CHECK(poly_gcd(f, a, b) == Poly{1, 1});
  // x^17 = x mod (x^2 - 3x + 2) since both roots lie in F_17
  const Poly m = poly_mul(f, Poly{f.neg(1), 1}, Poly{f.neg(2), 1});
  CHECK(poly_powmod(f, Poly{0, 1}, 17, m) == Poly{0, 1});
}
