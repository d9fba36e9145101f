#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Dense linear algebra and univariate polynomials over a prime field F_p,
// sized for the Dixon-Schneider eigenspace splitting (p < 2^32).
namespace charval::fp {

using u64 = std::uint64_t;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}

  u64 p() const noexcept { return p_; }
  u64 reduce(long long x) const noexcept {
    long long r = x % static_cast<long long>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  u64 add(u64 a, u64 b) const noexcept { u64 s = a + b; return s >= p_ ? s - p_ : s; }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  u64 pow(u64 base, u64 exponent) const noexcept;
  u64 inv(u64 a) const;

 private:
  u64 p_;
};

// Coefficients lowest degree first; the zero polynomial is empty.
using Poly = std::vector<u64>;
using Matrix = std::vector<std::vector<u64>>;

void trim(Poly& f);
Poly make_monic(const Field& field, Poly f);
Poly poly_mul(const Field& field, const Poly& a, const Poly& b);
// Remainder of a modulo a nonzero b.
Poly poly_rem(const Field& field, Poly a, const Poly& b);
Poly poly_quot(const Field& field, Poly a, const Poly& b);
Poly poly_gcd(const Field& field, Poly a, Poly b);
// base^exponent modulo f.
Poly poly_powmod(const Field& field, const Poly& base, u64 exponent, const Poly& f);

// Distinct roots of f in F_p (p odd), ascending. Uses gcd with x^p - x, then
// random equal-degree splitting driven by rng.
std::vector<u64> roots(const Field& field, const Poly& f, std::mt19937_64& rng);

// Characteristic polynomial det(xI - A) via reduction to Hessenberg form.
Poly charpoly(const Field& field, Matrix a);

// Basis of {v : A v = 0}, in reduced form.
std::vector<std::vector<u64>> nullspace(const Field& field, Matrix a);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& field, Matrix& rows);

bool is_prime(u64 n);
// Some generator of the multiplicative group of F_p.
u64 primitive_root(u64 p);

}  // namespace charval::fp
