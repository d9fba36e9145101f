#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charval {

// An exact element of a cyclotomic field Q(z_n), z_n = exp(2 pi i / n).
//
// Stored as the residue of a polynomial in z_n modulo the n-th cyclotomic
// polynomial, with n reduced to the conductor: the least n whose field contains
// the value. Conductors are never 2 mod 4 and rationals have conductor 1, so two
// values are equal exactly when (conductor, coeffs) agree.
class Cyc {
 public:
  Cyc();
  Cyc(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyc(const mpq_class& value);

  static Cyc root_of_unity(int n, long k);
  // Sum over j of by_exponent[j] * z_n^j; by_exponent has length n.
  static Cyc from_exponent_sum(int n, std::span<const mpq_class> by_exponent);

  int conductor() const noexcept { return conductor_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  bool is_rational() const noexcept { return conductor_ == 1; }
  bool is_zero() const noexcept { return conductor_ == 1 && coeffs_[0] == 0; }
  // Only meaningful when is_rational().
  const mpq_class& rational() const noexcept { return coeffs_[0]; }

  // Display grammar: a reduced fraction for rationals, otherwise the nonzero
  // terms in ascending exponent, e.g. "-1 - z(5)^2 - z(5)^3" or "1/2 + 3*z(8)".
  std::string to_string() const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a);
  friend bool operator==(const Cyc& a, const Cyc& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Cyc(int conductor, std::vector<mpq_class> coeffs);
  static Cyc canonical(int n, std::vector<mpq_class> full);
  std::vector<mpq_class> embed(int n) const;

  int conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };
Cyc arith(const Cyc& a, const Cyc& b, ArithOp op);

Cyc conjugate(const Cyc& a);
// Substitutes z -> z^v; throws NotCoprime unless gcd(v, conductor) = 1.
Cyc galois(const Cyc& a, long v);

struct CycClassification {
  bool is_rational = false;
  bool is_rational_integer = false;
  // Rational integer >= 1; zero is not natural here.
  bool is_positive_natural = false;
  Cyc abs_squared;
};

CycClassification classify(const Cyc& a);

// Canonical total order used for every value set: rationals numerically first,
// then the remaining values by display string.
bool display_less(const Cyc& a, const Cyc& b);

// Inverse of Cyc::to_string; also accepts any well-formed sum of such terms.
Cyc parse_cyc(std::string_view text);

// Floating point rendering for debugging only. Never used for decisions.
std::complex<double> approximate(const Cyc& a);

int euler_phi(int n);
// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

}  // namespace charval
