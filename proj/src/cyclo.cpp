#include "charval/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "charval/error.hpp"

namespace charval {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

std::vector<int> distinct_primes(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

long inverse_mod(long a, long n) {
  long t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r != 0) {
    long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod(t, n);
}

// Rewrites a full exponent vector over z_n as one over z_m with m = n/2 when
// n = 2 mod 4, using z_{2m} = -z_m^{(m+1)/2}.
std::pair<int, std::vector<mpq_class>> standardize(int n, std::vector<mpq_class> full) {
  if (n % 4 != 2) return {n, std::move(full)};
  const int m = n / 2;
  std::vector<mpq_class> out(static_cast<std::size_t>(m));
  const long half = (m + 1) / 2;
  for (int j = 0; j < n; ++j) {
    const mpq_class& c = full[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    auto& slot = out[static_cast<std::size_t>(mod(static_cast<long>(j) * half, m))];
    if (j % 2 == 0) slot += c; else slot -= c;
  }
  return {m, std::move(out)};
}

// Polynomial remainder modulo the n-th cyclotomic polynomial; result has length phi(n).
std::vector<mpq_class> reduce(std::vector<mpq_class> poly, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t top = poly.size(); top-- > deg;) {
    if (poly[top] == 0) continue;
    const mpq_class c = poly[top];
    for (std::size_t i = 0; i < deg; ++i) {
      if (phi[i] != 0) poly[top - deg + i] -= c * static_cast<long>(phi[i]);
    }
    poly[top] = 0;
  }
  poly.resize(deg);
  return poly;
}

// Average over Gal(Q(z_n)/Q(z_{n/p})) expressed over z_{n/p}; n is not 2 mod 4.
std::vector<mpq_class> relative_average(const std::vector<mpq_class>& coeffs, int n, int p) {
  const int d = n / p;
  std::vector<mpq_class> out(static_cast<std::size_t>(d));
  if (d % p == 0) {
    for (std::size_t j = 0; j < coeffs.size(); j += static_cast<std::size_t>(p)) {
      out[j / static_cast<std::size_t>(p)] += coeffs[j];
    }
  } else {
    const long w = d == 1 ? 0 : inverse_mod(p, d);
    const mpq_class off(-1, p - 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      auto& slot = out[static_cast<std::size_t>(mod(static_cast<long>(j) * w, std::max(d, 1)))];
      if (j % static_cast<std::size_t>(p) == 0) slot += coeffs[j]; else slot += off * coeffs[j];
    }
  }
  return out;
}

std::vector<mpq_class> embed_reduced(const std::vector<mpq_class>& coeffs, int from, int to) {
  const std::size_t step = static_cast<std::size_t>(to / from);
  std::vector<mpq_class> full(static_cast<std::size_t>(to));
  for (std::size_t j = 0; j < coeffs.size(); ++j) full[(j * step) % full.size()] += coeffs[j];
  return reduce(std::move(full), to);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p : distinct_primes(n)) result = result / p * (p - 1);
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<long long>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by every Phi_d, d | n, d < n.
  std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<long long> quotient(poly.size() - dd, 0);
    for (std::size_t top = poly.size(); top-- > dd;) {
      long long c = poly[top];
      quotient[top - dd] = c;
      for (std::size_t i = 0; i <= dd; ++i) poly[top - dd + i] -= c * divisor[i];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::make_unique<const std::vector<long long>>(std::move(poly)));
  return *it->second;
}

Cyc::Cyc() : conductor_(1), coeffs_{mpq_class(0)} {}
Cyc::Cyc(long value) : conductor_(1), coeffs_{mpq_class(value)} {}
Cyc::Cyc(const mpq_class& value) : conductor_(1), coeffs_{value} { coeffs_[0].canonicalize(); }
Cyc::Cyc(int conductor, std::vector<mpq_class> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyc Cyc::canonical(int n, std::vector<mpq_class> full) {
  auto [m, standard] = standardize(n, std::move(full));
  std::vector<mpq_class> coeffs = reduce(std::move(standard), m);
  // Descend greedily through maximal subfields Q(z_{m/p}) while the value lies in one.
  bool descended = true;
  while (descended && m > 1) {
    descended = false;
    for (int p : distinct_primes(m)) {
      auto [d, candidate] = standardize(m / p, relative_average(coeffs, m, p));
      std::vector<mpq_class> reduced = reduce(std::move(candidate), d);
      if (embed_reduced(reduced, d, m) == coeffs) {
        m = d;
        coeffs = std::move(reduced);
        descended = true;
        break;
      }
    }
  }
  return Cyc(m, std::move(coeffs));
}

Cyc Cyc::root_of_unity(int n, long k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be positive");
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  full[static_cast<std::size_t>(mod(k, n))] = 1;
  return canonical(n, std::move(full));
}

Cyc Cyc::from_exponent_sum(int n, std::span<const mpq_class> by_exponent) {
  if (n < 1 || by_exponent.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "exponent vector length must equal n >= 1");
  }
  return canonical(n, std::vector<mpq_class>(by_exponent.begin(), by_exponent.end()));
}

std::vector<mpq_class> Cyc::embed(int n) const {
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  const std::size_t step = static_cast<std::size_t>(n / conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) full[(j * step) % full.size()] = coeffs_[j];
  return full;
}

namespace {

int common_conductor(int a, int b) {
  int l = std::lcm(a, b);
  return l % 4 == 2 ? l / 2 : l;
}

}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyc(mpq_class(a.coeffs_[0] + b.coeffs_[0]));
  const int n = common_conductor(a.conductor_, b.conductor_);
  std::vector<mpq_class> x = a.embed(n);
  std::vector<mpq_class> y = b.embed(n);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return Cyc::canonical(n, std::move(x));
}

Cyc operator-(const Cyc& a) {
  Cyc out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == 1 && b.conductor_ == 1) return Cyc(mpq_class(a.coeffs_[0] * b.coeffs_[0]));
  if (a.is_zero() || b.is_zero()) return Cyc();
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const Cyc& scalar = a.conductor_ == 1 ? a : b;
    Cyc out = a.conductor_ == 1 ? b : a;
    for (auto& c : out.coeffs_) c *= scalar.coeffs_[0];
    return out;
  }
  const int n = common_conductor(a.conductor_, b.conductor_);
  // Multiply exponent vectors cyclically in Z/n, then reduce.
  std::vector<mpq_class> product(static_cast<std::size_t>(n));
  const std::size_t sa = static_cast<std::size_t>(n / a.conductor_);
  const std::size_t sb = static_cast<std::size_t>(n / b.conductor_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      product[(i * sa + j * sb) % product.size()] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyc::canonical(n, std::move(product));
}

Cyc arith(const Cyc& a, const Cyc& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return Cyc();
}

Cyc galois(const Cyc& a, long v) {
  const int n = a.conductor();
  if (n == 1) return a;
  if (std::gcd(mod(v, n), static_cast<long>(n)) != 1) {
    throw Error(ErrorCode::NotCoprime, std::to_string(v) + " is not coprime to conductor " + std::to_string(n));
  }
  std::vector<mpq_class> full(static_cast<std::size_t>(n));
  const auto& c = a.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    full[static_cast<std::size_t>(mod(static_cast<long>(j) * v, n))] += c[j];
  }
  return Cyc::from_exponent_sum(n, full);
}

Cyc conjugate(const Cyc& a) { return a.is_rational() ? a : galois(a, -1); }

CycClassification classify(const Cyc& a) {
  CycClassification out;
  out.is_rational = a.is_rational();
  out.is_rational_integer = out.is_rational && a.rational().get_den() == 1;
  out.is_positive_natural = out.is_rational_integer && a.rational() >= 1;
  out.abs_squared = a * conjugate(a);
  return out;
}

std::string Cyc::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string out;
  const std::string z = "z(" + std::to_string(conductor_) + ")";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpq_class& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class magnitude = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += z;
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out;
}

bool display_less(const Cyc& a, const Cyc& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.rational() < b.rational();
  return a.to_string() < b.to_string();
}

namespace {

class CycParser {
 public:
  explicit CycParser(std::string_view text) : text_(text) {}

  Cyc parse() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Cyc total = term(negative);
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') error("expected '+' or '-'");
      ++pos_;
      total = total + term(op == '-');
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void error(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + message);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Cyc term(bool negative) {
    skip_space();
    mpq_class coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) error("zero denominator");
      }
      coefficient = mpq_class(num, den);
      coefficient.canonicalize();
      have_coefficient = true;
      skip_space();
      if (peek() != '*') return Cyc(negative ? mpq_class(-coefficient) : coefficient);
      ++pos_;
      skip_space();
    }
    if (peek() != 'z') error(have_coefficient ? "expected z(n) after '*'" : "expected a number or z(n)");
    ++pos_;
    if (peek() != '(') error("expected '('");
    ++pos_;
    mpz_class n = integer();
    if (peek() != ')') error("expected ')'");
    ++pos_;
    if (n < 1 || n > 100000) error("conductor out of range");
    long exponent = 1;
    if (peek() == '^') {
      ++pos_;
      bool minus = false;
      if (peek() == '-') {
        minus = true;
        ++pos_;
      }
      mpz_class e = integer();
      if (!e.fits_slong_p()) error("exponent too large");
      exponent = minus ? -e.get_si() : e.get_si();
    }
    Cyc value = Cyc(coefficient) * Cyc::root_of_unity(static_cast<int>(n.get_si()), exponent);
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyc parse_cyc(std::string_view text) { return CycParser(text).parse(); }

std::complex<double> approximate(const Cyc& a) {
  std::complex<double> sum = 0;
  const int n = a.conductor();
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    sum += a.coeffs()[j].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

}  // namespace charval
