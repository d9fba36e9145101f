#include "charval/finite_field.hpp"

#include <algorithm>

#include "charval/error.hpp"

namespace charval::fp {

u64 Field::pow(u64 base, u64 exponent) const noexcept {
  u64 result = 1 % p_;
  base %= p_;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

u64 Field::inv(u64 a) const {
  if (a % p_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly make_monic(const Field& field, Poly f) {
  trim(f);
  if (f.empty()) return f;
  const u64 lead = field.inv(f.back());
  for (auto& c : f) c = field.mul(c, lead);
  return f;
}

Poly poly_mul(const Field& field, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

namespace {

// Returns quotient; a is replaced by the remainder.
Poly divide(const Field& field, Poly& a, const Poly& b) {
  trim(a);
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.size() < b.size()) return {};
  const u64 lead_inv = field.inv(b.back());
  Poly quotient(a.size() - b.size() + 1, 0);
  for (std::size_t top = a.size(); top-- >= b.size();) {
    const u64 c = field.mul(a[top], lead_inv);
    quotient[top - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        auto& slot = a[top - (b.size() - 1) + i];
        slot = field.sub(slot, field.mul(c, b[i]));
      }
    }
    if (top == b.size() - 1) break;
  }
  trim(a);
  trim(quotient);
  return quotient;
}

}  // namespace

Poly poly_rem(const Field& field, Poly a, const Poly& b) {
  divide(field, a, b);
  return a;
}

Poly poly_quot(const Field& field, Poly a, const Poly& b) { return divide(field, a, b); }

Poly poly_gcd(const Field& field, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(field, std::move(a));
}

Poly poly_powmod(const Field& field, const Poly& base, u64 exponent, const Poly& f) {
  Poly result = poly_rem(field, Poly{1}, f);
  Poly b = poly_rem(field, base, f);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_rem(field, poly_mul(field, result, b), f);
    b = poly_rem(field, poly_mul(field, b, b), f);
    exponent >>= 1U;
  }
  return result;
}

namespace {

void split_linear(const Field& field, const Poly& g, std::mt19937_64& rng, std::vector<u64>& out) {
  const std::size_t degree = g.size() - 1;
  if (degree == 0) return;
  if (degree == 1) {
    out.push_back(field.neg(field.mul(g[0], field.inv(g[1]))));
    return;
  }
  std::uniform_int_distribution<u64> pick(0, field.p() - 1);
  while (true) {
    Poly shifted{pick(rng), 1};
    Poly h = poly_powmod(field, shifted, (field.p() - 1) / 2, g);
    if (h.empty()) continue;
    h[0] = field.sub(h[0], 1);
    trim(h);
    Poly d = poly_gcd(field, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(field, d, rng, out);
      split_linear(field, make_monic(field, poly_quot(field, g, d)), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> roots(const Field& field, const Poly& f, std::mt19937_64& rng) {
  Poly monic = make_monic(field, f);
  if (monic.size() <= 1) return {};
  // gcd(f, x^p - x) is the product of the distinct linear factors of f.
  Poly xp = poly_powmod(field, Poly{0, 1}, field.p(), monic);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = field.sub(xp[1], 1);
  trim(xp);
  Poly linear_part = poly_gcd(field, monic, xp);
  std::vector<u64> out;
  split_linear(field, linear_part, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

Poly charpoly(const Field& field, Matrix h) {
  const std::size_t n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h[pivot][m - 1] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (auto& row : h) std::swap(row[pivot], row[m]);
    }
    const u64 inv_pivot = field.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      const u64 u = field.mul(h[j][m - 1], inv_pivot);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = field.sub(h[j][c], field.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = field.add(h[r][m], field.mul(u, h[r][j]));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly next = poly_mul(field, Poly{field.neg(h[m - 1][m - 1]), 1}, p[m - 1]);
    u64 product = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      product = field.mul(product, h[i][i - 1]);
      const u64 coeff = field.mul(h[i - 1][m - 1], product);
      if (coeff != 0) {
        const Poly& prev = p[i - 1];
        if (next.size() < prev.size()) next.resize(prev.size(), 0);
        for (std::size_t t = 0; t < prev.size(); ++t) next[t] = field.sub(next[t], field.mul(coeff, prev[t]));
      }
    }
    trim(next);
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<std::size_t> rref(const Field& field, Matrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const u64 inv = field.inv(rows[r][c]);
    for (auto& x : rows[r]) x = field.mul(x, inv);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][c] == 0) continue;
      const u64 factor = rows[other][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[other][k] = field.sub(rows[other][k], field.mul(factor, rows[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<u64>> nullspace(const Field& field, Matrix a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::size_t> pivots = rref(field, a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  Field field(p);
  for (u64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 q) { return field.pow(g, (p - 1) / q) != 1; })) {
      return g;
    }
  }
  return 1;
}

}  // namespace charval::fp
