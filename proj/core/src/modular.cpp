#include "gelfand/modular.hpp"

#include <algorithm>
#include <utility>

#include "gelfand/error.hpp"
#include "gelfand/field.hpp"

namespace gelfand::modp {

Residue pow(Residue a, std::uint64_t e, Residue l) {
  Residue r = 1 % l;
  a %= l;
  while (e > 0) {
    if (e & 1) r = mul(r, a, l);
    a = mul(a, a, l);
    e >>= 1;
  }
  return r;
}

Residue inv(Residue a, Residue l) {
  if (a % l == 0) throw DomainError("inverse of zero modulo " + std::to_string(l));
  return pow(a, l - 2, l);
}

Residue reduce(long long v, Residue l) {
  const long long m = static_cast<long long>(l);
  return static_cast<Residue>(((v % m) + m) % m);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Residue primitive_root(Residue l) {
  const auto factors = prime_factors(l - 1);
  for (Residue g = 2; g < l; ++g) {
    bool ok = true;
    for (std::uint64_t p : factors) {
      if (pow(g, (l - 1) / p, l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // l = 2
}

std::uint64_t prime_in_progression(std::uint64_t m, std::uint64_t lower_bound) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 32;
  for (std::uint64_t t = std::max<std::uint64_t>(1, lower_bound / m);; ++t) {
    const std::uint64_t l = t * m + 1;
    if (l >= kLimit) {
      throw CapExceeded("no prime = 1 mod " + std::to_string(m) + " above " + std::to_string(lower_bound) +
                        " fits in 32 bits");
    }
    if (l > lower_bound && is_prime(static_cast<long long>(l))) return l;
  }
}

Poly charpoly(std::vector<std::vector<Residue>> h, Residue l) {
  const int n = static_cast<int>(h.size());
  // Hessenberg reduction by similarity transforms.
  for (int m = 1; m + 1 < n; ++m) {
    const int c = m - 1;
    int i = m;
    while (i < n && h[i][c] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const Residue tinv = inv(h[m][c], l);
    for (int i2 = m + 1; i2 < n; ++i2) {
      const Residue u = mul(h[i2][c], tinv, l);
      if (u == 0) continue;
      for (int col = 0; col < n; ++col) h[i2][col] = sub(h[i2][col], mul(u, h[m][col], l), l);
      for (int row = 0; row < n; ++row) h[row][m] = add(h[row][m], mul(u, h[row][i2], l), l);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Poly next(k + 1, 0);
    for (int d = 0; d < k; ++d) {
      next[d + 1] = add(next[d + 1], p[k - 1][d], l);
      next[d] = sub(next[d], mul(h[k - 1][k - 1], p[k - 1][d], l), l);
    }
    Residue t = 1;
    for (int i = k - 1; i >= 1; --i) {
      t = mul(t, h[i][i - 1], l);
      const Residue coeff = mul(h[i - 1][k - 1], t, l);
      if (coeff == 0) continue;
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) {
        next[d] = sub(next[d], mul(coeff, p[i - 1][d], l), l);
      }
    }
    p[k] = std::move(next);
  }
  return p[n];
}

std::vector<Residue> roots(Poly p, Residue l) {
  std::vector<Residue> out;
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  for (Residue x = 0; x < l && p.size() > 1; ++x) {
    bool found = false;
    while (p.size() > 1) {
      // Synthetic division by (y - x); remainder is p(x).
      Poly quotient(p.size() - 1);
      Residue acc = 0;
      for (std::size_t d = p.size(); d-- > 0;) {
        acc = add(mul(acc, x, l), p[d], l);
        if (d > 0) quotient[d - 1] = acc;
      }
      if (acc != 0) break;
      p = std::move(quotient);
      found = true;
    }
    if (found) out.push_back(x);
  }
  return out;
}

std::vector<int> rref(std::vector<std::vector<Residue>>& rows, Residue l) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pivot = r;
    while (pivot < m && rows[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    const Residue pinv = inv(rows[r][c], l);
    for (int j = 0; j < n; ++j) rows[r][j] = mul(rows[r][j], pinv, l);
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Residue factor = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] = sub(rows[i][j], mul(factor, rows[r][j], l), l);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<Residue>> kernel(std::vector<std::vector<Residue>> a, Residue l) {
  if (a.empty()) return {};
  const int n = static_cast<int>(a[0].size());
  const std::vector<int> pivots = rref(a, l);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Residue>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = neg(a[r][free], l);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gelfand::modp
