#include "su2comm/homalg/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace su2comm::homalg {

IMat imat_identity(int n) {
  IMat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_zero(int rows, int cols) {
  return IMat(rows, std::vector<BigInt>(cols, 0));
}

IMat imat_mul(const IMat& a, const IMat& b) {
  const int m = (int)a.size(), k = m ? (int)a[0].size() : 0;
  const int n = b.empty() ? 0 : (int)b[0].size();
  if ((int)b.size() != k) throw std::invalid_argument("imat_mul shape mismatch");
  IMat c = imat_zero(m, n);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

BigInt imat_det(IMat a) {
  const int n = (int)a.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {
BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Quotient rounded to nearest, so the remainder is at most |b| / 2.
BigInt rounded_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  const BigInt r = a - q * b;
  if (2 * babs(r) > babs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

// g = gcd(a, b) > 0 with x a + y b = g (a, b not both zero).
BigInt ext_gcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const BigInt q = a / b;
    a -= q * b; std::swap(a, b);
    x0 -= q * x1; std::swap(x0, x1);
    y0 -= q * y1; std::swap(y0, y1);
  }
  if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
  x = x0;
  y = y0;
  return a;
}
}

SNFResult smith_normal_form(const IMat& A) {
  const int m = (int)A.size();
  const int n = m ? (int)A[0].size() : 0;
  SNFResult r{imat_identity(m), A, imat_identity(n)};
  IMat& D = r.D;
  IMat& U = r.U;
  IMat& V = r.V;

  auto row_swap = [&](int i, int j) { std::swap(D[i], D[j]); std::swap(U[i], U[j]); };
  auto col_swap = [&](int i, int j) {
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : V) std::swap(row[i], row[j]);
  };
  auto row_add = [&](int dst, int src, const BigInt& c) {  // row dst += c * row src
    for (int j = 0; j < n; ++j) D[dst][j] += c * D[src][j];
    for (int j = 0; j < m; ++j) U[dst][j] += c * U[src][j];
  };
  auto col_add = [&](int dst, int src, const BigInt& c) {
    for (int i = 0; i < m; ++i) D[i][dst] += c * D[i][src];
    for (int i = 0; i < n; ++i) V[i][dst] += c * V[i][src];
  };
  auto row_neg = [&](int i) {
    for (auto& x : D[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  };
  auto row_mix = [&](int i1, int i2, const BigInt& p, const BigInt& q,
                     const BigInt& r, const BigInt& s) {  // det(p s - q r) = 1
    for (int j = 0; j < n; ++j) {
      const BigInt a = D[i1][j], b = D[i2][j];
      D[i1][j] = p * a + q * b;
      D[i2][j] = r * a + s * b;
    }
    for (int j = 0; j < m; ++j) {
      const BigInt a = U[i1][j], b = U[i2][j];
      U[i1][j] = p * a + q * b;
      U[i2][j] = r * a + s * b;
    }
  };

  const int rmax = std::min(m, n);
  bool exhausted = false;
  for (int t = 0; t < rmax && !exhausted; ++t) {
    // Reduce with a freshly chosen minimal pivot each round; every retry
    // starts from a strictly smaller pivot (some remainder is at most half
    // the previous one), so the round terminates.
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi < 0 || babs(D[i][j]) < babs(D[pi][pj]))) { pi = i; pj = j; }
      if (pi < 0) { exhausted = true; break; }
      row_swap(t, pi);
      col_swap(t, pj);
      bool clear = true;
      for (int i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        row_add(i, t, -rounded_div(D[i][t], D[t][t]));
        if (D[i][t] != 0) clear = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        col_add(j, t, -rounded_div(D[t][j], D[t][t]));
        if (D[t][j] != 0) clear = false;
      }
      if (clear) break;
    }
    if (!exhausted && D[t][t] < 0) row_neg(t);
  }

  // enforce the divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t + 1 < rmax; ++t) {
      if (D[t][t] == 0 || D[t + 1][t + 1] == 0) continue;
      if (D[t + 1][t + 1] % D[t][t] == 0) continue;
      changed = true;
      // replace diag(a, b) with diag(gcd, lcm) via a Bezout row mix:
      // after adding column t+1 to column t the block is [[a, 0], [b, b]];
      // mixing rows by [[x, y], [-b/g, a/g]] (x a + y b = g, det 1) gives
      // [[g, y b], [0, a b / g]], and one column op clears the corner.
      const BigInt a = D[t][t], b = D[t + 1][t + 1];
      BigInt x, y;
      const BigInt g = ext_gcd(a, b, x, y);
      col_add(t, t + 1, 1);
      row_mix(t, t + 1, x, y, -b / g, a / g);
      col_add(t + 1, t, -(y * b / g));
      if (D[t][t] < 0) row_neg(t);
    }
    // zero diagonal entries must come last
    for (int t = 0; t + 1 < rmax; ++t)
      if (D[t][t] == 0 && D[t + 1][t + 1] != 0) {
        row_swap(t, t + 1);
        col_swap(t, t + 1);
        changed = true;
      }
  }
  for (int t = 0; t < rmax; ++t)
    if (D[t][t] < 0) row_neg(t);
  return r;
}

int snf_rank(const SNFResult& r) {
  int rank = 0;
  const int rmax = std::min(r.D.size(), r.D.empty() ? 0 : r.D[0].size());
  for (int i = 0; i < rmax; ++i)
    if (r.D[i][i] != 0) ++rank;
  return rank;
}

}  // namespace su2comm::homalg
