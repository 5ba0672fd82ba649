#include "su2comm/homalg/rings.hpp"

#include <algorithm>

#include "su2comm/errors.hpp"

namespace su2comm::homalg {

RingTable standard_ring_table(long long x_sq_coeff, long long s1s2_coeff) {
  RingTable t;
  t.degree = {{"x", 2}, {"s1", 3}, {"s2", 3}, {"s3", 3}, {"s4", 3}, {"y", 4}, {"z", 6}};
  t.fundamental_degree = 6;
  t.fundamental_class = "z";
  t.products["x"]["x"] = {{"y", x_sq_coeff}};
  t.products["x"]["y"] = {{"z", 1}};
  t.products["y"]["x"] = {{"z", 1}};
  t.products["s1"]["s2"] = {{"z", s1s2_coeff}};
  t.products["s2"]["s1"] = {{"z", -s1s2_coeff}};
  t.products["s3"]["s4"] = {{"z", 1}};
  t.products["s4"]["s3"] = {{"z", -1}};
  return t;
}

namespace {

std::map<std::string, long long> ring_product(const RingTable& t, const std::string& u,
                                              const std::string& v) {
  if (u == "1") {
    if (v == "1") return {{"1", 1}};
    return {{v, 1}};
  }
  if (v == "1") return {{u, 1}};
  if (auto iu = t.products.find(u); iu != t.products.end())
    if (auto iv = iu->second.find(v); iv != iu->second.end()) return iv->second;
  // fall back to the stored opposite order with the commutativity sign
  if (auto iv = t.products.find(v); iv != t.products.end())
    if (auto iu = iv->second.find(u); iu != iv->second.end()) {
      std::map<std::string, long long> out = iu->second;
      if (t.degree.at(u) % 2 && t.degree.at(v) % 2)
        for (auto& [_, c] : out) c = -c;
      return out;
    }
  return {};
}

}  // namespace

bool ring_table_check(const RingTable& t) {
  // graded-commutativity when both orders are stored explicitly
  for (const auto& [u, row] : t.products)
    for (const auto& [v, uv] : row) {
      auto iv = t.products.find(v);
      if (iv == t.products.end()) continue;
      auto iu = iv->second.find(u);
      if (iu == iv->second.end()) continue;
      const long long sign = (t.degree.at(u) % 2 && t.degree.at(v) % 2) ? -1 : 1;
      std::map<std::string, long long> expect = uv;
      for (auto& [_, c] : expect) c *= sign;
      std::map<std::string, long long> got = iu->second;
      std::erase_if(expect, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(got, [](const auto& kv) { return kv.second == 0; });
      if (got != expect) return false;
    }
  // odd-degree squares vanish
  for (const auto& [g, d] : t.degree) {
    if (d % 2 == 0) continue;
    for (const auto& [_, c] : ring_product(t, g, g))
      if (c != 0) return false;
  }
  // duality pairing into the fundamental degree is unimodular degree by degree
  std::map<int, std::vector<std::string>> basis;
  basis[0].push_back("1");
  for (const auto& [g, d] : t.degree) basis[d].push_back(g);
  const int n = t.fundamental_degree;
  for (int q = 0; q <= n; ++q) {
    const auto rows = basis.count(q) ? basis[q] : std::vector<std::string>{};
    const auto cols = basis.count(n - q) ? basis[n - q] : std::vector<std::string>{};
    if (rows.size() != cols.size())
      throw DualityFailure("pairing blocks have mismatched dimensions in degree " +
                           std::to_string(q));
    if (rows.empty()) continue;
    IMat m = imat_zero((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) {
        const auto p = ring_product(t, rows[i], cols[j]);
        auto it = p.find(t.fundamental_class);
        if (it != p.end()) m[i][j] = it->second;
      }
    const BigInt det = imat_det(m);
    if (det != 1 && det != -1)
      throw DualityFailure("duality pairing degenerate in degree " + std::to_string(q));
  }
  return true;
}

Rational bernoulli(int n) {
  using boost::multiprecision::cpp_int;
  static std::vector<Rational> cache = {1};
  while ((int)cache.size() <= n) {
    const int m = (int)cache.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational sum = 0;
    cpp_int binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      sum += Rational(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-sum / Rational(binom));
  }
  return cache[n];
}

Rational thaddeus_check(int m, int g) {
  using boost::multiprecision::cpp_int;
  const int k = m - g + 1;
  if (k < 0) throw Error("thaddeus_check requires m >= g - 1");
  cpp_int falling = 1;  // m!/(m-g+1)! = m (m-1) ... (k+1)
  for (int v = m; v > k; --v) falling *= v;
  Rational c = Rational(falling) * ((cpp_int(1) << k) - 2) * bernoulli(k);
  const int e = 2 * g - 2;
  if (e >= 0) c *= cpp_int(1) << e;
  else c /= cpp_int(1) << (-e);
  if (g % 2) c = -c;
  return c;
}

WallInvariants wall_invariants(long long c1_coeff, long long c2_coeff, long long cube_coeff) {
  WallInvariants w;
  w.d = cube_coeff;
  // x p1 = x (c1^2 - 2 c2) = (c1^2 cube - 2 c2) z
  w.p = c1_coeff * c1_coeff * cube_coeff - 2 * c2_coeff;
  w.congruence_ok = ((w.p - 4 * w.d) % 24 == 0);
  return w;
}

GradedGroup gysin_solve(const std::vector<long long>& cup_e, int base_top) {
  GradedGroup out;
  auto coeff = [&](int k) {  // H^{2k} -> H^{2k+2}; valid for 0 <= k < base_top/2
    return k >= 0 && k < (int)cup_e.size() ? cup_e[k] : 0;
  };
  for (int q = 0; q <= base_top + 1; ++q) {
    std::vector<long long> f;
    if (q % 2 == 0 && q <= base_top) {
      // coker of the incoming Euler multiplication
      const long long c = q >= 2 ? coeff(q / 2 - 1) : 0;
      f.push_back(c == 0 ? 0 : std::llabs(c));
    }
    if (q % 2 == 1 && q - 1 <= base_top) {
      // ker of the outgoing Euler multiplication from degree q-1
      const bool has_target = q + 1 <= base_top;
      const long long c = has_target ? coeff((q - 1) / 2) : 0;
      if (c == 0) f.push_back(0);
    }
    out.set(q, f);
  }
  return out;
}

long long gysin_infer_lambda(const GradedGroup& total) {
  long long lambda = 1;
  for (long long o : total.at(4))
    if (o > 1) lambda *= o;
  return lambda;
}

}  // namespace su2comm::homalg
