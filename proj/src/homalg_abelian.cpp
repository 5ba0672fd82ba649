#include "su2comm/homalg/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "su2comm/errors.hpp"

namespace su2comm::homalg {

int AbGroup::free_rank() const {
  return (int)std::count(orders.begin(), orders.end(), 0LL);
}

bool AbGroup::is_trivial() const {
  return std::all_of(orders.begin(), orders.end(), [](long long o) { return o == 1; });
}

bool AbGroup::is_free() const {
  return std::all_of(orders.begin(), orders.end(),
                     [](long long o) { return o == 0 || o == 1; });
}

long long AbGroup::torsion_order() const {
  long long p = 1;
  for (long long o : orders)
    if (o > 1) p *= o;
  return p;
}

int AbGroup::torsion_f2_rank() const {
  return (int)std::count_if(orders.begin(), orders.end(),
                            [](long long o) { return o > 1 && o % 2 == 0; });
}

std::vector<long long> AbGroup::canonical() const { return canonical_factors(orders); }

std::vector<long long> canonical_factors(std::vector<long long> orders) {
  std::vector<long long> torsion;
  int zeros = 0;
  for (long long o : orders) {
    if (o == 0) ++zeros;
    else if (o > 1) torsion.push_back(o);
  }
  if (torsion.size() > 1) {
    // normalize to an invariant-factor chain via SNF of the diagonal matrix
    const int n = (int)torsion.size();
    IMat d = imat_zero(n, n);
    for (int i = 0; i < n; ++i) d[i][i] = torsion[i];
    const SNFResult r = smith_normal_form(d);
    torsion.clear();
    for (int i = 0; i < n; ++i) {
      const long long v = (long long)r.D[i][i];
      if (v > 1) torsion.push_back(v);
    }
    std::sort(torsion.begin(), torsion.end());
  }
  std::vector<long long> out = torsion;
  out.insert(out.end(), zeros, 0);
  return out;
}

AbGroup kernel_group(const AbMap& f) {
  const int n_src = (int)f.src.orders.size();
  const int n_dst = (int)f.dst.orders.size();
  if (n_src == 0) return {};

  // Full preimage lattice {x : A x lies in the destination relation lattice}.
  std::vector<int> dst_tor;
  for (int i = 0; i < n_dst; ++i)
    if (f.dst.orders[i] != 0) dst_tor.push_back(i);
  IMat M = imat_zero(n_dst, n_src + (int)dst_tor.size());
  for (int i = 0; i < n_dst; ++i)
    for (int j = 0; j < n_src; ++j) M[i][j] = f.A[i][j];
  for (size_t k = 0; k < dst_tor.size(); ++k)
    M[dst_tor[k]][n_src + k] = -f.dst.orders[dst_tor[k]];

  SNFResult snf = smith_normal_form(M);
  const int rank = snf_rank(snf);
  const int total = n_src + (int)dst_tor.size();
  const int nk = total - rank;
  if (nk == 0) return {};

  IMat B = imat_zero(n_src, nk);  // x-parts of a kernel-lattice basis
  for (int i = 0; i < n_src; ++i)
    for (int j = 0; j < nk; ++j) B[i][j] = snf.V[i][rank + j];

  // Source relation columns, expressed in the lattice basis: solve B X = S.
  std::vector<int> src_tor;
  for (int i = 0; i < n_src; ++i)
    if (f.src.orders[i] != 0) src_tor.push_back(i);
  IMat S = imat_zero(n_src, (int)src_tor.size());
  for (size_t k = 0; k < src_tor.size(); ++k)
    S[src_tor[k]][k] = f.src.orders[src_tor[k]];

  const SNFResult bs = smith_normal_form(B);  // U B V = D
  const IMat US = imat_mul(bs.U, S);
  const int brank = snf_rank(bs);
  IMat Y = imat_zero(nk, (int)src_tor.size());
  for (int i = 0; i < (int)US.size(); ++i)
    for (int j = 0; j < (int)src_tor.size(); ++j) {
      if (i < brank) {
        if (US[i][j] % bs.D[i][i] != 0)
          throw InconsistentScenario("relation does not lie in the kernel lattice");
        Y[i][j] = US[i][j] / bs.D[i][i];
      } else if (US[i][j] != 0) {
        throw InconsistentScenario("relation does not lie in the kernel lattice");
      }
    }
  const IMat X = imat_mul(bs.V, Y);  // B X = S

  // kernel group = Z^nk / im(X)
  const SNFResult xs = smith_normal_form(X);
  const int xrank = snf_rank(xs);
  std::vector<long long> orders;
  for (int i = 0; i < xrank; ++i) orders.push_back((long long)xs.D[i][i]);
  orders.insert(orders.end(), nk - xrank, 0);
  return {canonical_factors(orders)};
}

AbGroup cokernel_group(const AbMap& f) {
  const int n_src = (int)f.src.orders.size();
  const int n_dst = (int)f.dst.orders.size();
  if (n_dst == 0) return {};
  std::vector<int> dst_tor;
  for (int i = 0; i < n_dst; ++i)
    if (f.dst.orders[i] != 0) dst_tor.push_back(i);
  IMat M = imat_zero(n_dst, n_src + (int)dst_tor.size());
  for (int i = 0; i < n_dst; ++i)
    for (int j = 0; j < n_src; ++j) M[i][j] = f.A[i][j];
  for (size_t k = 0; k < dst_tor.size(); ++k)
    M[dst_tor[k]][n_src + k] = f.dst.orders[dst_tor[k]];
  const SNFResult snf = smith_normal_form(M);
  const int rank = snf_rank(snf);
  std::vector<long long> orders;
  for (int i = 0; i < rank; ++i) orders.push_back((long long)snf.D[i][i]);
  orders.insert(orders.end(), n_dst - rank, 0);
  return {canonical_factors(orders)};
}

std::vector<long long> GradedGroup::at(int q) const {
  auto it = factors.find(q);
  return it == factors.end() ? std::vector<long long>{} : it->second;
}

int GradedGroup::rank(int q) const {
  const auto f = at(q);
  return (int)std::count(f.begin(), f.end(), 0LL);
}

int GradedGroup::f2_dim(int q) const {
  auto even = [&](int d) {
    const auto f = at(d);
    return (int)std::count_if(f.begin(), f.end(),
                              [](long long o) { return o > 1 && o % 2 == 0; });
  };
  return rank(q) + even(q) + even(q + 1);
}

void GradedGroup::set(int q, std::vector<long long> f) {
  f = canonical_factors(std::move(f));
  if (f.empty()) factors.erase(q);
  else factors[q] = std::move(f);
}

bool GradedGroup::operator==(const GradedGroup& o) const {
  return factors == o.factors;
}

std::string GradedGroup::to_string() const {
  std::ostringstream os;
  bool first_deg = true;
  for (const auto& [q, f] : factors) {
    if (!first_deg) os << "; ";
    first_deg = false;
    os << q << ": ";
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) os << " + ";
      if (f[i] == 0) os << "Z";
      else os << "Z/" << f[i];
    }
  }
  return os.str();
}

GradedGroup suspension_shift(const GradedGroup& g, int k) {
  GradedGroup out;
  for (const auto& [q, f] : g.factors) out.set(q + k, f);
  return out;
}

GradedGroup wedge_sum(const std::vector<GradedGroup>& parts) {
  GradedGroup out;
  for (const auto& p : parts)
    for (const auto& [q, f] : p.factors) {
      auto cur = out.at(q);
      cur.insert(cur.end(), f.begin(), f.end());
      out.set(q, cur);
    }
  return out;
}

GradedGroup assemble_decomposition(const GradedGroup& core,
                                   const std::vector<GradedGroup>& wedge_summands,
                                   int lo, int hi) {
  GradedGroup out = core;
  const GradedGroup w = wedge_sum(wedge_summands);
  for (const auto& [q, f] : w.factors) {
    if (q <= lo || q >= hi) continue;
    auto cur = out.at(q);
    cur.insert(cur.end(), f.begin(), f.end());
    out.set(q, cur);
  }
  return out;
}

std::vector<long long> resolve_extension(long long order, int f2_rank) {
  struct Cand { long long order; std::vector<long long> factors; };
  static const std::vector<Cand> table = {
      {1, {}}, {2, {2}}, {4, {4}}, {4, {2, 2}}, {8, {8}}, {8, {2, 4}}, {8, {2, 2, 2}}};
  const std::vector<long long>* found = nullptr;
  for (const auto& c : table) {
    if (c.order != order || (int)c.factors.size() != f2_rank) continue;
    if (found) throw UnresolvedExtension("extension not pinned by order and rank");
    found = &c.factors;
  }
  if (!found)
    throw UnresolvedExtension("no abelian 2-group of order " + std::to_string(order) +
                              " with F2-rank " + std::to_string(f2_rank));
  return *found;
}

}  // namespace su2comm::homalg
