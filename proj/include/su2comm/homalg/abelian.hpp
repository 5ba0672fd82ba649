#pragma once

#include <map>
#include <string>
#include <vector>

#include "su2comm/homalg/snf.hpp"

namespace su2comm::homalg {

// Finitely generated abelian group given by generator orders (0 = infinite).
struct AbGroup {
  std::vector<long long> orders;

  int free_rank() const;
  bool is_trivial() const;
  bool is_free() const;
  long long torsion_order() const;       // product of finite orders (1 if free)
  int torsion_f2_rank() const;           // number of even finite orders
  // invariant-factor normal form: torsion chain ascending, then zeros
  std::vector<long long> canonical() const;
};

// Map between presented groups: column j of A = image of source generator j
// expressed in destination generators (well-definedness w.r.t. orders assumed
// from the transcription).
struct AbMap {
  AbGroup src, dst;
  IMat A;  // dst.size() x src.size()
};

AbGroup kernel_group(const AbMap& f);
AbGroup cokernel_group(const AbMap& f);

// Graded abelian group: canonical invariant factors per degree (0 = Z).
struct GradedGroup {
  std::map<int, std::vector<long long>> factors;

  std::vector<long long> at(int q) const;
  int rank(int q) const;
  int f2_dim(int q) const;  // rank + 2-torsion count + 2-torsion count in q+1
  void set(int q, std::vector<long long> f);  // canonicalizes, drops empties
  bool operator==(const GradedGroup& o) const;
  std::string to_string() const;
};

std::vector<long long> canonical_factors(std::vector<long long> orders);

GradedGroup suspension_shift(const GradedGroup& g, int k);
GradedGroup wedge_sum(const std::vector<GradedGroup>& parts);
// Degreewise direct sum of wedge summands into core strictly inside (lo, hi).
GradedGroup assemble_decomposition(const GradedGroup& core,
                                   const std::vector<GradedGroup>& wedge_summands,
                                   int lo, int hi);

// The unique abelian 2-group with the given order (power of two, <= 8) and
// number of cyclic summands.
std::vector<long long> resolve_extension(long long order, int f2_rank);

}  // namespace su2comm::homalg
