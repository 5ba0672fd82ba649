#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2comm/homalg/abelian.hpp"
#include "su2comm/homalg/f2.hpp"

namespace su2comm::homalg {

// Integral generator: label + order (0 = infinite cyclic).
struct ZGen {
  std::string label;
  long long order;
};

using ZSpace = std::map<int, std::vector<ZGen>>;                       // degree -> gens
using ZMapImages = std::map<std::string, std::vector<std::pair<std::string, long long>>>;

// A transcription of one Mayer-Vietoris setup.  "union_unknown" solves for
// the union from U, V, B and the restriction maps j, jp; "side_unknown"
// solves for U from the union X, the other side V, B, and the ranks of the
// restriction X -> U + V.
struct Scenario {
  std::string name;
  enum class Kind { UnionUnknown, SideUnknown } kind = Kind::UnionUnknown;
  int top_degree = 0;

  std::map<std::string, GradedF2Space> spaces;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> maps;  // "j", "jp"
  std::map<std::string, std::map<std::string, std::vector<std::string>>> bockstein;  // per space

  std::map<int, int> i_ranks;    // side-unknown, F2
  std::map<int, int> i_ranks_z;  // side-unknown, integral

  std::map<std::string, ZSpace> z_spaces;
  std::map<std::string, ZMapImages> z_maps;

  std::vector<GradedGroup> wedge_summands;
  std::optional<GradedGroup> expected;            // solved core, integral
  std::map<int, int> expected_f2;                 // solved core, F2 dims
  std::optional<GradedGroup> expected_assembled;  // after wedge assembly

  AbGroup z_group(const std::string& space, int q) const;
  AbMap z_delta(int q) const;  // (U+V)_q -> B_q for union-unknown scenarios
};

Scenario load_scenario(const std::string& path);

struct F2SolveResult {
  std::map<int, int> dims;  // includes degree 0 (= 1)
  std::map<int, std::vector<std::string>> kernel_gens;  // formal sums "c+c'"
  std::map<int, std::vector<std::string>> coker_gens;   // labels of B classes
};

F2SolveResult mv_solve_f2(const Scenario& sc);
GradedGroup mv_solve_z(const Scenario& sc);

// beta^2 = 0 and rank(beta_q) equals the number of Z/2 summands of the
// integral answer in degree q+1, for every degree.
bool bockstein_check(const GradedF2Space& sp,
                     const std::map<std::string, std::vector<std::string>>& beta,
                     const GradedGroup& integral);

}  // namespace su2comm::homalg
