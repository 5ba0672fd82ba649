#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace su2comm::homalg {

struct F2Matrix {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> a;  // row-major

  F2Matrix() = default;
  F2Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  std::uint8_t& at(int i, int j) { return a[(size_t)i * cols + j]; }
  std::uint8_t at(int i, int j) const { return a[(size_t)i * cols + j]; }

  int rank() const;
  std::vector<std::vector<std::uint8_t>> kernel_basis() const;  // column vectors
  // Indices of standard basis vectors of the target spanning a complement of
  // the column space (cokernel representatives).
  std::vector<int> coker_rep_indices() const;
};

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b);

// Graded F2 vector space with named bases.
struct GradedF2Space {
  std::map<int, std::vector<std::string>> basis;

  int dim(int q) const;
  int index_of(int q, const std::string& label) const;  // -1 when absent
};

// Degree-preserving map described by label images (sums over F2).
struct NamedMapF2 {
  const GradedF2Space* src;
  const GradedF2Space* dst;
  std::map<std::string, std::vector<std::string>> images;

  F2Matrix matrix(int q) const;  // dst.dim(q) x src.dim(q)
};

}  // namespace su2comm::homalg
