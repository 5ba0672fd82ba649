#include "su2comm/homalg/f2.hpp"

#include <algorithm>
#include <stdexcept>

#include "su2comm/errors.hpp"

namespace su2comm::homalg {

namespace {
// Column-reduce a copy; returns leading-row index per reduced nonzero column.
std::vector<int> column_echelon(F2Matrix m, std::vector<std::vector<std::uint8_t>>* ops = nullptr) {
  // ops, if given, receives the column-operation matrix C (cols x cols) with
  // reduced = m * C, used for kernel extraction.
  std::vector<std::vector<std::uint8_t>> C;
  if (ops) {
    C.assign(m.cols, std::vector<std::uint8_t>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j) C[j][j] = 1;
  }
  std::vector<int> lead;
  int next = 0;  // next column to place a pivot in
  for (int r = 0; r < m.rows && next < m.cols; ++r) {
    int pc = -1;
    for (int j = next; j < m.cols; ++j)
      if (m.at(r, j)) { pc = j; break; }
    if (pc < 0) continue;
    for (int i = 0; i < m.rows; ++i) std::swap(m.a[(size_t)i * m.cols + next], m.a[(size_t)i * m.cols + pc]);
    if (ops) std::swap(C[next], C[pc]);
    for (int j = 0; j < m.cols; ++j) {
      if (j == next || !m.at(r, j)) continue;
      for (int i = 0; i < m.rows; ++i) m.at(i, j) ^= m.at(i, next);
      if (ops)
        for (int i = 0; i < m.cols; ++i) C[j][i] ^= C[next][i];
    }
    lead.push_back(r);
    ++next;
  }
  if (ops) {
    // kernel basis = combination columns beyond the pivot count
    ops->clear();
    for (int j = next; j < m.cols; ++j) ops->push_back(C[j]);
  }
  return lead;
}
}  // namespace

int F2Matrix::rank() const { return (int)column_echelon(*this).size(); }

std::vector<std::vector<std::uint8_t>> F2Matrix::kernel_basis() const {
  std::vector<std::vector<std::uint8_t>> ker;
  column_echelon(*this, &ker);
  return ker;
}

std::vector<int> F2Matrix::coker_rep_indices() const {
  const std::vector<int> lead = column_echelon(*this);
  std::vector<int> out;
  for (int i = 0; i < rows; ++i)
    if (std::find(lead.begin(), lead.end(), i) == lead.end()) out.push_back(i);
  return out;
}

F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("f2_mul shape mismatch");
  F2Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      if (a.at(i, k))
        for (int j = 0; j < b.cols; ++j) c.at(i, j) ^= b.at(k, j);
  return c;
}

int GradedF2Space::dim(int q) const {
  auto it = basis.find(q);
  return it == basis.end() ? 0 : (int)it->second.size();
}

int GradedF2Space::index_of(int q, const std::string& label) const {
  auto it = basis.find(q);
  if (it == basis.end()) return -1;
  auto jt = std::find(it->second.begin(), it->second.end(), label);
  return jt == it->second.end() ? -1 : (int)(jt - it->second.begin());
}

F2Matrix NamedMapF2::matrix(int q) const {
  F2Matrix m(dst->dim(q), src->dim(q));
  auto it = src->basis.find(q);
  if (it == src->basis.end()) return m;
  for (int j = 0; j < (int)it->second.size(); ++j) {
    auto im = images.find(it->second[j]);
    if (im == images.end()) continue;  // maps to zero
    for (const auto& lbl : im->second) {
      const int i = dst->index_of(q, lbl);
      if (i < 0)
        throw InconsistentScenario("map image label '" + lbl + "' missing in degree " +
                                   std::to_string(q));
      m.at(i, j) ^= 1;
    }
  }
  return m;
}

}  // namespace su2comm::homalg
