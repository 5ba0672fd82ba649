#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace su2comm::homalg {

using BigInt = boost::multiprecision::cpp_int;
using IMat = std::vector<std::vector<BigInt>>;  // row-major

IMat imat_identity(int n);
IMat imat_zero(int rows, int cols);
IMat imat_mul(const IMat& a, const IMat& b);
BigInt imat_det(IMat a);  // fraction-free Gaussian elimination

struct SNFResult {
  IMat U, D, V;  // U * A * V = D, U and V unimodular, D diagonal with d1 | d2 | ...
};

SNFResult smith_normal_form(const IMat& A);

int snf_rank(const SNFResult& r);

}  // namespace su2comm::homalg
