#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "su2comm/homalg/abelian.hpp"

namespace su2comm::homalg {

using Rational = boost::multiprecision::cpp_rational;

// Ring structure of a graded ring with Poincare duality, given as a finite
// multiplication table on named generators.  Degree-0 unit is implicit.
struct RingTable {
  std::map<std::string, int> degree;  // generator -> degree
  // products[u][v] = integer combination of generators (missing entry = 0)
  std::map<std::string, std::map<std::string, std::map<std::string, long long>>> products;
  int fundamental_degree = 6;
  std::string fundamental_class;
};

// The ring table of the degree-<=6 cohomology with x^2 = x_sq_coeff * y.
RingTable standard_ring_table(long long x_sq_coeff = 4, long long s1s2_coeff = 1);

// Verifies graded-commutativity signs, vanishing odd squares, and that the
// duality pairing H^q x H^{n-q} -> H^n is unimodular in each degree.
// Throws DualityFailure naming the degenerate degree.
bool ring_table_check(const RingTable& table);

Rational bernoulli(int n);

// The coefficient c with x^m = c * z for the standard generator on the moduli
// ring: (-1)^g 2^(2g-2) m!/(m-g+1)! (2^(m-g+1) - 2) B_{m-g+1}.
Rational thaddeus_check(int m, int g);

struct WallInvariants {
  long long d = 0;
  long long p = 0;
  bool congruence_ok = false;  // p == 4d (mod 24)
};

// c1 = c1_coeff*x, c2 = c2_coeff*y, x^3 = cube_coeff*z (with xy = z).
WallInvariants wall_invariants(long long c1_coeff, long long c2_coeff, long long cube_coeff);

// Circle-bundle cohomology via the Gysin sequence over a base that is Z in
// even degrees 0..base_top; cup_e[k] is the coefficient of the Euler-class
// multiplication H^{2k} -> H^{2k+2}.
GradedGroup gysin_solve(const std::vector<long long>& cup_e, int base_top = 6);

// Inverse direction: read the Euler-class self-intersection off the torsion
// of the total space in degree 4.
long long gysin_infer_lambda(const GradedGroup& total);

}  // namespace su2comm::homalg
