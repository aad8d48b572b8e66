#pragma once

#include <vector>

#include "septope/arith.hpp"

namespace septope {

// The (d+1) x (2d+1) configuration matrix of the symmetric edge polytope of
// the cycle of length d, column by column.  Column 0 is z = (0,...,0,1),
// columns 1..d are x_i = e_i - e_{i+1 mod d} homogenized with a trailing 1,
// columns d+1..2d are the centrally symmetric partners y_i = -(e_i - e_{i+1}).
struct cycle_config {
  int d = 0;
  int k = 0;  // ceil(d/2)
  std::vector<std::vector<int>> columns;  // 2d+1 columns of length d+1

  static cycle_config make(int d);
  int num_vars() const { return 2 * d + 1; }
};

// The Ehrhart polynomial over the binomial basis:
//   L(m) = sum_{i=0}^{d-1} coeffs[i] * C(m,i).
struct binomial_poly {
  int d = 0;
  std::vector<Int> coeffs;  // size d, coeffs[i] = r_d(i)
};

// A polynomial with exact rational coefficients over the monomial basis,
// ascending degree.
struct dense_poly {
  std::vector<Rat> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rat eval(const Rat& x) const;
  Int eval_int(long m) const;  // evaluation that must land in Z
};

// The h-vector (delta-vector) (h_0, ..., h_{d-1}) of Conv(A_d).
struct hvector {
  int d = 0;
  std::vector<Int> entries;  // size d

  bool operator==(const hvector& o) const { return d == o.d && entries == o.entries; }
};

// Number of squarefree standard monomials of degree i in the x/y variables,
// by the closed formula r_d(i) = C(d,i) * sum_{l=1}^{d-i} C(i, k-l).
// Equals C(d,i)*2^i for 0 <= i <= k-1, and 0 at i = d.
Int r_count(int d, int i);

// s_d(j) = r_d(j-1): same count for monomials divisible by z, degree j.
Int s_count(int d, int j);

binomial_poly ehrhart_binomial_basis(int d);

// Exact L_d(m) for any integer m (negative m used by the reciprocity check).
Int ehrhart_eval(int d, long m);

// Basis change C(m,i) = (1/i!) sum_j s(i,j) m^j using signed Stirling numbers
// of the first kind (triangular recurrence, computed per call).
dense_poly ehrhart_monomial_basis(int d);

// k * C(d,k); equals r_d(d-1) and the h-vector sum.
Int normalized_volume(int d);

// Four independent routes to the same h-vector.
hvector h_vector_closed(int d);      // alternating closed form, mirror for j >= k
hvector h_vector_recurrence(int d);  // Pascal-type recurrence from h^{(d-1)}
hvector h_vector_genfunc(int d);     // coefficient extraction from 2^d (1+u)^d (2+u)^{j-d}
hvector h_vector_from_ehrhart(int d);  // delta-extraction h_j = sum (-1)^i C(d,i) L(j-i)

// Exact polynomial identity L(-m) = (-1)^{d-1} L(m-1), checked coefficientwise.
bool reciprocity_check(int d);

}  // namespace septope
