#pragma once

#include <set>
#include <vector>

#include "septope/arith.hpp"

namespace septope {

// A lattice point of the sum-zero hyperplane in Z^d (the first d rows of the
// configuration matrix; the homogenizing row is carried as the dilate index).
using lattice_point = std::vector<int>;

struct lattice_limits {
  int d_max = 6;
  int m_max = 6;
};

// The 2d+1 generators: origin, e_i - e_{i+1 mod d}, and their negatives.
std::vector<lattice_point> cycle_generators(int d);

// All lattice points of the m-th dilate of Conv(A_d), as the m-fold Minkowski
// sum of the generator set (the origin is a generator, so this is exact).
std::set<lattice_point> dilate_points(int d, int m, lattice_limits lim = {});

enum class point_location { outside, boundary, interior };

// Exact rational LP: maximize t subject to p = sum lambda_j a_j,
// sum lambda_j = m, lambda_j >= t.  Membership iff t* >= 0, relative
// interior iff t* > 0.  Two-phase simplex with Bland's rule; no floating
// point anywhere.
point_location locate_point(const lattice_point& p, int d, int m, lattice_limits lim = {});

// Assumption-free membership oracle (LP-based, independent of the Minkowski
// enumeration).
bool contains(const lattice_point& p, int d, int m, lattice_limits lim = {});

// |dilate_points(d,m)|.  With cross_check set, additionally scans the
// bounding box and verifies that LP membership agrees pointwise with the
// enumeration (validating the integer decomposition property).
Int count_points(int d, int m, bool cross_check = false, lattice_limits lim = {});

// Lattice points strictly inside the m-th dilate, counted with the LP
// interiority test over the bounding box.
Int count_interior_points(int d, int m, lattice_limits lim = {});

}  // namespace septope
