#pragma once

#include <optional>
#include <string>
#include <vector>

#include "septope/arith.hpp"
#include "septope/combinatorics.hpp"

namespace septope {

// Monomials in K[z, x_1..x_d, y_1..y_d] as exponent vectors of length 2d+1.
// Index 0 is z, 1..d are x_1..x_d, d+1..2d are y_1..y_d.
using exponent_vec = std::vector<int>;

// u - v with u = plus, v = minus; disjoint supports, equal total degree.
// plus is the initial monomial under the degree reverse lexicographic order
// with z < y_d < x_d < ... < y_1 < x_1.
struct toric_binomial {
  exponent_vec plus;
  exponent_vec minus;
};

int total_degree(const exponent_vec& m);

// Degree reverse lexicographic comparison under the variable ranking above:
// higher total degree wins; ties are broken by scanning from the least
// variable upward, where the smaller exponent wins.
// Returns -1 (a < b), 0 (equal), +1 (a > b).
int compare_monomials(const exponent_vec& a, const exponent_vec& b);

// Number of elements of the claimed basis: d + 2 C(d,k) for odd d,
// d + 2 C(d-1,k) for even d.
Int claimed_basis_size(int d);

// The reduced Groebner basis claimed for I_{A_d}: the d binomials
// x_i y_i - z^2 plus, over k-subsets of [d] (odd d) or of [d-1] (even d),
// one x-product and one y-product binomial each.  Subsets are enumerated in
// lexicographic order.  Guarded against materializing astronomically many
// binomials.
std::vector<toric_binomial> claimed_basis(int d);

// True iff the configuration matrix annihilates plus - minus, i.e. the
// binomial lies in ker(pi) = I_{A_d}.
bool kernel_membership(const toric_binomial& b, const cycle_config& cfg);

// Reduces both monomials of b modulo the basis rewriting rules
// initial -> tail until neither term is divisible by any basis initial.
// Returns nullopt when the binomial reduces to zero.
std::optional<toric_binomial> normal_form(const toric_binomial& b,
                                          const std::vector<toric_binomial>& basis);

struct verify_report {
  int d = 0;
  int basis_size = 0;
  bool membership_ok = false;   // (a) every binomial is in ker(pi)
  bool spairs_ok = false;       // (b) every S-pair reduces to zero
  bool reduced_ok = false;      // (c) no term divisible by another initial
  bool squarefree_ok = false;   // (d) all initial monomials squarefree
  bool hilbert_ok = false;      // (e) standard-monomial counts match L(m)
  int spairs_checked = 0;
  int spairs_skipped = 0;  // coprime-initial pairs (Buchberger's first criterion)
  std::vector<std::string> failures;

  bool all_ok() const {
    return membership_ok && spairs_ok && reduced_ok && squarefree_ok && hilbert_ok;
  }
};

// Full desk-scale verification that the claimed basis is a reduced Groebner
// basis of I_{A_d}: checks (a)-(d) plus the Hilbert-count equality (e) for
// 0 <= m <= m_max, which closes the gap between the generated subideal and
// the full toric ideal.
verify_report buchberger_verify(int d, int m_max = 5);

struct count_limits {
  int d_max = 7;
  long m_max = 6;
};

// Number of degree-m monomials in the 2d+1 variables not divisible by any
// initial monomial of the claimed basis.  Divisibility by a squarefree
// monomial is support containment, so admissible supports are enumerated and
// compositions counted.
Int standard_monomial_count(int d, long m, count_limits lim = {});

// Number of squarefree standard monomials of degree i in the x/y variables
// only (no z), counted by direct support enumeration; equals r_count(d, i).
Int squarefree_standard_count(int d, int i, count_limits lim = {});

}  // namespace septope
