#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "septope/arith.hpp"
#include "septope/combinatorics.hpp"

namespace septope {

// Value-semantic arbitrary-precision float over MPFR.
class bigfloat {
 public:
  bigfloat() : bigfloat(64) {}
  explicit bigfloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  bigfloat(const bigfloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  bigfloat(bigfloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  bigfloat& operator=(const bigfloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  bigfloat& operator=(bigfloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~bigfloat() { mpfr_clear(v_); }

  static bigfloat from_double(double x, mpfr_prec_t prec = 64);
  static bigfloat from_rational(const Rat& q, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int significant_digits) const;

  int cmp(const bigfloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const bigfloat& o) const { return cmp(o) < 0; }
  bool operator<=(const bigfloat& o) const { return cmp(o) <= 0; }
  bool operator>(const bigfloat& o) const { return cmp(o) > 0; }
  bool operator>=(const bigfloat& o) const { return cmp(o) >= 0; }
  bool operator==(const bigfloat& o) const { return cmp(o) == 0; }

 private:
  mpfr_t v_;
};

bigfloat operator+(const bigfloat& a, const bigfloat& b);
bigfloat operator-(const bigfloat& a, const bigfloat& b);
bigfloat operator*(const bigfloat& a, const bigfloat& b);
bigfloat operator/(const bigfloat& a, const bigfloat& b);
bigfloat operator-(const bigfloat& a);
bigfloat bf_abs(const bigfloat& a);
bigfloat bf_sqrt(const bigfloat& a);

// Integer polynomial, ascending coefficients; scale is the denominator
// multiplier that was cleared (the root set ignores it).
struct int_poly {
  std::vector<Int> coeffs;
  Int scale = 1;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Multiplies through by the lcm of the coefficient denominators.
int_poly to_int_poly(const dense_poly& p);

// (d-1)! L_d(m) as an integer polynomial, ready for root finding.
int_poly ehrhart_int_poly(int d);

// An approximation plus a certified inclusion-disk radius: the disk
// |w - (re + i im)| <= radius contains a true root of the polynomial.
struct certified_root {
  bigfloat re;
  bigfloat im;
  bigfloat radius;
};

struct solve_options {
  int digits = 10;                 // certified significant decimal digits
  mpfr_prec_t initial_prec = 128;  // working bits at the first attempt
  mpfr_prec_t max_prec = 0;        // 0: SEPTOPE_MAX_BITS env or 1048576
  int max_sweeps = 150;            // Aberth sweeps per precision level
};

mpfr_prec_t escalation_ceiling();  // resolves the env override

// All deg(p) roots with certified radii, deterministic across runs at equal
// digits.  Aberth-Ehrlich simultaneous iteration with Newton-polygon initial
// guesses, precision doubling from current approximations until every root
// is certified to the requested digits with pairwise disjoint disks.
std::vector<certified_root> all_roots(const int_poly& p, int digits);
std::vector<certified_root> all_roots(const int_poly& p, const solve_options& opt);

// True when gcd(p, p') is certified constant via an exact modular gcd
// (a constant image modulo a prime not dividing the leading coefficient
// proves the rational gcd is constant).
bool squarefree_certificate(const int_poly& p);

struct float_interval {
  bigfloat lo;
  bigfloat hi;
};

float_interval max_real_part(const std::vector<certified_root>& roots);
float_interval min_real_part(const std::vector<certified_root>& roots);
bigfloat max_radius(const std::vector<certified_root>& roots);

// Hausdorff-style defect of the root set under z -> -1 - z; at most twice
// the largest radius when the set is symmetric about Re(z) = -1/2.
bigfloat symmetry_defect(const std::vector<certified_root>& roots);

struct vieta_result {
  bool sum_ok = false;
  bool product_ok = false;
};

// Sum of roots against -c_{n-1}/c_n and |product| against |c_0/c_n|,
// both within the accumulated certified radii.
vieta_result vieta_check(const int_poly& p, const std::vector<certified_root>& roots);

// Certified enclosure of |p(z)| at z = re + i im, for residual checks.
float_interval eval_abs_enclosure(const int_poly& p, const bigfloat& re, const bigfloat& im,
                                  mpfr_prec_t prec);

struct conjecture_flags {
  int d = 0;
  int dim = 0;  // D = d - 1
  float_interval max_re;
  float_interval min_re;
  bool violates_dstrip_upper = false;  // max Re > D - 1
  bool violates_dstrip_lower = false;  // min Re < -D
  bool violates_fano_upper = false;    // max Re > D/2 - 1
  bool violates_fano_lower = false;    // min Re < -D/2
  bool exceeds_dimension = false;      // max Re > D
  int digits_used = 0;
};

// Decides all five flags from certified enclosures; when a threshold lies
// inside an enclosure the roots are recomputed at doubled digits.
conjecture_flags report_conjectures(int d, std::vector<certified_root> roots, int digits);

}  // namespace septope
