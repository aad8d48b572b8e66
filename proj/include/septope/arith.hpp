#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace septope {

// All exact arithmetic is GMP-backed: arbitrary-size integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// A computation was asked to exceed its configured enumeration guard.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// The root finder hit its precision-escalation ceiling without certifying.
class escalation_error : public std::runtime_error {
 public:
  explicit escalation_error(const std::string& what) : std::runtime_error(what) {}
};

// Generalized binomial coefficient.
//   r < 0          -> 0
//   0 <= r, n >= 0 -> C(n,r), 0 when r > n
//   n < 0          -> n(n-1)...(n-r+1)/r!  (always an integer)
inline Int binom(long n, long r) {
  if (r < 0) return 0;
  Int result;
  Int nz(n);
  mpz_bin_ui(result.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(r));
  return result;
}

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Int result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

inline Int pow2(long e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  Int result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return result;
}

// k = ceil(d/2), the half-length parameter of the cycle of length d.
inline int half_up(int d) { return (d + 1) / 2; }

}  // namespace septope
