#include "septope/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace septope {

bigfloat bigfloat::from_double(double x, mpfr_prec_t prec) {
  bigfloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

bigfloat bigfloat::from_rational(const Rat& q, mpfr_prec_t prec) {
  bigfloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string bigfloat::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", significant_digits - 1, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {

mpfr_prec_t result_prec(const bigfloat& a, const bigfloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

bigfloat operator+(const bigfloat& a, const bigfloat& b) {
  bigfloat r(result_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
bigfloat operator-(const bigfloat& a, const bigfloat& b) {
  bigfloat r(result_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
bigfloat operator*(const bigfloat& a, const bigfloat& b) {
  bigfloat r(result_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
bigfloat operator/(const bigfloat& a, const bigfloat& b) {
  bigfloat r(result_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
bigfloat operator-(const bigfloat& a) {
  bigfloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bigfloat bf_abs(const bigfloat& a) {
  bigfloat r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bigfloat bf_sqrt(const bigfloat& a) {
  bigfloat r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

int_poly to_int_poly(const dense_poly& p) {
  std::vector<Rat> coeffs = p.coeffs;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("to_int_poly: zero polynomial");
  Int lcm = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  int_poly out;
  out.scale = lcm;
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    out.coeffs.push_back(c.get_num() * (lcm / c.get_den()));
  }
  return out;
}

int_poly ehrhart_int_poly(int d) { return to_int_poly(ehrhart_monomial_basis(d)); }

mpfr_prec_t escalation_ceiling() {
  if (const char* env = std::getenv("SEPTOPE_MAX_BITS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 256) return static_cast<mpfr_prec_t>(v);
  }
  return 1048576;
}

// ---------------------------------------------------------------------------
// squarefree certificate: gcd(p, p') modulo a word-size prime.  A constant
// image modulo a prime that does not divide the leading coefficient proves
// gcd over Q is constant (the modular gcd degree can only be larger).
// ---------------------------------------------------------------------------

namespace {

using modvec = std::vector<unsigned long>;

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return (a * b) % p;  // operands < 2^31, product fits in 64 bits
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim_mod(modvec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

modvec mod_image(const std::vector<Int>& coeffs, unsigned long p) {
  modvec out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    out[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
  }
  trim_mod(out);
  return out;
}

modvec gcd_mod(modvec a, modvec b, unsigned long p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    // a mod b
    unsigned long inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      unsigned long factor = mulmod(a.back(), inv, p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        unsigned long sub = mulmod(factor, b[i], p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool squarefree_certificate(const int_poly& p) {
  int n = p.degree();
  if (n <= 1) return true;
  static const unsigned long primes[] = {2147483647ul, 2147483629ul, 2147483587ul};
  std::vector<Int> deriv(p.coeffs.size() - 1);
  for (size_t i = 1; i < p.coeffs.size(); ++i) deriv[i - 1] = Int(static_cast<long>(i)) * p.coeffs[i];
  for (unsigned long prime : primes) {
    if (mpz_fdiv_ui(p.coeffs.back().get_mpz_t(), prime) == 0) continue;
    modvec a = mod_image(p.coeffs, prime);
    modvec b = mod_image(deriv, prime);
    modvec g = gcd_mod(std::move(a), std::move(b), prime);
    if (g.size() <= 1) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich core
// ---------------------------------------------------------------------------

namespace {

// RAII array of mpfr values at one precision.
class mpfr_array {
 public:
  mpfr_array(size_t n, mpfr_prec_t prec) : n_(n), data_(new slot[n]) {
    for (size_t i = 0; i < n_; ++i) {
      mpfr_init2(data_[i].v, prec);
      mpfr_set_zero(data_[i].v, 1);
    }
  }
  ~mpfr_array() {
    for (size_t i = 0; i < n_; ++i) mpfr_clear(data_[i].v);
  }
  mpfr_array(const mpfr_array&) = delete;
  mpfr_array& operator=(const mpfr_array&) = delete;

  mpfr_ptr operator[](size_t i) { return data_[i].v; }
  size_t size() const { return n_; }

 private:
  struct slot {
    mpfr_t v;
  };
  size_t n_;
  std::unique_ptr<slot[]> data_;
};

constexpr mpfr_prec_t kErrPrec = 64;

// Scratch for one rigorous complex Horner evaluation at precision w.
struct eval_scratch {
  mpfr_prec_t w;
  mpfr_t t1, t2, t3, t4, sre, sim;       // working precision
  mpfr_t err, zabs, m1, m2, m3, u, tmp;  // error tracking, kErrPrec

  explicit eval_scratch(mpfr_prec_t prec) : w(prec) {
    for (auto* x : {&t1, &t2, &t3, &t4, &sre, &sim}) mpfr_init2(*x, w);
    for (auto* x : {&err, &zabs, &m1, &m2, &m3, &u, &tmp}) mpfr_init2(*x, kErrPrec);
    mpfr_set_ui_2exp(u, 1, 2 - static_cast<long>(w), MPFR_RNDU);  // generous unit roundoff
  }
  ~eval_scratch() {
    for (auto* x : {&t1, &t2, &t3, &t4, &sre, &sim}) mpfr_clear(*x);
    for (auto* x : {&err, &zabs, &m1, &m2, &m3, &u, &tmp}) mpfr_clear(*x);
  }
  eval_scratch(const eval_scratch&) = delete;
  eval_scratch& operator=(const eval_scratch&) = delete;
};

// |a| upper bound into out (kErrPrec): |re| + |im| rounded up.
void abs1_upper(mpfr_ptr out, mpfr_srcptr re, mpfr_srcptr im, mpfr_ptr tmp) {
  mpfr_abs(out, re, MPFR_RNDU);
  mpfr_abs(tmp, im, MPFR_RNDU);
  mpfr_add(out, out, tmp, MPFR_RNDU);
}

// Horner with a running error bound.  out_err bounds the complex modulus of
// (computed - exact); the per-step bound is
//   E' = E*|z| + 2u(|t| + |s||z|) + u|s'|
// with u = 2^{2-w} covering the correctly-rounded multiplications, the
// component sums standing in for complex moduli, and all error arithmetic
// rounded upward.
void eval_with_error(const std::vector<Int>& coeffs, mpfr_srcptr zre, mpfr_srcptr zim,
                     mpfr_ptr out_re, mpfr_ptr out_im, mpfr_ptr out_err, eval_scratch& ws) {
  abs1_upper(ws.zabs, zre, zim, ws.tmp);
  mpfr_set_zero(ws.sre, 1);
  mpfr_set_zero(ws.sim, 1);
  mpfr_set_zero(ws.err, 1);
  for (size_t idx = coeffs.size(); idx-- > 0;) {
    // m1 = |s| upper (before update)
    abs1_upper(ws.m1, ws.sre, ws.sim, ws.tmp);
    // t = s*z
    mpfr_mul(ws.t1, ws.sre, zre, MPFR_RNDN);
    mpfr_mul(ws.t2, ws.sim, zim, MPFR_RNDN);
    mpfr_mul(ws.t3, ws.sre, zim, MPFR_RNDN);
    mpfr_mul(ws.t4, ws.sim, zre, MPFR_RNDN);
    mpfr_sub(ws.t1, ws.t1, ws.t2, MPFR_RNDN);  // t_re
    mpfr_add(ws.t3, ws.t3, ws.t4, MPFR_RNDN);  // t_im
    abs1_upper(ws.m2, ws.t1, ws.t3, ws.tmp);   // |t| upper
    // s' = t + a_idx (single rounding on the real component)
    mpfr_add_z(ws.sre, ws.t1, coeffs[idx].get_mpz_t(), MPFR_RNDN);
    mpfr_set(ws.sim, ws.t3, MPFR_RNDN);
    abs1_upper(ws.m3, ws.sre, ws.sim, ws.tmp);  // |s'| upper
    // err = err*zabs + 2u*(m2 + m1*zabs) + u*m3
    mpfr_mul(ws.err, ws.err, ws.zabs, MPFR_RNDU);
    mpfr_mul(ws.m1, ws.m1, ws.zabs, MPFR_RNDU);
    mpfr_add(ws.m1, ws.m1, ws.m2, MPFR_RNDU);
    mpfr_mul(ws.m1, ws.m1, ws.u, MPFR_RNDU);
    mpfr_mul_2ui(ws.m1, ws.m1, 1, MPFR_RNDU);
    mpfr_add(ws.err, ws.err, ws.m1, MPFR_RNDU);
    mpfr_mul(ws.m3, ws.m3, ws.u, MPFR_RNDU);
    mpfr_add(ws.err, ws.err, ws.m3, MPFR_RNDU);
  }
  mpfr_set(out_re, ws.sre, MPFR_RNDN);
  mpfr_set(out_im, ws.sim, MPFR_RNDN);
  mpfr_set(out_err, ws.err, MPFR_RNDU);
}

// Initial guesses on circles sized by the upper convex hull of
// (i, log2|c_i|), the Newton-polygon rule.
void newton_polygon_guesses(const std::vector<Int>& coeffs, mpfr_array& zre, mpfr_array& zim) {
  struct pt {
    long i;
    double l;
  };
  std::vector<pt> pts;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, coeffs[i].get_mpz_t());
    pts.push_back({static_cast<long>(i), static_cast<double>(exp2) + std::log2(std::fabs(mant))});
  }
  // upper hull, ascending i
  std::vector<pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const pt& o = hull[hull.size() - 2];
      const pt& a = hull[hull.size() - 1];
      double cross = (a.i - o.i) * (p.l - o.l) - (a.l - o.l) * (p.i - o.i);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  mpfr_t radius, lr;
  mpfr_init2(radius, 64);
  mpfr_init2(lr, 64);
  size_t idx = 0;
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    long m = hull[e + 1].i - hull[e].i;
    double log2r = (hull[e].l - hull[e + 1].l) / static_cast<double>(m);
    mpfr_set_d(lr, log2r, MPFR_RNDN);
    mpfr_exp2(radius, lr, MPFR_RNDN);
    for (long j = 0; j < m; ++j) {
      double theta = 2.0 * M_PI * (static_cast<double>(j) + 0.25) / static_cast<double>(m) +
                     0.6180339887498949 * static_cast<double>(e + 1);
      mpfr_mul_d(zre[idx], radius, std::cos(theta), MPFR_RNDN);
      mpfr_mul_d(zim[idx], radius, std::sin(theta), MPFR_RNDN);
      ++idx;
    }
  }
  mpfr_clear(radius);
  mpfr_clear(lr);
}

class aberth_solver {
 public:
  aberth_solver(std::vector<Int> coeffs, const solve_options& opt)
      : c_(std::move(coeffs)), opt_(opt) {
    n_ = static_cast<int>(c_.size()) - 1;
    dc_.resize(n_);
    for (int i = 1; i <= n_; ++i) dc_[i - 1] = Int(static_cast<long>(i)) * c_[i];
    max_prec_ = opt_.max_prec > 0 ? opt_.max_prec : escalation_ceiling();
  }

  std::vector<certified_root> solve() {
    mpfr_prec_t w = opt_.initial_prec;
    zre_ = std::make_unique<mpfr_array>(n_, w);
    zim_ = std::make_unique<mpfr_array>(n_, w);
    newton_polygon_guesses(c_, *zre_, *zim_);
    for (;;) {
      iterate(w);
      auto result = certify(w);
      if (result) return std::move(*result);
      if (w > max_prec_ / 2) {
        throw escalation_error("all_roots: precision escalation ceiling reached at " +
                               std::to_string(w) + " bits");
      }
      w *= 2;
      rescale(w);
    }
  }

 private:
  void rescale(mpfr_prec_t w) {
    auto nre = std::make_unique<mpfr_array>(n_, w);
    auto nim = std::make_unique<mpfr_array>(n_, w);
    for (int i = 0; i < n_; ++i) {
      mpfr_set((*nre)[i], (*zre_)[i], MPFR_RNDN);
      mpfr_set((*nim)[i], (*zim_)[i], MPFR_RNDN);
    }
    zre_ = std::move(nre);
    zim_ = std::move(nim);
  }

  // Gauss-Seidel Aberth sweeps at precision w, fixed index order.
  void iterate(mpfr_prec_t w) {
    eval_scratch ev(w);
    mpfr_t pre, pim, dre, dim, nre, nim, ssre, ssim, d2re, d2im, den, q1, q2, cre, cim, one;
    for (auto* x : {&pre, &pim, &dre, &dim, &nre, &nim, &ssre, &ssim, &d2re, &d2im, &den, &q1,
                    &q2, &cre, &cim, &one}) {
      mpfr_init2(*x, w);
    }
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_t perr, derr, mag, zmag;
    for (auto* x : {&perr, &derr, &mag, &zmag}) mpfr_init2(*x, kErrPrec);

    long best_exp = LONG_MAX;
    int no_improve = 0;
    for (int sweep = 0; sweep < opt_.max_sweeps; ++sweep) {
      long maxrel_exp = LONG_MIN;
      bool all_done = true;
      for (int i = 0; i < n_; ++i) {
        eval_with_error(c_, (*zre_)[i], (*zim_)[i], pre, pim, perr, ev);
        // indistinguishable from zero at this precision: leave the point be
        abs1_upper(mag, pre, pim, ev.tmp);
        mpfr_mul_2ui(ev.tmp, perr, 2, MPFR_RNDU);
        if (mpfr_cmp(mag, ev.tmp) <= 0) continue;
        eval_with_error(dc_, (*zre_)[i], (*zim_)[i], dre, dim, derr, ev);
        if (mpfr_zero_p(dre) && mpfr_zero_p(dim)) continue;  // stationary point, skip
        // Newton correction N = p/p'
        cdiv(nre, nim, pre, pim, dre, dim, den, q1, q2);
        // repulsion S = sum 1/(z_i - z_j)
        mpfr_set_zero(ssre, 1);
        mpfr_set_zero(ssim, 1);
        for (int j = 0; j < n_; ++j) {
          if (j == i) continue;
          mpfr_sub(d2re, (*zre_)[i], (*zre_)[j], MPFR_RNDN);
          mpfr_sub(d2im, (*zim_)[i], (*zim_)[j], MPFR_RNDN);
          mpfr_sqr(q1, d2re, MPFR_RNDN);
          mpfr_sqr(q2, d2im, MPFR_RNDN);
          mpfr_add(den, q1, q2, MPFR_RNDN);
          if (mpfr_zero_p(den)) continue;  // coincident points; certification will catch it
          mpfr_div(q1, d2re, den, MPFR_RNDN);
          mpfr_add(ssre, ssre, q1, MPFR_RNDN);
          mpfr_div(q2, d2im, den, MPFR_RNDN);
          mpfr_sub(ssim, ssim, q2, MPFR_RNDN);
        }
        // corr = N / (1 - N*S)
        mpfr_mul(q1, nre, ssre, MPFR_RNDN);
        mpfr_mul(q2, nim, ssim, MPFR_RNDN);
        mpfr_sub(d2re, q1, q2, MPFR_RNDN);
        mpfr_mul(q1, nre, ssim, MPFR_RNDN);
        mpfr_mul(q2, nim, ssre, MPFR_RNDN);
        mpfr_add(d2im, q1, q2, MPFR_RNDN);
        mpfr_sub(d2re, one, d2re, MPFR_RNDN);
        mpfr_neg(d2im, d2im, MPFR_RNDN);
        mpfr_sqr(q1, d2re, MPFR_RNDN);
        mpfr_sqr(q2, d2im, MPFR_RNDN);
        mpfr_add(den, q1, q2, MPFR_RNDN);
        if (mpfr_zero_p(den)) {
          mpfr_set(cre, nre, MPFR_RNDN);  // Newton fallback
          mpfr_set(cim, nim, MPFR_RNDN);
        } else {
          cdiv(cre, cim, nre, nim, d2re, d2im, den, q1, q2);
        }
        mpfr_sub((*zre_)[i], (*zre_)[i], cre, MPFR_RNDN);
        mpfr_sub((*zim_)[i], (*zim_)[i], cim, MPFR_RNDN);
        // relative correction size, tracked through exponents
        abs1_upper(mag, cre, cim, ev.tmp);
        if (!mpfr_zero_p(mag)) {
          abs1_upper(zmag, (*zre_)[i], (*zim_)[i], ev.tmp);
          long zexp = mpfr_zero_p(zmag) ? 1 : std::max(1L, static_cast<long>(mpfr_get_exp(zmag)));
          long rel = static_cast<long>(mpfr_get_exp(mag)) - zexp;
          maxrel_exp = std::max(maxrel_exp, rel);
          if (rel >= -static_cast<long>(w) / 2) all_done = false;
        }
      }
      if (all_done) break;
      if (maxrel_exp < best_exp) {
        best_exp = maxrel_exp;
        no_improve = 0;
      } else if (++no_improve >= 12) {
        break;  // stagnated at this precision
      }
    }

    for (auto* x : {&pre, &pim, &dre, &dim, &nre, &nim, &ssre, &ssim, &d2re, &d2im, &den, &q1,
                    &q2, &cre, &cim, &one}) {
      mpfr_clear(*x);
    }
    for (auto* x : {&perr, &derr, &mag, &zmag}) mpfr_clear(*x);
  }

  // q = a/b for complex a, b; den/q1/q2 are scratch.  Outputs must not alias
  // the inputs.
  void cdiv(mpfr_ptr qre, mpfr_ptr qim, mpfr_srcptr are, mpfr_srcptr aim, mpfr_srcptr bre,
            mpfr_srcptr bim, mpfr_ptr den, mpfr_ptr q1, mpfr_ptr q2) {
    mpfr_sqr(q1, bre, MPFR_RNDN);
    mpfr_sqr(q2, bim, MPFR_RNDN);
    mpfr_add(den, q1, q2, MPFR_RNDN);
    mpfr_mul(q1, are, bre, MPFR_RNDN);
    mpfr_mul(q2, aim, bim, MPFR_RNDN);
    mpfr_add(q1, q1, q2, MPFR_RNDN);
    mpfr_mul(q2, aim, bre, MPFR_RNDN);
    mpfr_div(qre, q1, den, MPFR_RNDN);
    mpfr_mul(q1, are, bim, MPFR_RNDN);
    mpfr_sub(q2, q2, q1, MPFR_RNDN);
    mpfr_div(qim, q2, den, MPFR_RNDN);
  }

  // Per-root inclusion radii n|p/p'| from rigorously bounded evaluations;
  // returns the certified roots when every radius meets the digit target and
  // the disks are pairwise disjoint.
  std::optional<std::vector<certified_root>> certify(mpfr_prec_t w) {
    eval_scratch ev(w);
    mpfr_t pre, pim, dre, dim;
    for (auto* x : {&pre, &pim, &dre, &dim}) mpfr_init2(*x, w);
    mpfr_t perr, derr, hi, lo, tol, tenpow, tmp;
    for (auto* x : {&perr, &derr, &hi, &lo, &tol, &tenpow, &tmp}) mpfr_init2(*x, kErrPrec);
    mpfr_ui_pow_ui(tenpow, 10, static_cast<unsigned long>(opt_.digits), MPFR_RNDU);

    mpfr_array radii(n_, kErrPrec);
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i) {
      eval_with_error(c_, (*zre_)[i], (*zim_)[i], pre, pim, perr, ev);
      eval_with_error(dc_, (*zre_)[i], (*zim_)[i], dre, dim, derr, ev);
      mpfr_hypot(hi, pre, pim, MPFR_RNDU);
      mpfr_add(hi, hi, perr, MPFR_RNDU);  // upper |p(z)|
      mpfr_hypot(lo, dre, dim, MPFR_RNDD);
      mpfr_sub(lo, lo, derr, MPFR_RNDD);  // lower |p'(z)|
      if (mpfr_sgn(lo) <= 0) {
        ok = false;
        break;
      }
      mpfr_mul_ui(hi, hi, static_cast<unsigned long>(n_), MPFR_RNDU);
      mpfr_div(radii[i], hi, lo, MPFR_RNDU);
      // target: radius < 10^-digits * max(1, |z|)
      mpfr_hypot(tmp, (*zre_)[i], (*zim_)[i], MPFR_RNDD);
      if (mpfr_cmp_ui(tmp, 1) < 0) mpfr_set_ui(tmp, 1, MPFR_RNDN);
      mpfr_div(tol, tmp, tenpow, MPFR_RNDD);
      if (mpfr_cmp(radii[i], tol) >= 0) ok = false;
    }
    // pairwise disjoint inclusion disks
    if (ok) {
      mpfr_t da, db, sum;
      mpfr_init2(da, kErrPrec);
      mpfr_init2(db, kErrPrec);
      mpfr_init2(sum, kErrPrec);
      for (int i = 0; i < n_ && ok; ++i) {
        for (int j = i + 1; j < n_ && ok; ++j) {
          mpfr_sub(da, (*zre_)[i], (*zre_)[j], MPFR_RNDZ);
          mpfr_sub(db, (*zim_)[i], (*zim_)[j], MPFR_RNDZ);
          mpfr_abs(da, da, MPFR_RNDZ);
          mpfr_abs(db, db, MPFR_RNDZ);
          if (mpfr_cmp(db, da) > 0) mpfr_swap(da, db);  // da = max component
          mpfr_add(sum, radii[i], radii[j], MPFR_RNDU);
          if (mpfr_cmp(da, sum) <= 0) ok = false;
        }
      }
      mpfr_clear(da);
      mpfr_clear(db);
      mpfr_clear(sum);
    }

    std::optional<std::vector<certified_root>> out;
    if (ok) {
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int c = mpfr_cmp((*zre_)[a], (*zre_)[b]);
        if (c != 0) return c < 0;
        return mpfr_cmp((*zim_)[a], (*zim_)[b]) < 0;
      });
      std::vector<certified_root> roots;
      roots.reserve(n_);
      for (int idx : order) {
        certified_root r{bigfloat(w), bigfloat(w), bigfloat(kErrPrec)};
        mpfr_set(r.re.get(), (*zre_)[idx], MPFR_RNDN);
        mpfr_set(r.im.get(), (*zim_)[idx], MPFR_RNDN);
        mpfr_set(r.radius.get(), radii[idx], MPFR_RNDU);
        roots.push_back(std::move(r));
      }
      out = std::move(roots);
    }

    for (auto* x : {&pre, &pim, &dre, &dim}) mpfr_clear(*x);
    for (auto* x : {&perr, &derr, &hi, &lo, &tol, &tenpow, &tmp}) mpfr_clear(*x);
    return out;
  }

  std::vector<Int> c_, dc_;
  int n_ = 0;
  solve_options opt_;
  mpfr_prec_t max_prec_ = 0;
  std::unique_ptr<mpfr_array> zre_, zim_;
};

certified_root exact_rational_root(const Rat& value, int digits) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(digits * 4 + 32));
  certified_root r{bigfloat(prec), bigfloat(prec), bigfloat(kErrPrec)};
  mpfr_set_q(r.re.get(), value.get_mpq_t(), MPFR_RNDN);
  // rounding error <= ulp/2 <= 2^{1-prec} |value|
  mpfr_abs(r.radius.get(), r.re.get(), MPFR_RNDU);
  mpfr_mul_2si(r.radius.get(), r.radius.get(), 1 - static_cast<long>(prec), MPFR_RNDU);
  return r;
}

// --- exact squarefree decomposition over Q (Yun), used only when the
// modular certificate fails ---

using rpoly = std::vector<Rat>;  // ascending, trimmed

void rtrim(rpoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

rpoly rderiv(const rpoly& a) {
  rpoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rat(static_cast<long>(i)));
  rtrim(d);
  return d;
}

rpoly rmonic(rpoly a) {
  rtrim(a);
  if (a.empty()) return a;
  Rat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

// division with remainder; quotient discarded unless wanted
rpoly rmod(rpoly a, const rpoly& b) {
  rtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    rtrim(a);
  }
  return a;
}

rpoly rdiv_exact(rpoly a, const rpoly& b) {
  rtrim(a);
  rpoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    rtrim(a);
  }
  if (!a.empty()) throw std::logic_error("rdiv_exact: nonzero remainder");
  rtrim(q);
  return q;
}

rpoly rgcd(rpoly a, rpoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    rpoly r = rmod(std::move(a), b);
    a = std::move(b);
    b = rmonic(std::move(r));
  }
  return rmonic(std::move(a));
}

// Yun: f = prod f_i^i with f_i squarefree and pairwise coprime.
std::vector<std::pair<rpoly, int>> yun_decomposition(const rpoly& f) {
  std::vector<std::pair<rpoly, int>> out;
  rpoly g = rgcd(f, rderiv(f));
  if (g.size() <= 1) {
    out.emplace_back(rmonic(f), 1);
    return out;
  }
  rpoly w = rdiv_exact(f, g);
  rpoly y = rdiv_exact(rderiv(f), g);
  int i = 1;
  for (;;) {
    rpoly wd = rderiv(w);
    rpoly z = y;
    for (size_t t = 0; t < wd.size(); ++t) {
      if (t >= z.size()) z.resize(t + 1, Rat(0));
      z[t] -= wd[t];
    }
    rtrim(z);
    if (w.size() <= 1) break;
    rpoly gi = rgcd(w, z);
    if (gi.size() > 1) out.emplace_back(gi, i);
    w = rdiv_exact(w, gi);
    y = rdiv_exact(z, gi);
    ++i;
  }
  return out;
}

int_poly rational_to_int_poly(const rpoly& f) {
  dense_poly p;
  p.coeffs = f;
  return to_int_poly(p);
}

}  // namespace

std::vector<certified_root> all_roots(const int_poly& p, int digits) {
  solve_options opt;
  opt.digits = digits;
  return all_roots(p, opt);
}

std::vector<certified_root> all_roots(const int_poly& p, const solve_options& opt) {
  std::vector<Int> coeffs = p.coeffs;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("all_roots: zero polynomial");
  if (coeffs.size() < 2) throw std::domain_error("all_roots: degree must be >= 1");
  if (opt.digits < 1) throw std::domain_error("all_roots: digits must be >= 1");

  // roots at the origin come off exactly
  size_t zero_mult = 0;
  while (coeffs[zero_mult] == 0) ++zero_mult;
  std::vector<certified_root> result;
  for (size_t t = 0; t < zero_mult; ++t) {
    result.push_back(certified_root{bigfloat(64), bigfloat(64), bigfloat(kErrPrec)});
  }
  std::vector<Int> reduced(coeffs.begin() + zero_mult, coeffs.end());

  auto solve_factor = [&opt](std::vector<Int> fc, int digits) -> std::vector<certified_root> {
    int deg = static_cast<int>(fc.size()) - 1;
    if (deg == 0) return {};
    if (deg == 1) {
      Rat value(-fc[0], fc[1]);
      value.canonicalize();
      return {exact_rational_root(value, digits)};
    }
    solve_options o = opt;
    o.digits = digits;
    aberth_solver solver(std::move(fc), o);
    return solver.solve();
  };

  int_poly probe;
  probe.coeffs = reduced;
  int digits = opt.digits;
  for (int attempt = 0;; ++attempt) {
    std::vector<certified_root> batch = result;
    if (reduced.size() >= 2) {
      if (squarefree_certificate(probe)) {
        auto roots = solve_factor(reduced, digits);
        batch.insert(batch.end(), std::make_move_iterator(roots.begin()),
                     std::make_move_iterator(roots.end()));
      } else {
        rpoly f(reduced.begin(), reduced.end());
        for (auto& [factor, mult] : yun_decomposition(f)) {
          int_poly fi = rational_to_int_poly(factor);
          auto roots = solve_factor(fi.coeffs, digits);
          for (const auto& r : roots) {
            for (int t = 0; t < mult; ++t) batch.push_back(r);
          }
        }
      }
    }
    // distinct-center disks must not overlap (copies of a multiple root share
    // their disk by construction)
    bool disjoint = true;
    for (size_t i = 0; i < batch.size() && disjoint; ++i) {
      for (size_t j = i + 1; j < batch.size() && disjoint; ++j) {
        if (batch[i].re == batch[j].re && batch[i].im == batch[j].im) continue;
        bigfloat da = bf_abs(batch[i].re - batch[j].re);
        bigfloat db = bf_abs(batch[i].im - batch[j].im);
        const bigfloat& dist = da > db ? da : db;
        if (!(dist > batch[i].radius + batch[j].radius)) disjoint = false;
      }
    }
    if (disjoint) {
      std::stable_sort(batch.begin(), batch.end(), [](const certified_root& a, const certified_root& b) {
        int c = a.re.cmp(b.re);
        if (c != 0) return c < 0;
        return a.im.cmp(b.im) < 0;
      });
      return batch;
    }
    if (attempt >= 6) throw escalation_error("all_roots: could not separate root disks");
    digits *= 2;
  }
}

float_interval max_real_part(const std::vector<certified_root>& roots) {
  if (roots.empty()) throw std::domain_error("max_real_part: empty root list");
  float_interval out{bigfloat(roots[0].re.precision()), bigfloat(roots[0].re.precision())};
  bool first = true;
  for (const auto& r : roots) {
    bigfloat lo(r.re.precision()), hi(r.re.precision());
    mpfr_sub(lo.get(), r.re.get(), r.radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), r.re.get(), r.radius.get(), MPFR_RNDU);
    if (first || lo > out.lo) out.lo = lo;
    if (first || hi > out.hi) out.hi = hi;
    first = false;
  }
  return out;
}

float_interval min_real_part(const std::vector<certified_root>& roots) {
  if (roots.empty()) throw std::domain_error("min_real_part: empty root list");
  float_interval out{bigfloat(roots[0].re.precision()), bigfloat(roots[0].re.precision())};
  bool first = true;
  for (const auto& r : roots) {
    bigfloat lo(r.re.precision()), hi(r.re.precision());
    mpfr_sub(lo.get(), r.re.get(), r.radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), r.re.get(), r.radius.get(), MPFR_RNDU);
    if (first || lo < out.lo) out.lo = lo;
    if (first || hi < out.hi) out.hi = hi;
    first = false;
  }
  return out;
}

bigfloat max_radius(const std::vector<certified_root>& roots) {
  bigfloat out(kErrPrec);
  for (const auto& r : roots) {
    if (r.radius > out) out = r.radius;
  }
  return out;
}

bigfloat symmetry_defect(const std::vector<certified_root>& roots) {
  if (roots.empty()) throw std::domain_error("symmetry_defect: empty root list");
  mpfr_prec_t w = roots[0].re.precision();
  bigfloat defect(kErrPrec);
  bigfloat tre(w), tim(w), dre(w), dim(w), dist(kErrPrec), best(kErrPrec);
  for (const auto& a : roots) {
    // image of a under z -> -1 - z
    mpfr_add_ui(tre.get(), a.re.get(), 1, MPFR_RNDN);
    mpfr_neg(tre.get(), tre.get(), MPFR_RNDN);
    mpfr_neg(tim.get(), a.im.get(), MPFR_RNDN);
    bool first = true;
    for (const auto& b : roots) {
      mpfr_sub(dre.get(), tre.get(), b.re.get(), MPFR_RNDN);
      mpfr_sub(dim.get(), tim.get(), b.im.get(), MPFR_RNDN);
      mpfr_hypot(dist.get(), dre.get(), dim.get(), MPFR_RNDU);
      if (first || dist < best) {
        best = dist;
        first = false;
      }
    }
    if (best > defect) defect = best;
  }
  return defect;
}

vieta_result vieta_check(const int_poly& p, const std::vector<certified_root>& roots) {
  vieta_result out;
  int n = p.degree();
  if (n < 1 || static_cast<int>(roots.size()) != n) return out;
  mpfr_prec_t w = 0;
  for (const auto& r : roots) w = std::max(w, r.re.precision());
  w += 64;

  // sum of roots vs -c_{n-1}/c_n, within the summed radii (plus a rounding
  // margin well below them)
  bigfloat sre(w), sim(w), rad(kErrPrec), slack(kErrPrec);
  for (const auto& r : roots) {
    mpfr_add(sre.get(), sre.get(), r.re.get(), MPFR_RNDN);
    mpfr_add(sim.get(), sim.get(), r.im.get(), MPFR_RNDN);
    mpfr_add(rad.get(), rad.get(), r.radius.get(), MPFR_RNDU);
    bigfloat m(kErrPrec);
    mpfr_hypot(m.get(), r.re.get(), r.im.get(), MPFR_RNDU);
    mpfr_add(slack.get(), slack.get(), m.get(), MPFR_RNDU);
  }
  // n additions at precision w, each bounded by the running magnitude sum
  mpfr_mul_ui(slack.get(), slack.get(), static_cast<unsigned long>(4 * n), MPFR_RNDU);
  mpfr_mul_2si(slack.get(), slack.get(), -static_cast<long>(w), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), slack.get(), MPFR_RNDU);

  Rat target(-p.coeffs[n - 1], p.coeffs[n]);
  target.canonicalize();
  bigfloat t = bigfloat::from_rational(target, w);
  bigfloat diff_re = bf_abs(sre - t);
  bigfloat diff_im = bf_abs(sim);
  out.sum_ok = diff_re <= rad && diff_im <= rad;

  // |product| vs |c_0/c_n| with interval products
  bigfloat lo(kErrPrec + 192), hi(kErrPrec + 192);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  for (const auto& r : roots) {
    bigfloat m_lo(kErrPrec), m_hi(kErrPrec);
    mpfr_hypot(m_lo.get(), r.re.get(), r.im.get(), MPFR_RNDD);
    mpfr_hypot(m_hi.get(), r.re.get(), r.im.get(), MPFR_RNDU);
    mpfr_sub(m_lo.get(), m_lo.get(), r.radius.get(), MPFR_RNDD);
    if (mpfr_sgn(m_lo.get()) < 0) mpfr_set_zero(m_lo.get(), 1);
    mpfr_add(m_hi.get(), m_hi.get(), r.radius.get(), MPFR_RNDU);
    mpfr_mul(lo.get(), lo.get(), m_lo.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), hi.get(), m_hi.get(), MPFR_RNDU);
  }
  Rat prod_target(p.coeffs[0], p.coeffs[n]);
  prod_target.canonicalize();
  Rat abs_target = prod_target >= 0 ? prod_target : Rat(-prod_target);
  out.product_ok = mpfr_cmp_q(lo.get(), abs_target.get_mpq_t()) <= 0 &&
                   mpfr_cmp_q(hi.get(), abs_target.get_mpq_t()) >= 0;
  return out;
}

float_interval eval_abs_enclosure(const int_poly& p, const bigfloat& re, const bigfloat& im,
                                  mpfr_prec_t prec) {
  eval_scratch ev(prec);
  bigfloat vre(prec), vim(prec), err(kErrPrec);
  eval_with_error(p.coeffs, re.get(), im.get(), vre.get(), vim.get(), err.get(), ev);
  float_interval out{bigfloat(kErrPrec), bigfloat(kErrPrec)};
  mpfr_hypot(out.lo.get(), vre.get(), vim.get(), MPFR_RNDD);
  mpfr_sub(out.lo.get(), out.lo.get(), err.get(), MPFR_RNDD);
  if (mpfr_sgn(out.lo.get()) < 0) mpfr_set_zero(out.lo.get(), 1);
  mpfr_hypot(out.hi.get(), vre.get(), vim.get(), MPFR_RNDU);
  mpfr_add(out.hi.get(), out.hi.get(), err.get(), MPFR_RNDU);
  return out;
}

conjecture_flags report_conjectures(int d, std::vector<certified_root> roots, int digits) {
  if (d < 3) throw std::domain_error("report_conjectures: d must be >= 3");
  int D = d - 1;
  Rat thr_dstrip_hi(D - 1);
  Rat thr_dstrip_lo(-D);
  Rat thr_fano_hi(D - 2, 2);  // D/2 - 1
  Rat thr_fano_lo(-D, 2);
  Rat thr_dim(D);
  thr_fano_hi.canonicalize();
  thr_fano_lo.canonicalize();

  // "max Re > thr": certified true / false / undecided
  auto upper_flag = [](const float_interval& iv, const Rat& thr) -> std::optional<bool> {
    if (mpfr_cmp_q(iv.lo.get(), thr.get_mpq_t()) > 0) return true;
    if (mpfr_cmp_q(iv.hi.get(), thr.get_mpq_t()) <= 0) return false;
    return std::nullopt;
  };
  // "min Re < thr"
  auto lower_flag = [](const float_interval& iv, const Rat& thr) -> std::optional<bool> {
    if (mpfr_cmp_q(iv.hi.get(), thr.get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(iv.lo.get(), thr.get_mpq_t()) >= 0) return false;
    return std::nullopt;
  };

  for (;;) {
    conjecture_flags rep;
    rep.d = d;
    rep.dim = D;
    rep.max_re = max_real_part(roots);
    rep.min_re = min_real_part(roots);
    auto f1 = upper_flag(rep.max_re, thr_dstrip_hi);
    auto f2 = lower_flag(rep.min_re, thr_dstrip_lo);
    auto f3 = upper_flag(rep.max_re, thr_fano_hi);
    auto f4 = lower_flag(rep.min_re, thr_fano_lo);
    auto f5 = upper_flag(rep.max_re, thr_dim);
    if (f1 && f2 && f3 && f4 && f5) {
      rep.violates_dstrip_upper = *f1;
      rep.violates_dstrip_lower = *f2;
      rep.violates_fano_upper = *f3;
      rep.violates_fano_lower = *f4;
      rep.exceeds_dimension = *f5;
      rep.digits_used = digits;
      return rep;
    }
    // a threshold straddles an enclosure: escalate and recompute
    if (digits > 1 << 16) {
      throw escalation_error("report_conjectures: thresholds undecidable at extreme precision");
    }
    digits *= 2;
    roots = all_roots(ehrhart_int_poly(d), digits);
  }
}

}  // namespace septope
