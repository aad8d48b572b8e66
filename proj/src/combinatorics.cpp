#include "septope/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace septope {

namespace {

void require_d(int d) {
  if (d < 3) throw std::domain_error("cycle length d must be >= 3");
}

// Signed Stirling numbers of the first kind s(n,j) for 0 <= j <= n <= nmax,
// by the triangular recurrence s(n,j) = s(n-1,j-1) - (n-1) s(n-1,j).
std::vector<std::vector<Int>> stirling_first_signed(int nmax) {
  std::vector<std::vector<Int>> s(nmax + 1);
  for (int n = 0; n <= nmax; ++n) s[n].assign(n + 1, Int(0));
  s[0][0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    for (int j = 1; j <= n; ++j) {
      s[n][j] = s[n - 1][j - 1];
      if (j < n) s[n][j] -= Int(n - 1) * s[n - 1][j];
    }
    // s[n][0] stays 0 for n >= 1
  }
  return s;
}

}  // namespace

cycle_config cycle_config::make(int d) {
  require_d(d);
  cycle_config cfg;
  cfg.d = d;
  cfg.k = half_up(d);
  cfg.columns.assign(2 * d + 1, std::vector<int>(d + 1, 0));
  cfg.columns[0][d] = 1;  // z
  for (int i = 1; i <= d; ++i) {
    int next = (i % d) + 1;  // t_{d+1} = t_1
    auto& x = cfg.columns[i];
    x[i - 1] = 1;
    x[next - 1] -= 1;
    x[d] = 1;
    auto& y = cfg.columns[d + i];
    y[i - 1] = -1;
    y[next - 1] += 1;
    y[d] = 1;
  }
  return cfg;
}

Int r_count(int d, int i) {
  require_d(d);
  if (i < 0 || i > d) throw std::domain_error("r_count: index out of range [0,d]");
  if (i == d) return 0;
  int k = half_up(d);
  Int sum = 0;
  for (int l = 1; l <= d - i; ++l) sum += binom(i, k - l);
  return binom(d, i) * sum;
}

Int s_count(int d, int j) {
  require_d(d);
  if (j < 1 || j > d) throw std::domain_error("s_count: index out of range [1,d]");
  return r_count(d, j - 1);
}

binomial_poly ehrhart_binomial_basis(int d) {
  require_d(d);
  binomial_poly p;
  p.d = d;
  p.coeffs.reserve(d);
  for (int i = 0; i < d; ++i) p.coeffs.push_back(r_count(d, i));
  return p;
}

Int ehrhart_eval(int d, long m) {
  require_d(d);
  Int total = 0;
  for (int i = 0; i < d; ++i) total += r_count(d, i) * binom(m, i);
  return total;
}

Rat dense_poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int dense_poly::eval_int(long m) const {
  Rat v = eval(Rat(m));
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("dense_poly::eval_int: non-integer value");
  return v.get_num();
}

dense_poly ehrhart_monomial_basis(int d) {
  require_d(d);
  auto s = stirling_first_signed(d - 1);
  dense_poly p;
  p.coeffs.assign(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    Rat scale(r_count(d, i), factorial(i));
    scale.canonicalize();
    for (int j = 0; j <= i; ++j) {
      p.coeffs[j] += scale * Rat(s[i][j]);
    }
  }
  for (auto& c : p.coeffs) c.canonicalize();
  assert(p.coeffs[d - 1] > 0);
  return p;
}

Int normalized_volume(int d) {
  require_d(d);
  int k = half_up(d);
  return Int(k) * binom(d, k);
}

namespace {

// Mirror entries k..d-1 from the computed prefix using h_j = h_{d-1-j}.
hvector mirror_from_prefix(int d, std::vector<Int> prefix) {
  hvector h;
  h.d = d;
  h.entries.assign(d, Int(0));
  int k = half_up(d);
  for (int j = 0; j < k; ++j) h.entries[j] = prefix[j];
  for (int j = k; j < d; ++j) h.entries[j] = h.entries[d - 1 - j];
  return h;
}

Int h_closed_entry(int d, int j) {
  Int sum = 0;
  Int minus2power = 1;  // (-2)^i
  for (int i = 0; i <= j; ++i) {
    sum += minus2power * binom(d, i) * binom(d - i - 1, j - i);
    minus2power *= -2;
  }
  return (j % 2 == 0) ? sum : Int(-sum);
}

}  // namespace

hvector h_vector_closed(int d) {
  require_d(d);
  int k = half_up(d);
  std::vector<Int> prefix(k);
  for (int j = 0; j < k; ++j) prefix[j] = h_closed_entry(d, j);
  return mirror_from_prefix(d, std::move(prefix));
}

hvector h_vector_recurrence(int d) {
  require_d(d);
  hvector h = h_vector_closed(3);  // base case
  for (int dd = 4; dd <= d; ++dd) {
    int k = half_up(dd);
    std::vector<Int> prefix(k);
    for (int j = 0; j < k; ++j) {
      if (dd % 2 == 1 && j == k - 1) {
        prefix[j] = pow2(dd - 1);  // the odd-d middle exception
      } else {
        prefix[j] = h.entries[j] + (j >= 1 ? h.entries[j - 1] : Int(0));
      }
    }
    h = mirror_from_prefix(dd, std::move(prefix));
  }
  return h;
}

hvector h_vector_genfunc(int d) {
  require_d(d);
  int k = half_up(d);
  std::vector<Int> prefix(k);
  for (int j = 0; j < k; ++j) {
    // Coefficient of u^j in 2^d (1+u)^d (2+u)^{j-d}, with
    // (2+u)^{j-d} = 2^{j-d} sum_n C(j-d, n) (u/2)^n as an exact
    // rational series truncated at u^j.
    std::vector<Rat> series(j + 1);
    Rat half_pow(1);
    for (int n = 0; n <= j; ++n) {
      series[n] = Rat(binom(j - d, n)) * half_pow;
      series[n].canonicalize();
      half_pow /= 2;
    }
    Rat coeff = 0;
    for (int t = 0; t <= j; ++t) coeff += Rat(binom(d, t)) * series[j - t];
    coeff *= Rat(pow2(d), pow2(d - j));  // 2^d from the front, 2^{j-d} from the series
    coeff.canonicalize();
    if (coeff.get_den() != 1) throw std::logic_error("h_vector_genfunc: non-integer coefficient");
    prefix[j] = coeff.get_num();
  }
  return mirror_from_prefix(d, std::move(prefix));
}

hvector h_vector_from_ehrhart(int d) {
  require_d(d);
  hvector h;
  h.d = d;
  h.entries.assign(d, Int(0));
  std::vector<Int> L(d);
  for (int m = 0; m < d; ++m) L[m] = ehrhart_eval(d, m);
  for (int j = 0; j < d; ++j) {
    Int sum = 0;
    for (int i = 0; i <= j; ++i) {
      Int term = binom(d, i) * L[j - i];
      sum += (i % 2 == 0) ? term : -term;
    }
    h.entries[j] = sum;
  }
  return h;
}

bool reciprocity_check(int d) {
  require_d(d);
  dense_poly p = ehrhart_monomial_basis(d);
  int n = p.degree();
  // q1(m) = L(-m): flip odd-degree coefficient signs.
  std::vector<Rat> q1(n + 1);
  for (int j = 0; j <= n; ++j) q1[j] = (j % 2 == 0) ? p.coeffs[j] : Rat(-p.coeffs[j]);
  // q2(m) = (-1)^{d-1} L(m-1): expand the shift through the binomial theorem.
  std::vector<Rat> q2(n + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    for (int t = 0; t <= j; ++t) {
      Rat term = p.coeffs[j] * Rat(binom(j, t));
      if ((j - t) % 2 == 1) term = -term;
      q2[t] += term;
    }
  }
  if ((d - 1) % 2 == 1) {
    for (auto& c : q2) c = -c;
  }
  for (int j = 0; j <= n; ++j) {
    if (q1[j] != q2[j]) return false;
  }
  return true;
}

}  // namespace septope
