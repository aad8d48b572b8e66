#include "septope/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace septope {

namespace {

int var_count_of(const exponent_vec& m) { return static_cast<int>(m.size()); }

bool divides(const exponent_vec& a, const exponent_vec& b) {
  for (size_t t = 0; t < a.size(); ++t) {
    if (a[t] > b[t]) return false;
  }
  return true;
}

bool disjoint_supports(const exponent_vec& a, const exponent_vec& b) {
  for (size_t t = 0; t < a.size(); ++t) {
    if (a[t] > 0 && b[t] > 0) return false;
  }
  return true;
}

// Lexicographic enumeration of k-subsets of {0,...,n-1}.
bool next_subset(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

int total_degree(const exponent_vec& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

int compare_monomials(const exponent_vec& a, const exponent_vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare_monomials: variable count mismatch");
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic tie-break: scan from the least variable upward
  // (z, y_d, x_d, y_{d-1}, x_{d-1}, ..., y_1, x_1); at the first difference
  // the monomial with the smaller exponent is the larger one.
  int d = (var_count_of(a) - 1) / 2;
  if (a[0] != b[0]) return a[0] < b[0] ? 1 : -1;
  for (int i = d; i >= 1; --i) {
    if (a[d + i] != b[d + i]) return a[d + i] < b[d + i] ? 1 : -1;  // y_i
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;                  // x_i
  }
  return 0;
}

Int claimed_basis_size(int d) {
  if (d < 3) throw std::domain_error("claimed_basis_size: d must be >= 3");
  int k = half_up(d);
  if (d % 2 == 1) return Int(d) + 2 * binom(d, k);
  return Int(d) + 2 * binom(d - 1, k);
}

std::vector<toric_binomial> claimed_basis(int d) {
  if (d < 3) throw std::domain_error("claimed_basis: d must be >= 3");
  Int size = claimed_basis_size(d);
  if (size > (1L << 22)) {
    throw resource_limit_error("claimed_basis: too many binomials to materialize");
  }
  int k = half_up(d);
  int nvars = 2 * d + 1;
  std::vector<toric_binomial> basis;
  basis.reserve(size.get_ui());

  auto xi = [&](int i) { return i; };          // 1-based cycle index
  auto yi = [&](int i) { return d + i; };

  for (int i = 1; i <= d; ++i) {
    toric_binomial b{exponent_vec(nvars, 0), exponent_vec(nvars, 0)};
    b.plus[xi(i)] = 1;
    b.plus[yi(i)] = 1;
    b.minus[0] = 2;
    basis.push_back(std::move(b));
  }

  // Ground set [d] for odd d, [d-1] for even d; the complement of each
  // k-subset supplies the k-1 partner indices.
  int n = (d % 2 == 1) ? d : d - 1;
  std::vector<int> sub(k);
  std::iota(sub.begin(), sub.end(), 0);
  std::vector<char> in_sub(n);
  auto emit_pair = [&]() {
    std::fill(in_sub.begin(), in_sub.end(), 0);
    for (int s : sub) in_sub[s] = 1;
    toric_binomial bx{exponent_vec(nvars, 0), exponent_vec(nvars, 0)};
    toric_binomial by{exponent_vec(nvars, 0), exponent_vec(nvars, 0)};
    for (int t = 0; t < n; ++t) {
      if (in_sub[t]) {
        bx.plus[xi(t + 1)] = 1;
        by.plus[yi(t + 1)] = 1;
      } else {
        bx.minus[yi(t + 1)] = 1;
        by.minus[xi(t + 1)] = 1;
      }
    }
    if (d % 2 == 1) {
      bx.minus[0] = 1;  // z
      by.minus[0] = 1;
    } else {
      bx.minus[yi(d)] = 1;
      by.minus[xi(d)] = 1;
    }
    basis.push_back(std::move(bx));
    basis.push_back(std::move(by));
  };
  emit_pair();
  while (next_subset(sub, n)) emit_pair();

  return basis;
}

bool kernel_membership(const toric_binomial& b, const cycle_config& cfg) {
  int nvars = cfg.num_vars();
  if (var_count_of(b.plus) != nvars || var_count_of(b.minus) != nvars) {
    throw std::invalid_argument("kernel_membership: exponent vector length mismatch");
  }
  for (int r = 0; r <= cfg.d; ++r) {
    long acc = 0;
    for (int j = 0; j < nvars; ++j) {
      acc += static_cast<long>(cfg.columns[j][r]) * (b.plus[j] - b.minus[j]);
    }
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Rewrite w modulo {initial -> tail} until no initial divides it.
// Each step strictly decreases w in the term order.
exponent_vec reduce_monomial(exponent_vec w, const std::vector<toric_binomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : basis) {
      if (!divides(g.plus, w)) continue;
      exponent_vec next = w;
      for (size_t t = 0; t < w.size(); ++t) next[t] += g.minus[t] - g.plus[t];
      if (compare_monomials(next, w) >= 0) {
        throw std::logic_error("reduce_monomial: rewrite did not decrease the monomial");
      }
      w = std::move(next);
      changed = true;
      break;
    }
  }
  return w;
}

}  // namespace

std::optional<toric_binomial> normal_form(const toric_binomial& b,
                                          const std::vector<toric_binomial>& basis) {
  exponent_vec u = reduce_monomial(b.plus, basis);
  exponent_vec v = reduce_monomial(b.minus, basis);
  if (u == v) return std::nullopt;
  if (compare_monomials(u, v) < 0) std::swap(u, v);
  return toric_binomial{std::move(u), std::move(v)};
}

verify_report buchberger_verify(int d, int m_max) {
  verify_report rep;
  rep.d = d;
  auto basis = claimed_basis(d);
  rep.basis_size = static_cast<int>(basis.size());
  auto cfg = cycle_config::make(d);

  // (a) membership in ker(pi), plus the structural claims the rest relies on:
  // homogeneous, disjoint supports, first monomial initial.
  rep.membership_ok = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    const auto& g = basis[i];
    bool ok = kernel_membership(g, cfg) &&
              total_degree(g.plus) == total_degree(g.minus) &&
              disjoint_supports(g.plus, g.minus) &&
              compare_monomials(g.plus, g.minus) > 0;
    if (!ok) {
      rep.membership_ok = false;
      rep.failures.push_back("membership: binomial #" + std::to_string(i));
    }
  }

  // (b) every S-pair reduces to zero; coprime initials skipped.
  rep.spairs_ok = true;
  int nvars = cfg.num_vars();
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      if (disjoint_supports(f.plus, g.plus)) {
        ++rep.spairs_skipped;
        continue;
      }
      ++rep.spairs_checked;
      toric_binomial spair{exponent_vec(nvars, 0), exponent_vec(nvars, 0)};
      for (int t = 0; t < nvars; ++t) {
        int lcm = std::max(f.plus[t], g.plus[t]);
        spair.plus[t] = lcm - f.plus[t] + f.minus[t];
        spair.minus[t] = lcm - g.plus[t] + g.minus[t];
      }
      if (normal_form(spair, basis).has_value()) {
        rep.spairs_ok = false;
        rep.failures.push_back("spair: (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  // (c) reducedness: no monomial of any element divisible by another initial.
  rep.reduced_ok = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (divides(basis[j].plus, basis[i].plus) || divides(basis[j].plus, basis[i].minus)) {
        rep.reduced_ok = false;
        rep.failures.push_back("reduced: (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  // (d) squarefree initial monomials.
  rep.squarefree_ok = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (int e : basis[i].plus) {
      if (e > 1) {
        rep.squarefree_ok = false;
        rep.failures.push_back("squarefree: binomial #" + std::to_string(i));
        break;
      }
    }
  }

  // (e) Hilbert-count equality against the Ehrhart polynomial; this is what
  // promotes "Groebner basis of the subideal" to "Groebner basis of I_{A_d}".
  rep.hilbert_ok = true;
  for (int m = 0; m <= m_max; ++m) {
    if (standard_monomial_count(d, m) != ehrhart_eval(d, m)) {
      rep.hilbert_ok = false;
      rep.failures.push_back("hilbert: degree " + std::to_string(m));
    }
  }

  return rep;
}

namespace {

std::vector<unsigned> initial_support_masks(int d) {
  auto basis = claimed_basis(d);
  std::vector<unsigned> masks;
  masks.reserve(basis.size());
  for (const auto& g : basis) {
    unsigned m = 0;
    for (size_t t = 0; t < g.plus.size(); ++t) {
      if (g.plus[t] > 0) m |= 1u << t;
    }
    masks.push_back(m);
  }
  return masks;
}

bool admissible(unsigned support, const std::vector<unsigned>& forbidden) {
  for (unsigned f : forbidden) {
    if ((support & f) == f) return false;
  }
  return true;
}

}  // namespace

Int standard_monomial_count(int d, long m, count_limits lim) {
  if (d < 3) throw std::domain_error("standard_monomial_count: d must be >= 3");
  if (m < 0) throw std::domain_error("standard_monomial_count: m must be >= 0");
  if (d > lim.d_max || m > lim.m_max) {
    throw resource_limit_error("standard_monomial_count: (d,m) exceeds enumeration guard");
  }
  if (m == 0) return 1;
  int nvars = 2 * d + 1;
  auto forbidden = initial_support_masks(d);
  // Monomials with support S and degree m are compositions of m into |S|
  // positive parts: C(m-1, |S|-1).  Group admissible supports by size.
  std::vector<long> by_size(nvars + 1, 0);
  for (unsigned s = 1; s < (1u << nvars); ++s) {
    if (admissible(s, forbidden)) ++by_size[std::popcount(s)];
  }
  Int total = 0;
  for (int c = 1; c <= nvars; ++c) {
    if (by_size[c] != 0) total += Int(by_size[c]) * binom(m - 1, c - 1);
  }
  return total;
}

Int squarefree_standard_count(int d, int i, count_limits lim) {
  if (d < 3) throw std::domain_error("squarefree_standard_count: d must be >= 3");
  if (i < 0 || i > 2 * d) throw std::domain_error("squarefree_standard_count: bad degree");
  if (d > lim.d_max) {
    throw resource_limit_error("squarefree_standard_count: d exceeds enumeration guard");
  }
  int nvars = 2 * d + 1;
  auto forbidden = initial_support_masks(d);
  long count = 0;
  for (unsigned s = 0; s < (1u << nvars); ++s) {
    if (s & 1u) continue;  // x/y variables only, no z
    if (std::popcount(s) != i) continue;
    if (admissible(s, forbidden)) ++count;
  }
  return Int(count);
}

}  // namespace septope
