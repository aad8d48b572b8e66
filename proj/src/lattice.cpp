#include "septope/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace septope {

namespace {

void check_guards(int d, int m, const lattice_limits& lim, const char* who) {
  if (d < 3) throw std::domain_error(std::string(who) + ": d must be >= 3");
  if (m < 0) throw std::domain_error(std::string(who) + ": m must be >= 0");
  if (d > lim.d_max || m > lim.m_max) {
    throw resource_limit_error(std::string(who) + ": (d,m) exceeds enumeration guard");
  }
}

// Dense tableau simplex over exact rationals, Bland's rule throughout.
class simplex {
 public:
  // rows x (cols structural + rhs); all equality constraints, rhs >= 0 assumed
  // to be arranged by the caller via row negation.
  simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
      : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()), a_(std::move(a)), b_(std::move(b)) {
    // append artificial identity columns
    art0_ = cols_;
    for (size_t r = 0; r < rows_; ++r) {
      for (size_t q = 0; q < rows_; ++q) a_[r].push_back(r == q ? Rat(1) : Rat(0));
    }
    basis_.resize(rows_);
    for (size_t r = 0; r < rows_; ++r) basis_[r] = art0_ + r;
  }

  // Returns false when the equality system is infeasible.
  bool phase1() {
    std::vector<Rat> cost(art0_ + rows_, Rat(0));
    for (size_t j = art0_; j < art0_ + rows_; ++j) cost[j] = 1;
    run(cost, /*allow_artificial=*/true);
    Rat value = 0;
    for (size_t r = 0; r < rows_; ++r) value += cost[basis_[r]] * b_[r];
    if (value != 0) return false;
    // Degenerate artificials may remain basic at zero; pivot them out on any
    // structural column so phase 2 never touches artificial columns.
    for (size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < art0_) continue;
      size_t pc = art0_;
      for (size_t j = 0; j < art0_; ++j) {
        if (a_[r][j] != 0) {
          pc = j;
          break;
        }
      }
      if (pc < art0_) pivot(r, pc);
      // else: redundant row, keep the zero-valued artificial parked in it
    }
    return true;
  }

  // Minimizes cost over the feasible region; artificial columns excluded.
  void phase2(const std::vector<Rat>& structural_cost) {
    std::vector<Rat> cost(art0_ + rows_, Rat(0));
    for (size_t j = 0; j < art0_; ++j) cost[j] = structural_cost[j];
    run(cost, /*allow_artificial=*/false);
  }

  Rat variable_value(size_t j) const {
    for (size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == j) return b_[r];
    }
    return Rat(0);
  }

 private:
  void run(const std::vector<Rat>& cost, bool allow_artificial) {
    size_t limit = allow_artificial ? art0_ + rows_ : art0_;
    for (;;) {
      // reduced cost  z_j - c_j = cB . column_j - c_j  (minimization)
      size_t entering = limit;
      for (size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        Rat zj = 0;
        for (size_t r = 0; r < rows_; ++r) zj += cost[basis_[r]] * a_[r][j];
        if (zj - cost[j] > 0) {  // Bland: first improving index
          entering = j;
          break;
        }
      }
      if (entering == limit) return;  // optimal
      // ratio test, Bland tie-break on basis index
      size_t leaving = rows_;
      Rat best;
      for (size_t r = 0; r < rows_; ++r) {
        if (a_[r][entering] <= 0) continue;
        Rat ratio = b_[r] / a_[r][entering];
        if (leaving == rows_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving == rows_) throw std::logic_error("simplex: unbounded objective");
      pivot(leaving, entering);
    }
  }

  bool is_basic(size_t j) const {
    for (size_t r = 0; r < rows_; ++r) {
      if (basis_[r] == j) return true;
    }
    return false;
  }

  void pivot(size_t pr, size_t pc) {
    Rat inv = a_[pr][pc];
    for (auto& v : a_[pr]) v /= inv;
    b_[pr] /= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == pr || a_[r][pc] == 0) continue;
      Rat factor = a_[r][pc];
      for (size_t j = 0; j < a_[r].size(); ++j) a_[r][j] -= factor * a_[pr][j];
      b_[r] -= factor * b_[pr];
    }
    basis_[pr] = pc;
  }

  size_t rows_, cols_, art0_ = 0;
  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<size_t> basis_;
};

}  // namespace

std::vector<lattice_point> cycle_generators(int d) {
  if (d < 3) throw std::domain_error("cycle_generators: d must be >= 3");
  std::vector<lattice_point> gens;
  gens.reserve(2 * d + 1);
  gens.emplace_back(d, 0);  // origin
  for (int i = 0; i < d; ++i) {
    lattice_point x(d, 0);
    x[i] = 1;
    x[(i + 1) % d] = -1;
    gens.push_back(x);
  }
  for (int i = 0; i < d; ++i) {
    lattice_point y(d, 0);
    y[i] = -1;
    y[(i + 1) % d] = 1;
    gens.push_back(y);
  }
  return gens;
}

std::set<lattice_point> dilate_points(int d, int m, lattice_limits lim) {
  check_guards(d, m, lim, "dilate_points");
  auto gens = cycle_generators(d);
  std::set<lattice_point> points;
  points.insert(lattice_point(d, 0));
  for (int step = 0; step < m; ++step) {
    std::set<lattice_point> next;
    for (const auto& p : points) {
      for (const auto& g : gens) {
        lattice_point q(d);
        for (int i = 0; i < d; ++i) q[i] = p[i] + g[i];
        next.insert(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

point_location locate_point(const lattice_point& p, int d, int m, lattice_limits lim) {
  if (static_cast<int>(p.size()) != d) {
    throw std::invalid_argument("locate_point: point dimension mismatch");
  }
  check_guards(d, m, lim, "locate_point");
  if (std::accumulate(p.begin(), p.end(), 0) != 0) return point_location::outside;

  // max t  s.t.  sum_j lambda_j a_j = p,  sum_j lambda_j = m,  lambda_j >= t.
  // With mu_j = lambda_j - t >= 0 and sum_j a_j = 0 this becomes
  //   sum_j mu_j a_j = p,   sum_j mu_j + (2d+1) t = m,
  // t split into t+ - t-.  Optimal t is max over representations of the
  // smallest lambda, so membership iff t* >= 0 and interior iff t* > 0.
  int n = 2 * d + 1;
  auto gens = cycle_generators(d);
  size_t tp = n, tm = n + 1;
  std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(n + 2, Rat(0)));
  std::vector<Rat> b(d + 1);
  for (int r = 0; r < d; ++r) {
    for (int j = 0; j < n; ++j) a[r][j] = gens[j][r];
    b[r] = p[r];
  }
  for (int j = 0; j < n; ++j) a[d][j] = 1;
  a[d][tp] = n;
  a[d][tm] = -n;
  b[d] = m;
  for (int r = 0; r <= d; ++r) {
    if (b[r] < 0) {
      for (auto& v : a[r]) v = -v;
      b[r] = -b[r];
    }
  }

  simplex lp(std::move(a), std::move(b));
  if (!lp.phase1()) return point_location::outside;
  std::vector<Rat> cost(n + 2, Rat(0));
  cost[tp] = -1;  // minimize -(t+ - t-)
  cost[tm] = 1;
  lp.phase2(cost);
  Rat t_star = lp.variable_value(tp) - lp.variable_value(tm);
  if (t_star > 0) return point_location::interior;
  if (t_star == 0) return point_location::boundary;
  return point_location::outside;
}

bool contains(const lattice_point& p, int d, int m, lattice_limits lim) {
  return locate_point(p, d, m, lim) != point_location::outside;
}

namespace {

// Visit every sum-zero integer point of the box |coord| <= m.
template <typename F>
void scan_box(int d, int m, F&& visit) {
  lattice_point p(d, 0);
  // guard against box explosion
  double cells = 1;
  for (int i = 0; i < d; ++i) cells *= (2 * m + 1);
  if (cells > double(1 << 22)) throw resource_limit_error("bounding-box scan too large");
  std::vector<int> idx(d, -m);
  for (;;) {
    int sum = std::accumulate(idx.begin(), idx.end(), 0);
    if (sum == 0) {
      std::copy(idx.begin(), idx.end(), p.begin());
      visit(p);
    }
    int i = 0;
    while (i < d && idx[i] == m) idx[i++] = -m;
    if (i == d) break;
    ++idx[i];
  }
}

}  // namespace

Int count_points(int d, int m, bool cross_check, lattice_limits lim) {
  auto points = dilate_points(d, m, lim);
  if (cross_check) {
    scan_box(d, m, [&](const lattice_point& p) {
      bool lp_member = contains(p, d, m, lim);
      bool enum_member = points.count(p) != 0;
      if (lp_member != enum_member) {
        throw std::logic_error("count_points: LP membership disagrees with Minkowski enumeration");
      }
    });
  }
  return Int(static_cast<unsigned long>(points.size()));
}

Int count_interior_points(int d, int m, lattice_limits lim) {
  check_guards(d, m, lim, "count_interior_points");
  unsigned long count = 0;
  scan_box(d, m, [&](const lattice_point& p) {
    if (locate_point(p, d, m, lim) == point_location::interior) ++count;
  });
  return Int(count);
}

}  // namespace septope
