#include "minrep/cones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace minrep::cones {

void RationalCone::validate() const {
  if (dim <= 0) throw std::invalid_argument("RationalCone: dim must be positive");
  for (const auto& g : generators) {
    if (int(g.size()) != dim) throw std::invalid_argument("RationalCone: generator dim mismatch");
    bool nonzero = false;
    for (const auto& x : g) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::invalid_argument("RationalCone: zero generator");
  }
}

// --- phase-1 simplex -----------------------------------------------------------

Feasibility solve_feasibility(const std::vector<Vec>& a, const Vec& b) {
  const int m = int(a.size());
  const int n = m ? int(a[0].size()) : 0;
  // tableau: columns [x_0..x_{n-1} | artificials | rhs]; rows + objective row
  std::vector<Vec> tab(m + 1, Vec(n + m + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    if (int(a[i].size()) != n) throw std::invalid_argument("solve_feasibility: ragged matrix");
    const bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) tab[i][j] = flip ? -a[i][j] : a[i][j];
    tab[i][n + i] = 1;
    tab[i][n + m] = flip ? -b[i] : b[i];
  }
  // objective: minimize sum of artificials; expressed in the current basis
  // (artificials basic), the reduced objective row is -sum of constraint rows.
  for (int j = 0; j <= n + m; ++j) {
    Rational s(0);
    for (int i = 0; i < m; ++i) s += tab[i][j];
    tab[m][j] = -s;
  }
  for (int i = 0; i < m; ++i) tab[m][n + i] = 0;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering = lowest index with negative reduced cost
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (tab[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    // ratio test, Bland tie-break on basis index
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] > 0) {
        Rational ratio = tab[i][n + m] / tab[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
    }
    if (leave < 0) throw std::runtime_error("solve_feasibility: unbounded phase-1 objective");
    // pivot
    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const Rational f = tab[i][enter];
      if (f == 0) continue;
      for (int j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  Feasibility out;
  out.feasible = (tab[m][n + m] == 0);
  if (out.feasible) {
    out.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) out.x[basis[i]] = tab[i][n + m];
  }
  return out;
}

// --- cone intersection ----------------------------------------------------------

namespace {

Vec combine(const std::vector<Vec>& gens, const Vec& lambda, int dim) {
  Vec x(dim, Rational(0));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < dim; ++i) x[i] += lambda[g] * gens[g][i];
  return x;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntersectionCertificate intersect_trivially(const RationalCone& c1, const RationalCone& c2) {
  c1.validate();
  c2.validate();
  if (c1.dim != c2.dim) throw std::invalid_argument("intersect_trivially: dimension mismatch");
  const int n = c1.dim;
  const int p = int(c1.generators.size());
  const int q = int(c2.generators.size());

  IntersectionCertificate cert;

  // Nonzero common point: G lambda = H kappa with s*(G lambda)_i = 1 for some
  // coordinate i and sign s.
  for (int i = 0; i < n && !cert.witness; ++i) {
    for (int s : {1, -1}) {
      std::vector<Vec> a(n + 1, Vec(p + q, Rational(0)));
      Vec b(n + 1, Rational(0));
      for (int row = 0; row < n; ++row) {
        for (int g = 0; g < p; ++g) a[row][g] = c1.generators[g][row];
        for (int h = 0; h < q; ++h) a[row][p + h] = -c2.generators[h][row];
      }
      for (int g = 0; g < p; ++g) a[n][g] = Rational(s) * c1.generators[g][i];
      b[n] = 1;
      const auto lp = solve_feasibility(a, b);
      if (lp.feasible) {
        Vec lambda(lp.x.begin(), lp.x.begin() + p);
        Vec kappa(lp.x.begin() + p, lp.x.end());
        Vec x = combine(c1.generators, lambda, n);
        Vec y = combine(c2.generators, kappa, n);
        cert.trivial = false;
        cert.witness = x;
        cert.verified = (x == y) && !is_zero_vec(x);
        cert.note = "common point found in both cones";
        return cert;
      }
    }
  }

  cert.trivial = true;
  // Separating functional phi: phi.g >= 0, phi.h <= 0, with the normalization
  // sum phi.g - sum phi.h = 1 forcing at least one strict inequality.
  // Variables: phi = u - v (u, v >= 0), slacks s_g >= 0, t_h >= 0.
  {
    const int vars = 2 * n + p + q;
    std::vector<Vec> a;
    Vec b;
    for (int g = 0; g < p; ++g) {  // phi.g - s_g = 0
      Vec row(vars, Rational(0));
      for (int i = 0; i < n; ++i) {
        row[i] = c1.generators[g][i];
        row[n + i] = -c1.generators[g][i];
      }
      row[2 * n + g] = -1;
      a.push_back(std::move(row));
      b.push_back(Rational(0));
    }
    for (int h = 0; h < q; ++h) {  // phi.h + t_h = 0
      Vec row(vars, Rational(0));
      for (int i = 0; i < n; ++i) {
        row[i] = c2.generators[h][i];
        row[n + i] = -c2.generators[h][i];
      }
      row[2 * n + p + h] = 1;
      a.push_back(std::move(row));
      b.push_back(Rational(0));
    }
    {  // sum of slacks = 1
      Vec row(vars, Rational(0));
      for (int g = 0; g < p + q; ++g) row[2 * n + g] = 1;
      a.push_back(std::move(row));
      b.push_back(Rational(1));
    }
    const auto lp = solve_feasibility(a, b);
    if (lp.feasible) {
      Vec phi(n);
      for (int i = 0; i < n; ++i) phi[i] = lp.x[i] - lp.x[n + i];
      // verify exactly
      bool ok = true, strict = false;
      for (const auto& g : c1.generators) {
        Rational dot(0);
        for (int i = 0; i < n; ++i) dot += phi[i] * g[i];
        if (dot < 0) ok = false;
        if (dot > 0) strict = true;
      }
      for (const auto& h : c2.generators) {
        Rational dot(0);
        for (int i = 0; i < n; ++i) dot += phi[i] * h[i];
        if (dot > 0) ok = false;
        if (dot < 0) strict = true;
      }
      cert.functional = phi;
      cert.verified = ok && strict;
      cert.note = "separating functional found";
    } else {
      cert.verified = true;  // the trivial verdict itself is LP-certified
      cert.note =
          "trivial intersection; no strictly separating functional exists "
          "(transverse linear subspaces)";
    }
  }
  return cert;
}

// --- harmonic polynomial dimensions ----------------------------------------------

namespace {

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// multi-indices of total degree j in m variables, lexicographic
void enumerate_exponents(int m, int j, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == m - 1) {
    int sum = 0;
    for (int e : cur) sum += e;
    cur.push_back(j - sum);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  int sum = 0;
  for (int e : cur) sum += e;
  for (int e = 0; e <= j - sum; ++e) {
    cur.push_back(e);
    enumerate_exponents(m, j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int harmonic_dim(int m, int j) {
  if (m < 1 || j < 0) throw std::invalid_argument("harmonic_dim: need m >= 1, j >= 0");
  if (j == 0) return 1;
  if (j == 1) return m;
  return int(binom_ll(j + m - 1, m - 1) - binom_ll(j + m - 3, m - 1));
}

int harmonic_dim_brute(int m, int j) {
  if (m < 1 || j < 0) throw std::invalid_argument("harmonic_dim_brute: need m >= 1, j >= 0");
  if (j <= 1) return (j == 0) ? 1 : m;
  std::vector<std::vector<int>> deg_j, deg_jm2;
  std::vector<int> cur;
  enumerate_exponents(m, j, cur, deg_j);
  enumerate_exponents(m, j - 2, cur, deg_jm2);
  std::map<std::vector<int>, int> row_of;
  for (std::size_t r = 0; r < deg_jm2.size(); ++r) row_of[deg_jm2[r]] = int(r);

  // sparse columns of the Laplacian, then exact row elimination for the rank
  const int rows = int(deg_jm2.size());
  const int cols = int(deg_j.size());
  std::vector<std::map<int, Rational>> col(cols);
  for (int cidx = 0; cidx < cols; ++cidx) {
    const auto& alpha = deg_j[cidx];
    for (int i = 0; i < m; ++i) {
      if (alpha[i] >= 2) {
        auto beta = alpha;
        beta[i] -= 2;
        col[cidx][row_of[beta]] = Rational(alpha[i]) * Rational(alpha[i] - 1);
      }
    }
  }
  // transpose into sparse rows
  std::vector<std::map<int, Rational>> rowv(rows);
  for (int cidx = 0; cidx < cols; ++cidx)
    for (const auto& [r, val] : col[cidx]) rowv[r][cidx] = val;

  int rank = 0;
  std::vector<bool> used(rows, false);
  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = 0; r < rows; ++r) {
      if (!used[r]) {
        auto it = rowv[r].find(c);
        if (it != rowv[r].end() && it->second != 0) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot < 0) continue;
    used[pivot] = true;
    ++rank;
    const Rational pv = rowv[pivot][c];
    for (int r = 0; r < rows; ++r) {
      if (r == pivot || used[r]) continue;
      auto it = rowv[r].find(c);
      if (it == rowv[r].end() || it->second == 0) continue;
      const Rational f = it->second / pv;
      for (const auto& [cc, val] : rowv[pivot]) {
        auto jt = rowv[r].find(cc);
        if (jt == rowv[r].end()) {
          rowv[r][cc] = -f * val;
        } else {
          jt->second -= f * val;
          if (jt->second == 0) rowv[r].erase(jt);
        }
      }
    }
  }
  return cols - rank;
}

}  // namespace minrep::cones
