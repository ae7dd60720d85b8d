#include "syz/lp.hpp"

namespace syz {

// Phase-1 tableau: minimize the sum of artificial variables s in
//   [A' | I] (x, s)^T = b',  x, s >= 0
// where A', b' are A, b with rows sign-flipped to make b' >= 0. Optimum 0
// means the original system is feasible; optimum > 0 yields a Farkas vector
// off the final reduced-cost row.
LpResult lp_feasible_nonneg(const Matrix<RatField>& a,
                            const std::vector<Rational>& b) {
  const int m = a.rows, n = a.cols;
  SYZ_CHECK((int)b.size() == m, "lp_feasible_nonneg: rhs length mismatch");

  // tableau: m rows of [A' | I | b'], plus reduced-cost row r (length n+m+1).
  // Basis starts as the artificials, whose cost is 1, so r_j = c_j - sum of
  // column j over the rows: structural j gives -sum A'_ij, artificial j gives
  // 0, rhs entry holds -(objective value).
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n + m + 1, Rational(0)));
  std::vector<int> sign(m, 1);
  for (int i = 0; i < m; ++i) {
    if (sgn(b[i]) < 0) sign[i] = -1;
    for (int j = 0; j < n; ++j)
      t[i][j] = sign[i] > 0 ? a.at(i, j) : Rational(-a.at(i, j));
    t[i][n + i] = 1;
    t[i][n + m] = sign[i] > 0 ? b[i] : Rational(-b[i]);
  }
  std::vector<Rational> r(n + m + 1, Rational(0));
  for (int j = 0; j <= n + m; ++j) {
    Rational s(0);
    for (int i = 0; i < m; ++i) s += t[i][j];
    if (j < n || j == n + m)
      r[j] = -s;
    // artificial columns start basic with reduced cost 0
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  LpResult res;
  for (;;) {
    int e = -1;
    for (int j = 0; j < n + m; ++j)
      if (sgn(r[j]) < 0) {
        e = j;
        break;
      }
    if (e < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][e]) <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][e];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    SYZ_CHECK(leave >= 0,
              "lp_feasible_nonneg: unbounded phase-1 objective (cannot happen)");
    // pivot on (leave, e)
    Rational piv = t[leave][e];
    for (int j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][e]) == 0) continue;
      Rational f = t[i][e];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(r[e]) != 0) {
      Rational f = r[e];
      for (int j = 0; j <= n + m; ++j) r[j] -= f * t[leave][j];
    }
    basis[leave] = e;
    ++res.pivot_steps;
  }

  Rational opt = -r[n + m];
  if (sgn(opt) == 0) {
    res.feasible = true;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = t[i][n + m];
    // substitution check: A x == b and x >= 0
    for (int i = 0; i < m; ++i) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += a.at(i, j) * res.x[j];
      SYZ_CHECK(s == b[i], "lp_feasible_nonneg: solution fails A x = b recheck");
    }
    for (int j = 0; j < n; ++j)
      SYZ_CHECK(sgn(res.x[j]) >= 0, "lp_feasible_nonneg: negative coordinate");
  } else {
    // Reduced cost of artificial i is 1 - y_i for the dual vector y of the
    // final basis; y^T A' <= 0 and y^T b' > 0, so -y (sign-restored) is the
    // certificate for the original orientation.
    res.feasible = false;
    res.farkas.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational yi = Rational(1) - r[n + i];
      res.farkas[i] = Rational(sign[i]) * (-yi);
    }
    for (int j = 0; j < n; ++j) {
      Rational s(0);
      for (int i = 0; i < m; ++i) s += res.farkas[i] * a.at(i, j);
      SYZ_CHECK(sgn(s) >= 0, "lp_feasible_nonneg: certificate fails y^T A >= 0");
    }
    Rational yb(0);
    for (int i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
    SYZ_CHECK(sgn(yb) < 0, "lp_feasible_nonneg: certificate fails y^T b < 0");
  }
  return res;
}

}  // namespace syz
