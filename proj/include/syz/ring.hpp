#pragma once
// Standard graded algebras R = k[x_1..x_n]/I, materialized degree by degree
// on a window [0, top]: a normal monomial basis of each R_d and one matrix
// per variable for R_d -> R_{d+1}. There is no Groebner machinery here. I_d
// is the row space of all monomial multiples of the relations, reduced
// against the lex-descending monomial list with first-nonzero pivoting, so
// every pivot is the initial monomial of some element of I_d. Consequently
// in(I) restricted to the window is an honest monomial ideal and the normal
// (non-pivot) monomials are closed under division, which is what the module
// layer's column recursions rely on.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syz/matrix.hpp"
#include "syz/polynomial.hpp"
#include "syz/rng.hpp"

namespace syz {

// Per-degree basis size cap; beyond this the window was a mistake.
inline constexpr long long kMaxDegreeDim = 200000;

template <class F>
struct PresentedRing;

template <class F>
using RingPtr = std::shared_ptr<const PresentedRing<F>>;

template <class F>
struct PresentedRing {
  using Elt = typename F::Elt;

  F field;
  std::string name;
  std::vector<std::string> vars;
  int top = 0;
  std::vector<Poly<F>> relations;

  // all indexed by degree 0..top
  std::vector<std::vector<Monomial>> all_monos;  // monomials of S_d, lex desc
  std::vector<EchelonBasis<F>> ideal;            // I_d inside S_d
  std::vector<std::vector<int>> normal_cols;     // non-pivot columns, ascending
  std::vector<std::vector<Monomial>> basis;      // normal monomials of R_d
  // act[k][d] : R_d -> R_{d+1} (multiplication by x_k), for d < top
  std::vector<std::vector<Matrix<F>>> act;
  // basis[d][t] == x_{div_var[d][t]} * basis[d-1][div_prev[d][t]] for d >= 1
  std::vector<std::vector<int>> div_var, div_prev;

  struct FibreInfo {
    RingPtr<F> left, right;
    int nleft = 0;                      // vars 0..nleft-1 are the left factor's
    std::vector<int> left_count;        // per degree: leading basis columns that are left-side
  };
  std::optional<FibreInfo> fibre;

  int nvars() const { return (int)vars.size(); }
  int dim(int d) const {
    return (d < 0 || d > top) ? 0 : (int)basis[d].size();
  }

  std::vector<long long> hilbert() const {
    std::vector<long long> h(top + 1);
    for (int d = 0; d <= top; ++d) h[d] = dim(d);
    return h;
  }

  // side of a basis column: 0 constant, 1 left factor, 2 right factor.
  // Only meaningful on fibre products.
  int column_side(int d, int t) const {
    if (d == 0) return 0;
    return t < fibre->left_count[d] ? 1 : 2;
  }

  // Express a homogeneous polynomial in the degree-d basis (d = its degree).
  std::vector<Elt> poly_coords(const Poly<F>& p) const {
    auto deg = homogeneous_degree(p);
    SYZ_CHECK(deg.has_value(), "poly_coords: zero or inhomogeneous polynomial");
    return poly_coords_at(p, *deg);
  }

  std::vector<Elt> poly_coords_at(const Poly<F>& p, int d) const {
    SYZ_CHECK(d >= 0 && d <= top, "poly_coords: degree outside window");
    std::vector<Elt> v((std::size_t)all_monos[d].size(), field.zero());
    for (const auto& [c, m] : p.terms) {
      SYZ_CHECK(mono_degree(m) == d, "poly_coords: inhomogeneous polynomial");
      int idx = mono_index_in(all_monos[d], m);
      SYZ_CHECK(idx >= 0, "poly_coords: monomial not found");
      v[idx] = field.add(v[idx], c);
    }
    return normal_part(d, std::move(v));
  }

  // Reduce an S_d coordinate vector mod I_d and keep the normal coordinates.
  std::vector<Elt> normal_part(int d, std::vector<Elt> v) const {
    v = ideal[d].reduce(std::move(v));
    std::vector<Elt> out(normal_cols[d].size());
    for (std::size_t i = 0; i < normal_cols[d].size(); ++i)
      out[i] = v[normal_cols[d][i]];
    return out;
  }

  // Multiplication by a homogeneous p of degree e, as a matrix R_d -> R_{d+e}.
  Matrix<F> mult_matrix(const Poly<F>& p, int d) const {
    auto deg = homogeneous_degree(p);
    SYZ_CHECK(deg.has_value(), "mult_matrix: zero or inhomogeneous polynomial");
    int e = *deg;
    SYZ_CHECK(d >= 0 && d + e <= top, "mult_matrix: window exceeded");
    Matrix<F> m(field, dim(d + e), dim(d));
    for (int t = 0; t < dim(d); ++t) {
      std::vector<Elt> v((std::size_t)all_monos[d + e].size(), field.zero());
      for (const auto& [c, mono] : p.terms) {
        Monomial w = mono_mul(mono, basis[d][t]);
        int idx = mono_index_in(all_monos[d + e], w);
        v[idx] = field.add(v[idx], c);
      }
      std::vector<Elt> col = normal_part(d + e, std::move(v));
      for (int r = 0; r < m.rows; ++r) m.at(r, t) = col[r];
    }
    return m;
  }

  std::string describe() const {
    std::string s = name.empty() ? "k[" : name + " = k[";
    for (std::size_t i = 0; i < vars.size(); ++i)
      s += (i ? "," : "") + vars[i];
    s += "]";
    if (!relations.empty()) {
      s += "/(";
      for (std::size_t i = 0; i < relations.size(); ++i)
        s += (i ? ", " : "") + poly_str(field, relations[i], vars);
      s += ")";
    }
    return s;
  }
};

// Build k[vars]/(relations) on [0, top]. Relations must be homogeneous of
// degree >= 1 and parse against `vars`.
template <class F>
RingPtr<F> make_quotient_ring(const F& field, std::vector<std::string> vars,
                              std::vector<Poly<F>> relations, int top,
                              std::string name = "") {
  using Elt = typename F::Elt;
  SYZ_CHECK(top >= 1, "ring window must reach degree 1");
  SYZ_CHECK(!vars.empty(), "ring needs at least one variable");
  auto r = std::make_shared<PresentedRing<F>>();
  r->field = field;
  r->name = std::move(name);
  r->vars = std::move(vars);
  r->top = top;
  for (auto& f : relations) {
    normalize_poly(field, f);
    auto deg = homogeneous_degree(f);
    if (f.is_zero()) continue;  // zero relations contribute nothing
    SYZ_CHECK(deg.has_value() && *deg >= 1,
              "ring relations must be homogeneous of degree >= 1");
    r->relations.push_back(std::move(f));
  }

  const int n = r->nvars();
  r->all_monos.resize(top + 1);
  r->ideal.reserve(top + 1);
  r->normal_cols.resize(top + 1);
  r->basis.resize(top + 1);
  r->div_var.resize(top + 1);
  r->div_prev.resize(top + 1);

  for (int d = 0; d <= top; ++d) {
    SYZ_CHECK(count_monomials(n, d) <= kMaxDegreeDim,
              "ring window too large: degree " + std::to_string(d));
    r->all_monos[d] = monomials_of_degree(n, d);
    const int w = (int)r->all_monos[d].size();
    EchelonBasis<F> ech(field, w);
    // rows: every monomial multiple of every relation landing in degree d,
    // relations in input order, multipliers lex descending
    for (const auto& f : r->relations) {
      int e = *homogeneous_degree(f);
      if (e > d) continue;
      for (const Monomial& u : r->all_monos[d - e]) {
        std::vector<Elt> row((std::size_t)w, field.zero());
        for (const auto& [c, m] : f.terms) {
          int idx = mono_index_in(r->all_monos[d], mono_mul(u, m));
          row[idx] = field.add(row[idx], c);
        }
        ech.add(std::move(row));
      }
    }
    std::vector<bool> is_pivot(w, false);
    for (int p : ech.pivots) is_pivot[p] = true;
    for (int j = 0; j < w; ++j)
      if (!is_pivot[j]) {
        r->normal_cols[d].push_back(j);
        r->basis[d].push_back(r->all_monos[d][j]);
      }
    r->ideal.push_back(std::move(ech));
  }

  // division structure; existence is the normal-closure property
  for (int d = 1; d <= top; ++d) {
    for (const Monomial& u : r->basis[d]) {
      int k = 0;
      while (u[k] == 0) ++k;
      Monomial prev = u;
      prev[k] -= 1;
      int t = mono_index_in(r->basis[d - 1], prev);
      SYZ_CHECK(t >= 0, "normal monomials are not closed under division");
      r->div_var[d].push_back(k);
      r->div_prev[d].push_back(t);
    }
  }

  // variable multiplication matrices
  r->act.assign(n, {});
  for (int k = 0; k < n; ++k) {
    r->act[k].reserve(top);
    for (int d = 0; d < top; ++d) {
      Matrix<F> m(field, r->dim(d + 1), r->dim(d));
      for (int t = 0; t < r->dim(d); ++t) {
        Monomial w = r->basis[d][t];
        w[k] += 1;
        std::vector<Elt> v((std::size_t)r->all_monos[d + 1].size(), field.zero());
        v[mono_index_in(r->all_monos[d + 1], w)] = field.one();
        std::vector<Elt> col = r->normal_part(d + 1, std::move(v));
        for (int row = 0; row < m.rows; ++row) m.at(row, t) = col[row];
      }
      r->act[k].push_back(std::move(m));
    }
  }
  return r;
}

template <class F>
RingPtr<F> make_polynomial_ring(const F& field, std::vector<std::string> vars,
                                int top, std::string name = "") {
  return make_quotient_ring<F>(field, std::move(vars), {}, top, std::move(name));
}

// Fibre product R1 x_k R2 = k[vars1, vars2] / (I1 + I2 + (x*y : x in m1, y in m2)).
// Built through the same degreewise machinery and then cross-checked against
// the factors: for d >= 1 the normal basis of R_d must be the left factor's
// basis followed by the right factor's, and the left-variable action on the
// left block must agree with R1's own action (and kill the right block).
template <class F>
RingPtr<F> fibre_product(const RingPtr<F>& left, const RingPtr<F>& right,
                         std::string name = "") {
  using Elt = typename F::Elt;
  SYZ_CHECK(left->field == right->field, "fibre product: field mismatch");
  SYZ_CHECK(left->top == right->top, "fibre product: window mismatch");
  const F& field = left->field;
  const int nl = left->nvars(), nr = right->nvars();

  std::vector<std::string> vars = left->vars;
  for (const auto& v : right->vars) {
    for (const auto& w : left->vars)
      SYZ_CHECK(v != w, "fibre product: variable name '" + v + "' on both sides");
    vars.push_back(v);
  }

  auto widen = [&](const Poly<F>& p, bool is_left) {
    Poly<F> q;
    for (const auto& [c, m] : p.terms) {
      Monomial w(nl + nr, 0);
      for (int i = 0; i < (int)m.size(); ++i)
        w[is_left ? i : nl + i] = m[i];
      q.terms.push_back({c, w});
    }
    return q;
  };

  std::vector<Poly<F>> rels;
  for (const auto& f : left->relations) rels.push_back(widen(f, true));
  for (const auto& f : right->relations) rels.push_back(widen(f, false));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      Poly<F> q;
      Monomial m(nl + nr, 0);
      m[i] = 1;
      m[nl + j] = 1;
      q.terms.push_back({field.one(), m});
      rels.push_back(std::move(q));
    }

  RingPtr<F> rc = make_quotient_ring<F>(field, std::move(vars), std::move(rels),
                                        left->top, std::move(name));
  auto* r = const_cast<PresentedRing<F>*>(rc.get());

  typename PresentedRing<F>::FibreInfo fi;
  fi.left = left;
  fi.right = right;
  fi.nleft = nl;
  fi.left_count.assign(r->top + 1, 0);

  for (int d = 1; d <= r->top; ++d) {
    int lc = 0;
    for (const Monomial& u : r->basis[d]) {
      bool has_left = false, has_right = false;
      for (int i = 0; i < nl; ++i) has_left |= u[i] > 0;
      for (int j = 0; j < nr; ++j) has_right |= u[nl + j] > 0;
      SYZ_CHECK(!(has_left && has_right), "fibre product: mixed normal monomial");
      if (has_left) {
        SYZ_CHECK(lc == (int)(&u - r->basis[d].data()),
                  "fibre product: left block not contiguous");
        ++lc;
      }
    }
    fi.left_count[d] = lc;
    SYZ_CHECK(lc == left->dim(d) && r->dim(d) - lc == right->dim(d),
              "fibre product: graded dimensions do not add up");
    // left block carries R1's basis in R1's order
    for (int t = 0; t < lc; ++t)
      for (int i = 0; i < nl; ++i)
        SYZ_CHECK(r->basis[d][t][i] == left->basis[d][t][i],
                  "fibre product: left basis order mismatch");
  }

  // action cross-check: left variables act as R1 on the left block, 0 on the
  // right block (degree >= 1), and symmetrically
  for (int d = 1; d < r->top; ++d) {
    for (int k = 0; k < nl; ++k)
      for (int t = 0; t < r->dim(d); ++t)
        for (int row = 0; row < r->dim(d + 1); ++row) {
          Elt want = field.zero();
          if (t < fi.left_count[d] && row < fi.left_count[d + 1])
            want = left->act[k][d].at(row, t);
          SYZ_CHECK(r->act[k][d].at(row, t) == want,
                    "fibre product: left action mismatch");
        }
    for (int k = 0; k < nr; ++k)
      for (int t = 0; t < r->dim(d); ++t)
        for (int row = 0; row < r->dim(d + 1); ++row) {
          Elt want = field.zero();
          if (t >= fi.left_count[d] && row >= fi.left_count[d + 1])
            want = right->act[k][d].at(row - fi.left_count[d + 1],
                                       t - fi.left_count[d]);
          SYZ_CHECK(r->act[nl + k][d].at(row, t) == want,
                    "fibre product: right action mismatch");
        }
  }

  r->fibre = std::move(fi);
  return rc;
}

// Search for a linear form that multiplies injectively R_d -> R_{d+1} for
// every d < top. That is regularity certified on the window only; callers
// must treat it as such.
template <class F>
struct LinearRegularResult {
  bool found = false;
  Poly<F> form;
  int trials_used = 0;
};

template <class F>
LinearRegularResult<F> find_linear_regular(const RingPtr<F>& r,
                                           std::uint64_t seed, int max_trials) {
  using Elt = typename F::Elt;
  const F& field = r->field;
  Rng rng(seed);
  LinearRegularResult<F> res;
  for (int trial = 0; trial < max_trials; ++trial) {
    Poly<F> l;
    bool any = false;
    for (int k = 0; k < r->nvars(); ++k) {
      Elt c;
      if constexpr (std::is_same_v<F, GfpField>)
        c = (Elt)rng.below(field.p);
      else
        c = field.from_long(rng.range(-4, 4));
      if (field.is_zero(c)) continue;
      any = true;
      Monomial m(r->nvars(), 0);
      m[k] = 1;
      l.terms.push_back({c, m});
    }
    if (!any) continue;
    normalize_poly(field, l);
    bool ok = true;
    for (int d = 0; d < r->top && ok; ++d) {
      Matrix<F> m = r->mult_matrix(l, d);
      if (rank(m) != r->dim(d)) ok = false;
    }
    if (ok) {
      res.found = true;
      res.form = std::move(l);
      res.trials_used = trial + 1;
      return res;
    }
  }
  res.trials_used = max_trials;
  return res;
}

// Socle dimensions per degree. Requires the window to certify Artinian-ness
// (dim R_top == 0; graded algebras cannot come back from zero).
template <class F>
std::vector<long long> socle_profile(const RingPtr<F>& r) {
  SYZ_CHECK(r->dim(r->top) == 0,
            "socle_profile: ring not Artinian within the window");
  const F& field = r->field;
  std::vector<long long> s(r->top + 1, 0);
  for (int d = 0; d < r->top; ++d) {
    if (r->dim(d) == 0) continue;
    int rows = 0;
    for (int k = 0; k < r->nvars(); ++k) rows += r->dim(d + 1);
    Matrix<F> stacked(field, rows, r->dim(d));
    int off = 0;
    for (int k = 0; k < r->nvars(); ++k) {
      for (int i = 0; i < r->dim(d + 1); ++i)
        for (int j = 0; j < r->dim(d); ++j)
          stacked.at(off + i, j) = r->act[k][d].at(i, j);
      off += r->dim(d + 1);
    }
    s[d] = kernel_basis(stacked).dim();
  }
  return s;
}

}  // namespace syz
