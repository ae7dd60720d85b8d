#pragma once
// Free windows (finite direct sums of twists of the ring, seen through the
// degree window), submodules of them, and quotient presentations. A free
// window never materializes its big blockwise action matrices; it applies
// them block by block using the ring's small per-variable matrices.

#include <vector>

#include "syz/module.hpp"

namespace syz {

template <class F>
struct FreeWindow {
  using Elt = typename F::Elt;

  RingPtr<F> ring;
  std::vector<int> gen_deg;  // each in [0, ring->top]; order fixed at creation

  FreeWindow() = default;
  FreeWindow(RingPtr<F> r, std::vector<int> degs)
      : ring(std::move(r)), gen_deg(std::move(degs)) {
    for (int c : gen_deg)
      SYZ_CHECK(c >= 0 && c <= ring->top, "FreeWindow: generator degree outside window");
  }

  int gens() const { return (int)gen_deg.size(); }
  int low() const {
    int l = ring->top + 1;
    for (int c : gen_deg) l = std::min(l, c);
    return gen_deg.empty() ? 0 : l;
  }
  int high() const { return ring->top; }

  int block_dim(int g, int d) const { return ring->dim(d - gen_deg[g]); }

  int dim(int d) const {
    SYZ_CHECK(d <= ring->top, "FreeWindow::dim: degree beyond window");
    int s = 0;
    for (int g = 0; g < gens(); ++g) s += block_dim(g, d);
    return s;
  }

  int offset(int g, int d) const {
    int s = 0;
    for (int h = 0; h < g; ++h) s += block_dim(h, d);
    return s;
  }

  std::pair<int, int> locate(int d, int col) const {  // -> (gen, monomial index)
    for (int g = 0; g < gens(); ++g) {
      int b = block_dim(g, d);
      if (col < b) return {g, col};
      col -= b;
    }
    fail("FreeWindow::locate: column out of range");
  }

  std::vector<Elt> apply(int k, int d, std::span<const Elt> v) const {
    const F& f = ring->field;
    std::vector<Elt> w((std::size_t)dim(d + 1), f.zero());
    int src = 0, dst = 0;
    for (int g = 0; g < gens(); ++g) {
      int e = d - gen_deg[g];
      int bs = block_dim(g, d), bt = block_dim(g, d + 1);
      if (bs > 0 && bt > 0) {
        const Matrix<F>& a = ring->act[k][e];
        for (int j = 0; j < bs; ++j) {
          const Elt& x = v[src + j];
          if (f.is_zero(x)) continue;
          for (int i = 0; i < bt; ++i)
            w[dst + i] = f.add(w[dst + i], f.mul(a.at(i, j), x));
        }
      }
      src += bs;
      dst += bt;
    }
    return w;
  }

  GradedModule<F> as_module() const {
    GradedModule<F> m;
    m.ring = ring;
    m.lo = low();
    m.hi = high();
    for (int d = m.lo; d <= m.hi; ++d) m.dims.push_back(dim(d));
    m.act.assign(ring->nvars(), {});
    for (int k = 0; k < ring->nvars(); ++k)
      for (int d = m.lo; d < m.hi; ++d) {
        Matrix<F> a(ring->field, dim(d + 1), dim(d));
        for (int j = 0; j < a.cols; ++j) {
          std::vector<Elt> e((std::size_t)a.cols, ring->field.zero());
          e[j] = ring->field.one();
          std::vector<Elt> w = apply(k, d, e);
          for (int i = 0; i < a.rows; ++i) a.at(i, j) = w[i];
        }
        m.act[k].push_back(std::move(a));
      }
    return m;
  }

  // Assemble a column vector of homogeneous polynomials (one per generator,
  // entry degree d - gen_deg[g]) into coordinates at degree d.
  std::vector<Elt> column_coords(const std::vector<Poly<F>>& entries, int d) const {
    const F& f = ring->field;
    SYZ_CHECK((int)entries.size() == gens(), "column_coords: wrong number of rows");
    std::vector<Elt> v((std::size_t)dim(d), f.zero());
    int off = 0;
    for (int g = 0; g < gens(); ++g) {
      int e = d - gen_deg[g];
      if (!entries[g].is_zero()) {
        SYZ_CHECK(e >= 0, "column_coords: entry in negative degree");
        std::vector<Elt> c = ring->poly_coords_at(entries[g], e);
        for (std::size_t i = 0; i < c.size(); ++i) v[off + (int)i] = c[i];
      }
      off += block_dim(g, d);
    }
    return v;
  }

  // Read a coordinate vector back as one polynomial per generator.
  std::vector<Poly<F>> column_polys(std::span<const Elt> v, int d) const {
    const F& f = ring->field;
    std::vector<Poly<F>> out(gens());
    int off = 0;
    for (int g = 0; g < gens(); ++g) {
      int e = d - gen_deg[g];
      int b = block_dim(g, d);
      for (int t = 0; t < b; ++t)
        if (!f.is_zero(v[off + t]))
          out[g].terms.push_back({v[off + t], ring->basis[e][t]});
      // terms arrive lex-descending because the basis lists are
      off += b;
    }
    return out;
  }
};

// A submodule of an ambient object (GradedModule or FreeWindow), stored as
// one echelon basis per degree, closed under the ambient action.
template <class F, class Amb>
struct Submodule {
  using Elt = typename F::Elt;

  Amb amb;
  int lo = 0;  // degrees lo..amb.high() tracked; zero below
  std::vector<EchelonBasis<F>> sub;

  int high() const { return amb.high(); }
  int dim(int d) const {
    if (d < lo) return 0;
    SYZ_CHECK(d <= high(), "Submodule::dim: degree beyond window");
    return sub[d - lo].dim();
  }

  GradedModule<F> as_module() const {
    const F& f = amb.ring->field;
    GradedModule<F> m;
    m.ring = amb.ring;
    m.lo = lo;
    m.hi = high();
    for (int d = lo; d <= m.hi; ++d) m.dims.push_back(dim(d));
    m.act.assign(amb.ring->nvars(), {});
    for (int k = 0; k < amb.ring->nvars(); ++k)
      for (int d = lo; d < m.hi; ++d) {
        Matrix<F> a(f, dim(d + 1), dim(d));
        const EchelonBasis<F>& cur = sub[d - lo];
        for (int j = 0; j < (int)cur.rows.size(); ++j) {
          std::vector<Elt> w = amb.apply(k, d, cur.rows[j]);
          std::vector<Elt> c =
              sub[d + 1 - lo].member_coords(w, "Submodule: not action-closed");
          for (int i = 0; i < a.rows; ++i) a.at(i, j) = c[i];
        }
        m.act[k].push_back(std::move(a));
      }
    return m;
  }
};

// Smallest action-closed family containing the given homogeneous vectors.
template <class F, class Amb>
Submodule<F, Amb> span_submodule(
    Amb amb, const std::vector<std::pair<int, std::vector<typename F::Elt>>>& gens) {
  const F& f = amb.ring->field;
  Submodule<F, Amb> s;
  int lo = amb.high() + 1;
  for (const auto& [d, v] : gens) {
    SYZ_CHECK(d <= amb.high(), "span_submodule: generator beyond window");
    SYZ_CHECK((int)v.size() == amb.dim(d), "span_submodule: wrong vector length");
    lo = std::min(lo, d);
  }
  s.lo = std::min(lo, amb.high());
  s.amb = std::move(amb);
  for (int d = s.lo; d <= s.high(); ++d) {
    EchelonBasis<F> ech(f, s.amb.dim(d));
    if (d > s.lo) {
      const EchelonBasis<F>& prev = s.sub.back();
      for (int k = 0; k < s.amb.ring->nvars(); ++k)
        for (const auto& row : prev.rows) ech.add(s.amb.apply(k, d - 1, row));
    }
    for (const auto& [gd, v] : gens)
      if (gd == d) ech.add(v);
    s.sub.push_back(std::move(ech));
  }
  return s;
}

// The submodule generated by everything of degree <= j (truncation M^{(j)}).
template <class F>
Submodule<F, GradedModule<F>> truncate_at(const GradedModule<F>& m, int j) {
  std::vector<std::pair<int, std::vector<typename F::Elt>>> gens;
  for (int d = m.lo; d <= std::min(j, m.hi); ++d)
    for (int c = 0; c < m.dim(d); ++c) {
      std::vector<typename F::Elt> v((std::size_t)m.dim(d), m.ring->field.zero());
      v[c] = m.ring->field.one();
      gens.push_back({d, std::move(v)});
    }
  return span_submodule<F, GradedModule<F>>(m, gens);
}

// Coordinate projection of a fibre-product free-window submodule onto one
// factor. Blockwise, degree e part of R maps onto (R_side)_e by keeping that
// side's slice of the normal basis (and the constant in degree 0), which is
// exactly what the ring projections do on normal coordinates.
template <class F>
Submodule<F, FreeWindow<F>> project_to_factor(
    const Submodule<F, FreeWindow<F>>& n, int side) {
  const RingPtr<F>& r = n.amb.ring;
  SYZ_CHECK(r->fibre.has_value(), "project_to_factor: not a fibre product");
  const RingPtr<F>& factor = side == 1 ? r->fibre->left : r->fibre->right;
  const F& f = r->field;

  FreeWindow<F> win(factor, n.amb.gen_deg);
  Submodule<F, FreeWindow<F>> out;
  out.lo = n.lo;
  out.amb = win;
  for (int d = n.lo; d <= n.high(); ++d) {
    EchelonBasis<F> ech(f, win.dim(d));
    for (const auto& row : n.sub[d - n.lo].rows) {
      std::vector<typename F::Elt> p((std::size_t)win.dim(d), f.zero());
      int src = 0, dst = 0;
      for (int g = 0; g < n.amb.gens(); ++g) {
        int e = d - n.amb.gen_deg[g];
        int bs = n.amb.block_dim(g, d), bt = win.block_dim(g, d);
        if (e == 0) {
          if (bs > 0) p[dst] = row[src];
        } else if (e > 0 && bt > 0) {
          int start = side == 1 ? 0 : r->fibre->left_count[e];
          for (int t = 0; t < bt; ++t) p[dst + t] = row[src + start + t];
        }
        src += bs;
        dst += bt;
      }
      ech.add(std::move(p));
    }
    out.sub.push_back(std::move(ech));
  }
  return out;
}

// Quotient of a free window by the submodule its columns generate, with the
// quotient coordinates (non-pivot cover coordinates) kept alongside.
template <class F>
struct ModuleWithCover {
  GradedModule<F> mod;
  FreeWindow<F> cover;
  std::vector<QuotientMap<F>> quot;  // per degree, index d - mod.lo
};

// columns: (degree, one polynomial per generator row). Entries must be
// homogeneous of degree coldeg - gen_deg[row] (or zero).
template <class F>
ModuleWithCover<F> make_presentation_module(
    const RingPtr<F>& r, const std::vector<int>& gen_degs,
    const std::vector<std::pair<int, std::vector<Poly<F>>>>& columns) {
  const F& f = r->field;
  FreeWindow<F> cover(r, gen_degs);

  std::vector<std::pair<int, std::vector<typename F::Elt>>> rel_vectors;
  for (const auto& [d, entries] : columns)
    rel_vectors.push_back({d, cover.column_coords(entries, d)});
  Submodule<F, FreeWindow<F>> rel =
      span_submodule<F, FreeWindow<F>>(cover, rel_vectors);

  ModuleWithCover<F> out;
  out.cover = cover;
  out.mod.ring = r;
  out.mod.lo = cover.low();
  out.mod.hi = cover.high();
  for (int d = out.mod.lo; d <= out.mod.hi; ++d) {
    EchelonBasis<F> ech = d >= rel.lo ? rel.sub[d - rel.lo]
                                      : EchelonBasis<F>(f, cover.dim(d));
    out.quot.push_back(QuotientMap<F>(std::move(ech)));
    out.mod.dims.push_back(out.quot.back().dim());
  }
  out.mod.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = out.mod.lo; d < out.mod.hi; ++d) {
      const QuotientMap<F>& q0 = out.quot[d - out.mod.lo];
      const QuotientMap<F>& q1 = out.quot[d + 1 - out.mod.lo];
      Matrix<F> a(f, q1.dim(), q0.dim());
      for (int j = 0; j < q0.dim(); ++j) {
        std::vector<typename F::Elt> e((std::size_t)cover.dim(d), f.zero());
        e[q0.residual[j]] = f.one();
        std::vector<typename F::Elt> w = cover.apply(k, d, e);
        std::vector<typename F::Elt> c = q1.apply(std::move(w));
        for (int i = 0; i < a.rows; ++i) a.at(i, j) = c[i];
      }
      out.mod.act[k].push_back(std::move(a));
    }
  return out;
}

// R/(p^e) for a homogeneous p, and quotients R/I by a homogeneous ideal.
template <class F>
ModuleWithCover<F> cyclic_quotient(const RingPtr<F>& r,
                                   const std::vector<Poly<F>>& ideal_gens) {
  std::vector<std::pair<int, std::vector<Poly<F>>>> cols;
  for (const auto& p : ideal_gens) {
    auto d = homogeneous_degree(p);
    SYZ_CHECK(d.has_value(), "cyclic_quotient: zero or inhomogeneous generator");
    SYZ_CHECK(*d <= r->top, "cyclic_quotient: generator beyond window");
    cols.push_back({*d, {p}});
  }
  return make_presentation_module<F>(r, {0}, cols);
}

}  // namespace syz
