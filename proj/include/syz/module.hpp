#pragma once
// Graded modules over a PresentedRing, materialized on a degree window
// [lo, hi] inside the ring's own window: per-degree dimensions plus one
// matrix per variable M_d -> M_{d+1}. Degrees below lo are genuinely zero;
// degrees above hi are unknown and asking for them is an error, never a
// silent zero. Everything downstream (generator counts, resolutions,
// projections) works through this one representation.

#include <map>
#include <string>
#include <vector>

#include "syz/ring.hpp"

namespace syz {

template <class F>
struct GradedModule {
  using Elt = typename F::Elt;

  RingPtr<F> ring;
  int lo = 0;
  int hi = 0;
  std::vector<int> dims;                    // dims[i] = dim M_{lo+i}
  std::vector<std::vector<Matrix<F>>> act;  // act[k][i] : M_{lo+i} -> M_{lo+i+1}

  int low() const { return lo; }
  int high() const { return hi; }

  int dim(int d) const {
    if (d < lo) return 0;
    SYZ_CHECK(d <= hi, "GradedModule::dim: degree beyond window");
    return dims[d - lo];
  }

  const Matrix<F>& action(int k, int d) const {
    SYZ_CHECK(d >= lo && d < hi, "GradedModule::action: degree out of range");
    return act[k][d - lo];
  }

  std::vector<Elt> apply(int k, int d, std::span<const Elt> v) const {
    if (d < lo) return std::vector<Elt>((std::size_t)dim(d + 1), ring->field.zero());
    return action(k, d).apply(v);
  }

  bool is_zero_on_window() const {
    for (int x : dims)
      if (x) return false;
    return true;
  }

  std::vector<long long> hilbert() const {  // degrees 0..hi
    for (int d = lo; d < 0; ++d)
      SYZ_CHECK(dims[d - lo] == 0, "hilbert(): module supported in negative degrees");
    std::vector<long long> h(hi + 1, 0);
    for (int d = std::max(lo, 0); d <= hi; ++d) h[d] = dim(d);
    return h;
  }
};

// Shrink the tracked window from above. Data beyond new_hi is dropped, not
// zeroed; the result simply knows less.
template <class F>
GradedModule<F> crop(const GradedModule<F>& m, int new_hi) {
  SYZ_CHECK(new_hi <= m.hi, "crop: cannot extend a window");
  GradedModule<F> t = m;
  t.hi = new_hi;
  int len = std::max(0, new_hi - t.lo + 1);
  t.dims.resize(len);
  for (auto& per_var : t.act) per_var.resize(len > 0 ? len - 1 : 0);
  return t;
}

// Sanity for handmade or derived modules: variable actions commute and ring
// relations annihilate. Meant for tests; cost is quadratic in variables.
template <class F>
void check_module_structure(const GradedModule<F>& m) {
  const F& f = m.ring->field;
  const int n = m.ring->nvars();
  for (int d = m.lo; d + 2 <= m.hi; ++d)
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        Matrix<F> a = m.action(l, d + 1).mul(m.action(k, d));
        Matrix<F> b = m.action(k, d + 1).mul(m.action(l, d));
        SYZ_CHECK(a == b, "module actions do not commute");
      }
  // a relation sum c_u * u must act as zero; each monomial is a composition
  // of variable actions (order immaterial once actions commute)
  for (const auto& rel : m.ring->relations) {
    int e = *homogeneous_degree(rel);
    for (int d = m.lo; d + e <= m.hi; ++d) {
      if (m.dim(d) == 0) continue;
      Matrix<F> total(f, m.dim(d + e), m.dim(d));
      for (const auto& [c, mono] : rel.terms) {
        Matrix<F> comp = Matrix<F>::identity(f, m.dim(d));
        int at = d;
        for (int k = 0; k < (int)mono.size(); ++k)
          for (int rep = 0; rep < mono[k]; ++rep) {
            comp = m.action(k, at).mul(comp);
            ++at;
          }
        for (int i = 0; i < total.rows; ++i)
          for (int j = 0; j < total.cols; ++j)
            total.at(i, j) = f.add(total.at(i, j), f.mul(c, comp.at(i, j)));
      }
      SYZ_CHECK(total.is_zero(), "ring relation does not annihilate module");
    }
  }
}

// Minimal generators, chosen deterministically: in each degree d, the image
// (mM)_d is put in reduced echelon form and the generators are the coordinate
// vectors e_c for the non-pivot columns c. Those are independent modulo the
// image because every nonzero element of an echelon row space has a nonzero
// pivot coordinate.
struct GeneratorChoice {
  std::map<int, std::vector<int>> coords;  // degree -> chosen coordinates, ascending

  std::vector<std::pair<int, long long>> ledger() const {
    std::vector<std::pair<int, long long>> out;
    for (const auto& [d, v] : coords)
      if (!v.empty()) out.push_back({d, (long long)v.size()});
    return out;
  }
  long long total() const {
    long long t = 0;
    for (const auto& [d, v] : coords) t += (long long)v.size();
    return t;
  }
};

template <class F>
GeneratorChoice choose_generators(const GradedModule<F>& m) {
  const F& f = m.ring->field;
  GeneratorChoice g;
  for (int d = m.lo; d <= m.hi; ++d) {
    if (m.dim(d) == 0) continue;
    EchelonBasis<F> image(f, m.dim(d));
    if (d > m.lo) {
      for (int k = 0; k < m.ring->nvars(); ++k) {
        const Matrix<F>& a = m.action(k, d - 1);
        for (int j = 0; j < a.cols; ++j) {
          std::vector<typename F::Elt> col(a.rows);
          for (int i = 0; i < a.rows; ++i) col[i] = a.at(i, j);
          image.add(std::move(col));
        }
      }
    }
    std::vector<bool> is_pivot(m.dim(d), false);
    for (int p : image.pivots) is_pivot[p] = true;
    std::vector<int> chosen;
    for (int c = 0; c < m.dim(d); ++c)
      if (!is_pivot[c]) chosen.push_back(c);
    if (!chosen.empty()) g.coords[d] = std::move(chosen);
  }
  return g;
}

template <class F>
std::vector<std::pair<int, long long>> generator_ledger(const GradedModule<F>& m) {
  return choose_generators(m).ledger();
}

// ---- basic factories ----------------------------------------------------

template <class F>
GradedModule<F> residue_field_module(const RingPtr<F>& r) {
  GradedModule<F> m;
  m.ring = r;
  m.lo = 0;
  m.hi = r->top;
  m.dims.assign(r->top + 1, 0);
  m.dims[0] = 1;
  m.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = 0; d < r->top; ++d)
      m.act[k].push_back(Matrix<F>(r->field, m.dims[d + 1], m.dims[d]));
  return m;
}

template <class F>
GradedModule<F> ring_as_module(const RingPtr<F>& r) {
  GradedModule<F> m;
  m.ring = r;
  m.lo = 0;
  m.hi = r->top;
  for (int d = 0; d <= r->top; ++d) m.dims.push_back(r->dim(d));
  m.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = 0; d < r->top; ++d) m.act[k].push_back(r->act[k][d]);
  return m;
}

// R / m^i  (dims cut off at degree i; actions into the cut are zero maps)
template <class F>
GradedModule<F> power_quotient_module(const RingPtr<F>& r, int i) {
  SYZ_CHECK(i >= 1, "power_quotient_module: exponent must be >= 1");
  GradedModule<F> m;
  m.ring = r;
  m.lo = 0;
  m.hi = r->top;
  for (int d = 0; d <= r->top; ++d) m.dims.push_back(d < i ? r->dim(d) : 0);
  m.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = 0; d < r->top; ++d) {
      if (d + 1 < i)
        m.act[k].push_back(r->act[k][d]);
      else
        m.act[k].push_back(Matrix<F>(r->field, m.dims[d + 1], m.dims[d]));
    }
  return m;
}

// M(s) for s <= 0: degrees shift up by -s and the top -s entries fall off
// the window. Positive shifts would need data beyond the window, so they are
// refused rather than fabricated.
template <class F>
GradedModule<F> twist(const GradedModule<F>& m, int s) {
  SYZ_CHECK(s <= 0, "twist: positive shifts leave the window");
  GradedModule<F> t = m;
  t.lo = m.lo - s;
  t.hi = std::min(m.hi - s, m.ring->top);
  int len = std::max(0, t.hi - t.lo + 1);
  t.dims.resize(len);
  for (auto& per_var : t.act) per_var.resize(len > 0 ? len - 1 : 0);
  return t;
}

template <class F>
GradedModule<F> direct_sum(const GradedModule<F>& a, const GradedModule<F>& b) {
  SYZ_CHECK(a.ring == b.ring, "direct_sum: modules over different rings");
  const F& f = a.ring->field;
  GradedModule<F> s;
  s.ring = a.ring;
  s.lo = std::min(a.lo, b.lo);
  s.hi = std::min(a.hi, b.hi);
  for (int d = s.lo; d <= s.hi; ++d) s.dims.push_back(a.dim(d) + b.dim(d));
  s.act.assign(a.ring->nvars(), {});
  for (int k = 0; k < a.ring->nvars(); ++k)
    for (int d = s.lo; d < s.hi; ++d) {
      Matrix<F> m(f, s.dim(d + 1), s.dim(d));
      if (a.dim(d) > 0 && a.dim(d + 1) > 0)
        for (int i = 0; i < a.dim(d + 1); ++i)
          for (int j = 0; j < a.dim(d); ++j) m.at(i, j) = a.action(k, d).at(i, j);
      if (b.dim(d) > 0 && b.dim(d + 1) > 0)
        for (int i = 0; i < b.dim(d + 1); ++i)
          for (int j = 0; j < b.dim(d); ++j)
            m.at(a.dim(d + 1) + i, a.dim(d) + j) = b.action(k, d).at(i, j);
      s.act[k].push_back(std::move(m));
    }
  return s;
}

// View a module over one factor of a fibre product as a module over the
// whole ring: the other factor's variables act as zero.
template <class F>
GradedModule<F> inflate_to_fibre(const GradedModule<F>& m, const RingPtr<F>& r,
                                 int side) {
  SYZ_CHECK(r->fibre.has_value(), "inflate_to_fibre: not a fibre product");
  SYZ_CHECK(side == 1 || side == 2, "inflate_to_fibre: side must be 1 or 2");
  const RingPtr<F>& factor = side == 1 ? r->fibre->left : r->fibre->right;
  SYZ_CHECK(m.ring == factor, "inflate_to_fibre: module not over that factor");
  const int off = side == 1 ? 0 : r->fibre->nleft;
  GradedModule<F> out;
  out.ring = r;
  out.lo = m.lo;
  out.hi = m.hi;
  out.dims = m.dims;
  out.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = m.lo; d < m.hi; ++d) {
      int local = k - off;
      if (local >= 0 && local < factor->nvars())
        out.act[k].push_back(m.action(local, d));
      else
        out.act[k].push_back(Matrix<F>(r->field, m.dim(d + 1), m.dim(d)));
    }
  return out;
}

template <class F>
GradedModule<F> maximal_ideal_module(const RingPtr<F>& r) {
  GradedModule<F> m;
  m.ring = r;
  m.lo = 1;
  m.hi = r->top;
  for (int d = 1; d <= r->top; ++d) m.dims.push_back(r->dim(d));
  m.act.assign(r->nvars(), {});
  for (int k = 0; k < r->nvars(); ++k)
    for (int d = 1; d < r->top; ++d) m.act[k].push_back(r->act[k][d]);
  return m;
}

// m_j, the ideal generated by one side's variables, as a module over the
// fibre product: the other side's variables kill it, so it is exactly the
// factor's maximal ideal inflated.
template <class F>
GradedModule<F> factor_ideal_module(const RingPtr<F>& r, int side) {
  SYZ_CHECK(r->fibre.has_value(), "factor_ideal_module: not a fibre product");
  const RingPtr<F>& factor = side == 1 ? r->fibre->left : r->fibre->right;
  return inflate_to_fibre(maximal_ideal_module(factor), r, side);
}

}  // namespace syz
