#pragma once
// Truncated minimal graded free resolutions.
//
// The engine works one homological stage at a time. Given a module N with a
// chosen minimal generating set, it builds the comparison map
//
//    phi : F = (+)_g R(-c_g)  -->  N,   e_g |-> (chosen generator g)
//
// degree by degree and takes kernels. The column of phi indexed by (g, u),
// u a normal monomial of degree e >= 1, is u * phi(e_g); it is computed by
// the recursion u = x_k * u' (the ring's division tables), so each column is
// one module action applied to an earlier column. Columns with u = 1 are
// omitted: a kernel element with a nonzero coordinate on e_g in degree c_g
// would make generator g redundant, contradicting minimality, so the kernel
// of the full map lives entirely on the e >= 1 columns.
//
// Two modes share this step:
//
//  * direct mode keeps everything in one block and records the differential
//    as a matrix of polynomials, so chain-level checks (d o d = 0,
//    minimality) and hand inspection are possible;
//
//  * split mode partitions the (g, u) columns into independent strands
//    before elimination. Two columns interact only if the action can carry
//    one into the other (they meet the same generator block through the
//    ring's multiplication) or they are nonzero on a shared row of N. The
//    kernel of phi is the direct sum of the kernels over the resulting
//    components, and isomorphic components (same window, dimensions and
//    action matrices in kernel coordinates) are collapsed into one strand
//    with a multiplicity. Betti numbers are additive over strands, which is
//    what makes fibre products with exponentially growing resolutions
//    tractable: the strand list stays small while multiplicities grow.
//
// Every degree is computed exactly up to the window top dmax; nothing beyond
// dmax is guessed. betti[i][j] is exact for all j <= dmax. terminated_at
// records the first stage whose syzygy module vanished on the window, if any.

#include <map>
#include <string>

#include "syz/freemod.hpp"

namespace syz {

// Matrix over the ring: entry (i, j) is a homogeneous polynomial of degree
// col_deg[j] - row_deg[i] (or zero). Used for recorded differentials.
template <class F>
struct PolyMatrix {
  std::vector<int> row_deg;
  std::vector<int> col_deg;
  std::vector<Poly<F>> entries;  // row-major

  int rows() const { return (int)row_deg.size(); }
  int cols() const { return (int)col_deg.size(); }
  const Poly<F>& at(int i, int j) const { return entries[(size_t)i * col_deg.size() + j]; }
  Poly<F>& at(int i, int j) { return entries[(size_t)i * col_deg.size() + j]; }
};

// Evaluate a PolyMatrix in a single internal degree d: the plain matrix of
// the map (+)_j R(-col_deg[j])_d -> (+)_i R(-row_deg[i])_d.
template <class F>
Matrix<F> numeric_matrix(const PresentedRing<F>& r, const PolyMatrix<F>& pm, int d) {
  std::vector<int> roff(pm.rows() + 1, 0), coff(pm.cols() + 1, 0);
  for (int i = 0; i < pm.rows(); ++i)
    roff[i + 1] = roff[i] + (d >= pm.row_deg[i] ? (int)r.dim(d - pm.row_deg[i]) : 0);
  for (int j = 0; j < pm.cols(); ++j)
    coff[j + 1] = coff[j] + (d >= pm.col_deg[j] ? (int)r.dim(d - pm.col_deg[j]) : 0);
  Matrix<F> out(r.field, roff[pm.rows()], coff[pm.cols()]);
  for (int i = 0; i < pm.rows(); ++i)
    for (int j = 0; j < pm.cols(); ++j) {
      const Poly<F>& p = pm.at(i, j);
      if (p.terms.empty() || d < pm.col_deg[j]) continue;
      Matrix<F> blk = r.mult_matrix(p, d - pm.col_deg[j]);
      for (int a = 0; a < blk.rows; ++a)
        for (int b = 0; b < blk.cols; ++b)
          out.at(roff[i] + a, coff[j] + b) = blk.at(a, b);
    }
  return out;
}

struct ResolveOptions {
  int imax = 5;
  int dmax = -1;      // -1: resolve through the ring's whole window
  bool split = true;  // false: single-block mode with recorded differentials
};

// One isomorphism class of strand at a given stage.
template <class F>
struct Strand {
  long long mult = 1;
  GradedModule<F> mod;  // the strand in its own kernel coordinates

  // Embedding data for the representative copy: kernel rows kb[d - klo] are
  // coordinates over the parent window columns cols[d - klo].
  int klo = 0;
  std::vector<std::vector<long long>> cols;  // global column ids, see engine
  std::vector<Matrix<F>> kb;
};

template <class F>
struct Resolution {
  RingPtr<F> ring;
  int imax = 0;
  int dmax = 0;
  bool split = true;

  GradedModule<F> input;        // cropped to the window
  GeneratorChoice input_gens;   // minimal generators of the input

  // betti[i]: degree -> rank, exact on the window; empty map = zero stage.
  std::vector<std::map<int, long long>> betti;

  // strands[i] describes the i-th syzygy module Omega_{i+1}, i = 0..; kept
  // only as far as the engine actually stepped.
  std::vector<std::vector<Strand<F>>> strands;

  // direct mode only: F_0, F_1, ... and the differentials F_{i+1} -> F_i.
  std::vector<FreeWindow<F>> windows;
  std::vector<PolyMatrix<F>> diffs;

  // First stage whose syzygy vanished in every window degree, with the claim
  // made only when it is nonvacuous (each cover block exposed at least one
  // degree where a syzygy could have appeared). Still a window statement,
  // not a proof about degrees beyond dmax. -1: never vanished.
  int terminated_at = -1;
  bool terminated() const { return terminated_at >= 0; }

  long long total_betti(int i) const {
    long long t = 0;
    for (auto& [j, b] : betti.at(i)) t += b;
    return t;
  }

  // The i-th syzygy module as a single graded module (direct sum of strands
  // with multiplicity). i = 0 returns the input.
  GradedModule<F> syzygy(int i) const {
    SYZ_CHECK(i >= 0 && i <= (int)strands.size(), "syzygy: stage out of range");
    if (i == 0) return input;
    GradedModule<F> acc;
    acc.ring = ring;
    acc.lo = dmax;
    acc.hi = dmax;
    acc.dims = {0};
    acc.act.assign(ring->nvars(), {});
    bool first = true;
    for (const Strand<F>& s : strands[i - 1])
      for (long long c = 0; c < s.mult; ++c) {
        acc = first ? s.mod : direct_sum(acc, s.mod);
        first = false;
      }
    return acc;
  }
};

namespace detail {

// Column ids encode (generator block, normal monomial) pairs; ids ascend
// with (block, degree, monomial index), so sorting by id is the canonical
// column order everywhere below.
struct ColumnCodec {
  std::vector<int> gen_deg;
  std::vector<long long> base;        // first id of each block
  std::vector<long long> cum;         // cum[e]: ids below ring degree e, within a block
  int dmax = 0;

  template <class F>
  ColumnCodec(const PresentedRing<F>& r, const std::vector<int>& degs, int dmax_)
      : gen_deg(degs), dmax(dmax_) {
    cum.assign((size_t)dmax + 2, 0);
    for (int e = 1; e <= dmax + 1; ++e)
      cum[(size_t)e] = cum[(size_t)e - 1] + (e - 1 >= 1 ? (long long)r.dim(e - 1) : 0);
    base.assign(degs.size() + 1, 0);
    for (size_t g = 0; g < degs.size(); ++g) {
      int span = dmax - degs[g];  // monomial degrees 1..span occur
      base[g + 1] = base[g] + cum[(size_t)std::max(span + 1, 1)];
    }
  }
  long long id(int g, int e, int t) const {
    return base[(size_t)g] + cum[(size_t)e] + t;
  }
  // inverse of id()
  void decode(long long v, int& g, int& e, int& t) const {
    size_t lo = 0, hi = base.size() - 1;
    while (lo + 1 < hi) {
      size_t mid = (lo + hi) / 2;
      if (base[mid] <= v) lo = mid; else hi = mid;
    }
    g = (int)lo;
    long long rem = v - base[lo];
    size_t elo = 1, ehi = cum.size() - 1;
    while (elo + 1 < ehi) {
      size_t mid = (elo + ehi) / 2;
      if (cum[mid] <= rem) elo = mid; else ehi = mid;
    }
    e = (int)elo;
    t = (int)(rem - cum[elo]);
  }
  long long total() const { return base.back(); }
};

struct UnionFind {
  std::vector<long long> up;
  explicit UnionFind(long long n) : up(n, -1) {}
  long long find(long long x) {
    long long r = x;
    while (up[(size_t)r] >= 0) r = up[(size_t)r];
    while (up[(size_t)x] >= 0) { long long n = up[(size_t)x]; up[(size_t)x] = r; x = n; }
    return r;
  }
  void join(long long a, long long b) {
    a = find(a); b = find(b);
    if (a != b) up[(size_t)b] = a;
  }
};

// Fingerprint of a strand module, used to merge isomorphic components.
// Components arrive in kernel coordinates produced by the same deterministic
// elimination, so literal equality of the data is the right test.
template <class F>
std::string strand_key(const GradedModule<F>& m) {
  std::string s = std::to_string(m.lo) + "|" + std::to_string(m.hi) + "|";
  for (int d = m.lo; d <= m.hi; ++d) s += std::to_string(m.dim(d)) + ",";
  s += "|";
  for (int d = m.lo; d < m.hi; ++d)
    for (int k = 0; k < (int)m.ring->nvars(); ++k) {
      const Matrix<F>& a = m.action(k, d);
      for (const auto& x : a.a) s += m.ring->field.str(x) + ";";
      s += "/";
    }
  return s;
}

template <class F>
struct StepResult {
  FreeWindow<F> window;
  std::vector<Strand<F>> out;
};

// One stage: cover n by the free window on gens, split (optionally) and take
// kernels. Column entries are built lazily per degree from the W-recursion.
template <class F>
StepResult<F> resolve_step(const GradedModule<F>& n, const GeneratorChoice& gens,
                           int dmax, bool split) {
  const PresentedRing<F>& r = *n.ring;
  const F& fld = r.field;
  const int nv = (int)r.nvars();

  std::vector<int> gen_deg;
  std::vector<int> gen_coord;
  for (auto& [d, cs] : gens.coords)
    for (int c : cs) { gen_deg.push_back(d); gen_coord.push_back(c); }
  const int ng = (int)gen_deg.size();

  StepResult<F> res{FreeWindow<F>(n.ring, gen_deg), {}};
  if (ng == 0) return res;

  ColumnCodec codec(r, gen_deg, dmax);

  // W[g][e]: matrix n.dim(c_g + e) x r.dim(e) whose column t is the image of
  // column (g, monomial t). W[g][0] is the generator itself.
  std::vector<std::vector<Matrix<F>>> W((size_t)ng);
  for (int g = 0; g < ng; ++g) {
    const int c = gen_deg[g];
    const int span = dmax - c;
    W[(size_t)g].reserve((size_t)span + 1);
    Matrix<F> w0(fld, (int)n.dim(c), 1);
    w0.at(gen_coord[g], 0) = fld.one();
    W[(size_t)g].push_back(std::move(w0));
    for (int e = 1; e <= span; ++e) {
      Matrix<F> we(fld, (int)n.dim(c + e), (int)r.dim(e));
      const Matrix<F>& prev = W[(size_t)g][(size_t)e - 1];
      for (int t = 0; t < we.cols; ++t) {
        int k = r.div_var[(size_t)e][(size_t)t];
        int tp = r.div_prev[(size_t)e][(size_t)t];
        const Matrix<F>& act = n.action(k, c + e - 1);
        for (int row = 0; row < we.rows; ++row) {
          auto acc = fld.zero();
          for (int s = 0; s < prev.rows; ++s)
            acc = fld.add(acc, fld.mul(act.at(row, s), prev.at(s, tp)));
          we.at(row, t) = acc;
        }
      }
      W[(size_t)g].push_back(std::move(we));
    }
  }

  // Partition the e >= 1 columns.
  UnionFind uf(codec.total());
  if (split) {
    // action edges: multiplying column (g, t) by x_k lands on the columns
    // (g, t2) with act[k][e](t2, t) != 0
    for (int g = 0; g < ng; ++g) {
      const int span = dmax - gen_deg[g];
      for (int e = 1; e < span; ++e) {
        for (int k = 0; k < nv; ++k) {
          const Matrix<F>& a = r.act[(size_t)k][(size_t)e];
          for (int t = 0; t < a.cols; ++t)
            for (int t2 = 0; t2 < a.rows; ++t2)
              if (!fld.is_zero(a.at(t2, t)))
                uf.join(codec.id(g, e, t), codec.id(g, e + 1, t2));
        }
      }
    }
    // row edges: columns sharing a nonzero row of N in some degree
    for (int d = 1; d <= dmax; ++d) {
      std::vector<long long> last((size_t)n.dim(d), -1);
      for (int g = 0; g < ng; ++g) {
        int e = d - gen_deg[g];
        if (e < 1 || e > dmax - gen_deg[g]) continue;
        const Matrix<F>& we = W[(size_t)g][(size_t)e];
        for (int t = 0; t < we.cols; ++t) {
          long long v = codec.id(g, e, t);
          for (int row = 0; row < we.rows; ++row)
            if (!fld.is_zero(we.at(row, t))) {
              if (last[(size_t)row] >= 0) uf.join(last[(size_t)row], v);
              last[(size_t)row] = v;
            }
        }
      }
    }
  }

  // Component labels in order of first appearance (canonical).
  std::map<long long, int> comp_of_root;
  std::vector<long long> vertex_comp(codec.total());
  int ncomp = 0;
  for (long long v = 0; v < codec.total(); ++v) {
    long long root = split ? uf.find(v) : 0;
    auto it = comp_of_root.find(root);
    if (it == comp_of_root.end()) it = comp_of_root.emplace(root, ncomp++).first;
    vertex_comp[(size_t)v] = it->second;
  }

  // Per component and degree: sorted column ids.
  std::vector<std::vector<std::vector<long long>>> ccols((size_t)ncomp);
  std::vector<int> clo((size_t)ncomp, dmax + 1);
  for (int g = 0; g < ng; ++g) {
    int span = dmax - gen_deg[g];
    for (int e = 1; e <= span; ++e)
      for (int t = 0; t < (int)r.dim(e); ++t) {
        long long v = codec.id(g, e, t);
        int c = (int)vertex_comp[(size_t)v];
        int d = gen_deg[g] + e;
        if (ccols[(size_t)c].empty()) ccols[(size_t)c].assign((size_t)dmax + 1, {});
        ccols[(size_t)c][(size_t)d].push_back(v);
        clo[(size_t)c] = std::min(clo[(size_t)c], d);
      }
  }

  for (int c = 0; c < ncomp; ++c) {
    if (ccols[(size_t)c].empty()) continue;
    const int lo = clo[(size_t)c];

    // per-degree kernel of phi restricted to this component's columns
    std::vector<Subspace<F>> ker;
    std::vector<std::vector<long long>> cols;
    for (int d = lo; d <= dmax; ++d) {
      std::vector<long long>& cv = ccols[(size_t)c][(size_t)d];
      const int w = (int)cv.size();
      // rows restricted to the component's support, for speed
      std::vector<int> rows_used;
      {
        std::vector<char> used((size_t)n.dim(d), 0);
        for (long long v : cv) {
          int g, e, t;
          codec.decode(v, g, e, t);
          const Matrix<F>& we = W[(size_t)g][(size_t)e];
          for (int row = 0; row < we.rows; ++row)
            if (!fld.is_zero(we.at(row, t))) used[(size_t)row] = 1;
        }
        for (int row = 0; row < (int)used.size(); ++row)
          if (used[(size_t)row]) rows_used.push_back(row);
      }
      Matrix<F> phi(fld, (int)rows_used.size(), w);
      for (int j = 0; j < w; ++j) {
        int g, e, t;
        codec.decode(cv[(size_t)j], g, e, t);
        const Matrix<F>& we = W[(size_t)g][(size_t)e];
        for (int i = 0; i < (int)rows_used.size(); ++i)
          phi.at(i, j) = we.at(rows_used[(size_t)i], t);
      }
      ker.push_back(kernel_basis(phi));
      cols.push_back(cv);
    }

    GradedModule<F> mod;
    mod.ring = n.ring;
    mod.lo = lo;
    mod.hi = dmax;
    mod.dims.resize((size_t)(dmax - lo + 1));
    for (int d = lo; d <= dmax; ++d) mod.dims[(size_t)(d - lo)] = ker[(size_t)(d - lo)].dim();
    bool empty = true;
    for (auto x : mod.dims) empty = empty && (x == 0);
    if (empty) continue;

    // kernel-coordinate action matrices: push a kernel row through the free
    // window action and express it in the next degree's kernel basis
    mod.act.assign((size_t)nv, {});
    for (int k = 0; k < nv; ++k) {
      for (int d = lo; d < dmax; ++d) {
        const Subspace<F>& kd = ker[(size_t)(d - lo)];
        const Subspace<F>& kn = ker[(size_t)(d - lo + 1)];
        const std::vector<long long>& cv = cols[(size_t)(d - lo)];
        const std::vector<long long>& cw = cols[(size_t)(d - lo + 1)];
        Matrix<F> am(fld, (int)kn.dim(), (int)kd.dim());
        for (int rrow = 0; rrow < (int)kd.dim(); ++rrow) {
          std::vector<typename F::Elt> img((size_t)cw.size(), fld.zero());
          for (int j = 0; j < (int)cv.size(); ++j) {
            auto coef = kd.basis.at(rrow, j);
            if (fld.is_zero(coef)) continue;
            int g, e, t;
            codec.decode(cv[(size_t)j], g, e, t);
            // x_k * (g, t) = sum_{t2} act[k][e](t2, t) * (g, t2)
            const Matrix<F>& a = r.act[(size_t)k][(size_t)e];
            for (int t2 = 0; t2 < a.rows; ++t2) {
              if (fld.is_zero(a.at(t2, t))) continue;
              long long tv = codec.id(g, e + 1, t2);
              auto it = std::lower_bound(cw.begin(), cw.end(), tv);
              SYZ_CHECK(it != cw.end() && *it == tv,
                        "resolve_step: action leaves the component");
              img[(size_t)(it - cw.begin())] =
                  fld.add(img[(size_t)(it - cw.begin())],
                          fld.mul(coef, a.at(t2, t)));
            }
          }
          auto cc = kn.coords_checked(img, "resolve_step: action image leaves the kernel");
          for (int i = 0; i < (int)cc.size(); ++i) am.at(i, rrow) = cc[(size_t)i];
        }
        mod.act[(size_t)k].push_back(std::move(am));
      }
    }
    Strand<F> s;
    s.mult = 1;
    s.mod = std::move(mod);
    s.klo = lo;
    s.cols = std::move(cols);
    for (auto& sp : ker) s.kb.push_back(sp.basis);
    res.out.push_back(std::move(s));
  }
  return res;
}

// Expand a kernel row of a strand into a column of polynomials over the
// parent window (one polynomial per window generator).
template <class F>
std::vector<Poly<F>> strand_column(const FreeWindow<F>& win, const Strand<F>& s,
                                   int d, int row) {
  const PresentedRing<F>& r = *win.ring;
  std::vector<typename F::Elt> full((size_t)win.dim(d), r.field.zero());
  const auto& cv = s.cols[(size_t)(d - s.klo)];
  const Matrix<F>& kb = s.kb[(size_t)(d - s.klo)];
  detail::ColumnCodec codec(r, win.gen_deg, s.klo + (int)s.cols.size() - 1);
  for (int j = 0; j < (int)cv.size(); ++j) {
    if (r.field.is_zero(kb.at(row, j))) continue;
    int g, e, t;
    codec.decode(cv[(size_t)j], g, e, t);
    full[(size_t)(win.offset(g, d) + t)] = kb.at(row, j);
  }
  return win.column_polys(full, d);
}

}  // namespace detail

template <class F>
Resolution<F> resolve(const GradedModule<F>& m_in, const ResolveOptions& opt) {
  SYZ_CHECK(opt.imax >= 0, "resolve: imax must be nonnegative");
  int dmax = opt.dmax < 0 ? m_in.hi : opt.dmax;
  SYZ_CHECK(dmax <= m_in.hi, "resolve: window exceeds known module degrees");
  SYZ_CHECK(dmax <= m_in.ring->top, "resolve: window exceeds ring degrees");

  Resolution<F> res;
  res.ring = m_in.ring;
  res.imax = opt.imax;
  res.dmax = dmax;
  res.split = opt.split;
  res.input = crop(m_in, dmax);
  res.input_gens = choose_generators(res.input);
  res.betti.assign((size_t)opt.imax + 1, {});

  struct Job {
    long long mult;
    GradedModule<F> mod;
    GeneratorChoice gens;
  };
  std::vector<Job> jobs;
  if (res.input_gens.total() == 0) {
    res.terminated_at = 0;
    return res;
  }
  jobs.push_back({1, res.input, res.input_gens});

  for (int i = 0; i <= opt.imax; ++i) {
    for (const Job& jb : jobs)
      for (auto& [d, cs] : jb.gens.coords) res.betti[(size_t)i][d] += jb.mult * (long long)cs.size();
    if (i == opt.imax) break;

    // the termination claim below is only honest if every cover block left
    // at least one window degree in which a syzygy could have shown up
    bool exposed = true;
    for (const Job& jb : jobs)
      for (auto& [d, cs] : jb.gens.coords)
        if (d >= dmax && !cs.empty()) exposed = false;

    std::vector<Strand<F>> merged;
    std::map<std::string, size_t> seen;
    bool chain_mode = !opt.split;
    if (chain_mode) SYZ_CHECK(jobs.size() == 1, "resolve: direct mode expects one block");

    for (const Job& jb : jobs) {
      auto step = detail::resolve_step(jb.mod, jb.gens, dmax, opt.split);
      if (chain_mode) res.windows.push_back(step.window);
      for (Strand<F>& s : step.out) {
        s.mult = jb.mult;
        if (!opt.split) {
          merged.push_back(std::move(s));
          continue;
        }
        std::string key = detail::strand_key(s.mod);
        auto it = seen.find(key);
        if (it == seen.end()) {
          seen.emplace(std::move(key), merged.size());
          merged.push_back(std::move(s));
        } else {
          merged[it->second].mult += s.mult;
        }
      }
    }

    std::vector<Job> next;
    for (Strand<F>& s : merged) {
      Job jb{s.mult, s.mod, choose_generators(s.mod)};
      next.push_back(std::move(jb));
    }

    if (chain_mode && !merged.empty()) {
      // record the differential F_{i+1} -> F_i from the strand's kernel rows
      const FreeWindow<F>& win = res.windows.back();
      const Strand<F>& s = merged.front();
      const GeneratorChoice& g2 = next.front().gens;
      PolyMatrix<F> pm;
      pm.row_deg = win.gen_deg;
      for (auto& [d, cs] : g2.coords)
        for (size_t q = 0; q < cs.size(); ++q) pm.col_deg.push_back(d);
      pm.entries.assign((size_t)pm.rows() * pm.cols(), Poly<F>{});
      int col = 0;
      for (auto& [d, cs] : g2.coords)
        for (int c : cs) {
          auto polys = detail::strand_column(win, s, d, c);
          for (int rrow = 0; rrow < pm.rows(); ++rrow) pm.at(rrow, col) = polys[(size_t)rrow];
          ++col;
        }
      res.diffs.push_back(std::move(pm));
    }

    res.strands.push_back(std::move(merged));
    jobs = std::move(next);
    if (jobs.empty()) {
      if (exposed) res.terminated_at = i + 1;
      break;
    }
  }
  return res;
}

// d o d = 0 in every window degree, and minimality: no unit entries.
template <class F>
void check_complex(const Resolution<F>& res) {
  SYZ_CHECK(!res.split, "check_complex: needs a recorded chain (direct mode)");
  const PresentedRing<F>& r = *res.ring;
  for (const PolyMatrix<F>& pm : res.diffs)
    for (int i = 0; i < pm.rows(); ++i)
      for (int j = 0; j < pm.cols(); ++j) {
        const Poly<F>& p = pm.at(i, j);
        if (p.terms.empty()) continue;
        auto hd = homogeneous_degree(p);
        SYZ_CHECK(hd && *hd == pm.col_deg[j] - pm.row_deg[i],
                  "check_complex: entry degree mismatch");
        SYZ_CHECK(*hd >= 1, "check_complex: unit entry breaks minimality");
      }
  for (size_t s = 0; s + 1 < res.diffs.size(); ++s)
    for (int d = 0; d <= res.dmax; ++d) {
      Matrix<F> a = numeric_matrix(r, res.diffs[s], d);
      Matrix<F> b = numeric_matrix(r, res.diffs[s + 1], d);
      SYZ_CHECK(a.mul(b).is_zero(), "check_complex: d o d != 0");
    }
  // exactness on the window: at F_0 the cokernel of d_1 is the input module,
  // and in the middle of the chain kernel = image degree by degree
  if (!res.diffs.empty())
    for (int d = 0; d <= res.dmax; ++d) {
      Matrix<F> a = numeric_matrix(r, res.diffs[0], d);
      SYZ_CHECK((long long)a.rows - rank(a) == (long long)res.input.dim(d),
                "check_complex: F_0 does not present the input module");
    }
  for (size_t s = 0; s + 1 < res.diffs.size(); ++s)
    for (int d = 0; d <= res.dmax; ++d) {
      Matrix<F> a = numeric_matrix(r, res.diffs[s], d);
      Matrix<F> b = numeric_matrix(r, res.diffs[s + 1], d);
      long long nullity = a.cols - rank(a);
      SYZ_CHECK(nullity == (long long)rank(b),
                "check_complex: homology in the middle of the chain");
    }
  if (res.terminated() && !res.diffs.empty())
    for (int d = 0; d <= res.dmax; ++d) {
      Matrix<F> a = numeric_matrix(r, res.diffs.back(), d);
      SYZ_CHECK(a.cols - rank(a) == 0, "check_complex: terminated chain still has syzygies");
    }
}

}  // namespace syz
