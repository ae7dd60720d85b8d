#pragma once
// Pure-table generator catalogs and exact Betti-cone membership.
//
// Membership is always decided relative to an explicit finite catalog and
// window. A feasible LP gives nonnegative rational coefficients, re-verified
// by substitution; an infeasible one gives a Farkas certificate, re-verified
// by inner products. The certificate proves non-membership only against the
// given catalog: non-membership in the full pure cone is concluded elsewhere,
// through the delta-condition lemma, which is a theorem-level criterion.

#include "syz/betti.hpp"
#include "syz/freemod.hpp"
#include "syz/hilbert.hpp"
#include "syz/lp.hpp"

namespace syz {

struct CatalogEntry {
  std::string descriptor;
  BettiTable table;
};

struct Catalog {
  int imax = 0;
  int dmax = 0;
  std::vector<CatalogEntry> entries;
  std::string hilbert_shape;  // the certified (1+nz)/(1-z)^d form
  std::string regular_form;   // the linear form used for the l-power family
};

// beta(M(-a))_{i,j} = beta(M)_{i,j-a}: shifting a table needs no resolution.
inline BettiTable shift_table(const BettiTable& b, int a) {
  BettiTable t;
  t.imax = b.imax;
  t.dmax = b.dmax;
  t.terminated_at = b.terminated_at;
  t.cols.resize(b.cols.size());
  for (int i = 0; i <= b.imax; ++i)
    for (auto& [j, v] : b.cols[(size_t)i])
      if (j + a <= b.dmax) t.cols[(size_t)i][j + a] = v;
  return t;
}

// The generator families behind the minimal-multiplicity catalogs: shifts of
// R and k when R is Artinian (H = 1+nz), plus the powers R/m^i and R/<l>^i
// when dim = 1 (H = (1+nz)/(1-z)). Any other Hilbert shape is refused: the
// catalog would not be a generating set.
template <class F>
Catalog pure_generator_catalog(const RingPtr<F>& r, int imax, int dmax,
                               std::uint64_t seed = 1) {
  SYZ_CHECK(dmax <= r->top, "pure_generator_catalog: window exceeds ring data");
  HilbertFit fit = fit_hilbert(r->hilbert());
  SYZ_CHECK(fit.confident,
            "pure_generator_catalog: Hilbert series did not stabilize on the window");
  bool shape_ok = fit.pole_order <= 1 && fit.numerator.size() <= 2 &&
                  !fit.numerator.empty() && fit.numerator[0] == 1 &&
                  (fit.numerator.size() < 2 || fit.numerator[1] >= 0);
  SYZ_CHECK(shape_ok,
            "pure_generator_catalog: Hilbert series is not (1+nz)/(1-z)^d with d <= 1");

  Catalog cat;
  cat.imax = imax;
  cat.dmax = dmax;
  cat.hilbert_shape = fit.series_str();

  ResolveOptions opt;
  opt.imax = imax;
  opt.dmax = dmax;

  std::vector<CatalogEntry> bases;
  bases.push_back({"R", betti_table(resolve(ring_as_module(r), opt))});
  for (int i = 1; i <= dmax; ++i) {
    std::string name = i == 1 ? "k" : "R/m^" + std::to_string(i);
    bases.push_back({name, betti_table(resolve(power_quotient_module(r, i), opt))});
  }
  if (fit.pole_order == 1) {
    auto reg = find_linear_regular(r, seed, 32);
    SYZ_CHECK(reg.found,
              "pure_generator_catalog: no window-certified linear regular element");
    cat.regular_form = poly_str(r->field, reg.form, r->vars);
    for (int i = 1; i <= dmax; ++i) {
      auto li = poly_pow(r->field, reg.form, i);
      bases.push_back({"R/(l)^" + std::to_string(i),
                       betti_table(resolve(cyclic_quotient(r, {li}).mod, opt))});
    }
  }

  for (auto& base : bases)
    for (int a = 0; a + base.table.cols[0].begin()->first <= dmax; ++a) {
      CatalogEntry e;
      e.descriptor = a == 0 ? base.descriptor
                            : base.descriptor + "(-" + std::to_string(a) + ")";
      e.table = shift_table(base.table, a);
      bool dup = false;
      for (auto& have : cat.entries)
        if (equal_on_window(have.table, e.table)) { dup = true; break; }
      if (!dup) cat.entries.push_back(std::move(e));
    }

  // structural law over fibre products: every infinite-pdim pure catalog
  // table is linear from column 2 on
  if (r->fibre.has_value())
    for (auto& e : cat.entries) {
      PureType p = purity_check(e.table);
      SYZ_CHECK(p.pure, "pure_generator_catalog: catalog entry is not pure");
      if (p.finite_pdim) continue;
      for (size_t i = 3; i < p.delta.size(); ++i)
        SYZ_CHECK(p.delta[i] && p.delta[i - 1] &&
                      *p.delta[i] == *p.delta[i - 1] + 1,
                  "pure_generator_catalog: nonlinear tail in an infinite catalog table");
    }
  return cat;
}

struct ConePart {
  Rational coeff;
  std::string descriptor;
  BettiTable table;
};

struct ConeDecomposition {
  bool member = false;
  std::vector<ConePart> parts;            // when member
  std::vector<Rational> farkas;           // when not: one weight per cell
  std::vector<std::pair<int, int>> cells; // LP row order, for the certificate
  long long pivot_steps = 0;

  std::string str() const {
    if (!member) return "not in the catalog cone (Farkas certificate attached)";
    std::string s;
    for (auto& p : parts) {
      if (!s.empty()) s += " + ";
      s += rational_str(p.coeff) + " * " + p.descriptor;
    }
    return s.empty() ? "0" : s;
  }
};

inline ConeDecomposition cone_decompose(const BettiTable& target, const Catalog& cat) {
  SYZ_CHECK(target.imax == cat.imax && target.dmax == cat.dmax,
            "cone_decompose: window mismatch");
  ConeDecomposition out;
  // one LP row per window cell that any table touches
  for (int i = 0; i <= cat.imax; ++i)
    for (int j = 0; j <= cat.dmax; ++j) {
      bool touched = target.value(i, j) != 0;
      for (auto& e : cat.entries)
        touched = touched || e.table.value(i, j) != 0;
      if (touched) out.cells.push_back({i, j});
    }
  RatField Q;
  Matrix<RatField> A(Q, (int)out.cells.size(), (int)cat.entries.size());
  std::vector<Rational> b(out.cells.size());
  for (size_t row = 0; row < out.cells.size(); ++row) {
    auto [i, j] = out.cells[row];
    b[row] = target.value(i, j);
    for (size_t col = 0; col < cat.entries.size(); ++col)
      A.at((int)row, (int)col) = cat.entries[col].table.value(i, j);
  }
  LpResult lp = lp_feasible_nonneg(A, b);
  out.pivot_steps = lp.pivot_steps;
  out.member = lp.feasible;
  if (lp.feasible) {
    std::vector<BettiTable> tabs;
    std::vector<Rational> coeffs;
    for (size_t col = 0; col < cat.entries.size(); ++col)
      if (lp.x[col] != 0) {
        out.parts.push_back({lp.x[col], cat.entries[col].descriptor,
                             cat.entries[col].table});
        tabs.push_back(cat.entries[col].table);
        coeffs.push_back(lp.x[col]);
      }
    // substitution check at table level, independent of the LP's own recheck;
    // an empty part list must mean the target is the zero table
    BettiTable sum = table_add_scale(
        tabs.empty() ? std::vector<BettiTable>{target} : tabs,
        tabs.empty() ? std::vector<Rational>{Rational(0)} : coeffs);
    SYZ_CHECK(equal_on_window(sum, target),
              "cone_decompose: decomposition fails substitution");
  } else {
    out.farkas = lp.farkas;
    // certificate soundness at table level: y'A >= 0 and y'b < 0
    for (size_t col = 0; col < cat.entries.size(); ++col) {
      Rational dot(0);
      for (size_t row = 0; row < out.cells.size(); ++row)
        dot += out.farkas[row] * A.at((int)row, (int)col);
      SYZ_CHECK(dot >= 0, "cone_decompose: certificate fails on a generator");
    }
    Rational dot(0);
    for (size_t row = 0; row < out.cells.size(); ++row)
      dot += out.farkas[row] * b[row];
    SYZ_CHECK(dot < 0, "cone_decompose: certificate fails on the target");
  }
  return out;
}

struct DeltaCondition {
  bool pass = true;
  int violation_i = -1;
  std::string detail;
};

// Necessary condition for membership in the pure cone over a window-Koszul
// fibre product: for i >= 3, delta_i is infinite or delta_{i-1} = delta_i - 1.
// A Violation certifies non-membership in the full pure cone, catalog-free.
inline DeltaCondition purity_delta_condition(const PureType& p) {
  SYZ_CHECK(p.pure, "purity_delta_condition: module is not pure on the window");
  DeltaCondition out;
  for (size_t i = 3; i < p.delta.size(); ++i) {
    if (!p.delta[i]) continue;  // certified infinity passes
    bool ok = p.delta[i - 1].has_value() && *p.delta[i - 1] == *p.delta[i] - 1;
    if (!ok) {
      out.pass = false;
      out.violation_i = (int)i;
      out.detail = "delta_" + std::to_string(i - 1) + " = " +
                   (p.delta[i - 1] ? std::to_string(*p.delta[i - 1]) : "inf") +
                   " but delta_" + std::to_string(i) + " = " +
                   std::to_string(*p.delta[i]);
      return out;
    }
  }
  return out;
}

}  // namespace syz
