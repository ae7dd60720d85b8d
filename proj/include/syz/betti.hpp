#pragma once
// Betti tables and the certificates read off from them. A table knows its
// window (imax, dmax): entries with j <= dmax are exact, everything beyond
// is unknown and is never treated as zero. Entries are rational so that
// cone arithmetic (nonnegative combinations) lives in the same type.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syz/field.hpp"
#include "syz/resolution.hpp"

namespace syz {

struct BettiTable {
  int imax = 0;
  int dmax = 0;
  // mirrors Resolution::terminated_at: from this column on, the window is
  // certified empty (still a window statement); -1 if never certified
  int terminated_at = -1;
  std::vector<std::map<int, Rational>> cols;  // cols[i][j] = beta_{i,j}, absolute j

  bool terminated() const { return terminated_at >= 0; }
  bool exact(int i, int j) const {
    return i <= imax && (j <= dmax || (terminated() && i >= terminated_at));
  }

  Rational value(int i, int j) const {
    SYZ_CHECK(exact(i, j), "BettiTable::value: entry outside the exact window");
    auto& m = cols[(size_t)i];
    auto it = m.find(j);
    return it == m.end() ? Rational(0) : it->second;
  }

  bool same_window(const BettiTable& o) const {
    return imax == o.imax && dmax == o.dmax;
  }
};

template <class F>
BettiTable betti_table(const Resolution<F>& res) {
  BettiTable t;
  t.imax = res.imax;
  t.dmax = res.dmax;
  t.terminated_at = res.terminated_at;
  t.cols.resize((size_t)res.imax + 1);
  for (int i = 0; i <= res.imax; ++i)
    for (auto& [j, b] : res.betti[(size_t)i]) t.cols[(size_t)i][j] = Rational((long)b);
  return t;
}

// Entrywise rational combination. Exactness is the AND of the inputs: the
// result is only terminated-certified where every input is.
BettiTable table_add_scale(const std::vector<BettiTable>& tables,
                           const std::vector<Rational>& coeffs);

// Equality of all exact entries two tables share (used by verifications).
bool equal_on_window(const BettiTable& a, const BettiTable& b);

// Columns i..imax of a table, reindexed to start at 0: the table of the
// i-th syzygy module, exact wherever the original was.
inline BettiTable tail_table(const BettiTable& b, int i) {
  SYZ_CHECK(i >= 0 && i <= b.imax, "tail_table: stage out of range");
  BettiTable t;
  t.imax = b.imax - i;
  t.dmax = b.dmax;
  t.terminated_at = b.terminated() ? std::max(0, b.terminated_at - i) : -1;
  for (int a = i; a <= b.imax; ++a) t.cols.push_back(b.cols[(size_t)a]);
  return t;
}

inline BettiTable crop_table(const BettiTable& b, int new_imax) {
  SYZ_CHECK(new_imax >= 0 && new_imax <= b.imax, "crop_table: bad width");
  BettiTable t = b;
  t.imax = new_imax;
  t.cols.resize((size_t)new_imax + 1);
  if (t.terminated_at > new_imax) t.terminated_at = -1;
  return t;
}

struct RegularityWindow {
  long long value = 0;       // max j - i over nonzero exact entries
  bool lower_bound_only = false;
  std::string str() const {
    return (lower_bound_only ? ">= " : "") + std::to_string(value);
  }
};

// Regularity as visible in the window. The value is exact only when the row
// above the maximum stays visible (and empty) through column imax, or the
// table is terminated; otherwise the row may still grow past the window and
// only a lower bound is honest.
RegularityWindow regularity_window(const BettiTable& b);

struct PureType {
  bool pure = true;
  int witness_i = -1;                 // column with two degrees, when !pure
  int witness_j1 = 0, witness_j2 = 0;
  // delta[i]: generator degree of column i; nullopt = infinity certified by
  // termination. Columns that are merely dark past the window end the vector.
  std::vector<std::optional<long long>> delta;
  bool finite_pdim = false;
  std::string str() const;
};

PureType purity_check(const BettiTable& b);

// True iff every exact nonzero entry in columns 0..s sits on the diagonal
// j = delta_0 + i. A window statement, like everything else here.
bool linear_up_to_stage(const BettiTable& b, int s);

struct KoszulStageReport {
  int stages = 0;
  int first_failure = -1;       // stage with an off-diagonal entry, or -1
  int witness_j = -1;           // offending degree at that stage
  bool linear_through_window() const { return first_failure < 0; }
};

// Resolve k over R and look for the first stage whose column leaves the
// diagonal.
template <class F>
KoszulStageReport koszul_stage_check(const RingPtr<F>& r, int stages, int dmax = -1) {
  ResolveOptions opt;
  opt.imax = stages;
  opt.dmax = dmax;
  auto res = resolve(residue_field_module(r), opt);
  auto b = betti_table(res);
  KoszulStageReport rep;
  rep.stages = stages;
  for (int i = 0; i <= stages && rep.first_failure < 0; ++i)
    for (auto& [j, v] : b.cols[(size_t)i])
      if (v != 0 && j != i) {
        rep.first_failure = i;
        rep.witness_j = j;
        break;
      }
  return rep;
}

// Paper layout: columns are homological degrees i, row r holds beta_{i,i+r}.
// Exact zeros render blank, entries past the window as "·?".
std::string render_betti(const BettiTable& b);

// Structured export and its inverse; round-trips exactly.
std::string betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const std::string& text);

}  // namespace syz
