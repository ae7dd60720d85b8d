#pragma once
// Monomials as exponent vectors, listed per degree in lex-descending order
// (variable 0 strongest). Index 0 of each degree list is the lex-largest
// monomial; with first-nonzero pivoting downstream this makes row reduction
// pick initial monomials as pivots, which is what keeps the normal monomials
// closed under division.

#include <cstdint>
#include <vector>

#include "syz/field.hpp"

namespace syz {

using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// All monomials of the given total degree in nvars variables, lex descending.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  // recursive descent: highest exponent on the earliest variable first
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = rem;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

// Position of m in a lex-descending list; -1 if absent.
inline int mono_index_in(const std::vector<Monomial>& lex_desc, const Monomial& m) {
  int lo = 0, hi = (int)lex_desc.size();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (lex_desc[mid] == m) return mid;
    if (lex_greater(lex_desc[mid], m))
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

inline long long count_monomials(int nvars, int d) {
  // C(nvars + d - 1, d), with a cap check left to callers
  long long num = 1;
  for (int i = 1; i <= d; ++i) {
    num = num * (nvars - 1 + i) / i;  // exact at each step (product of i consecutive)
  }
  return nvars == 0 ? (d == 0 ? 1 : 0) : num;
}

}  // namespace syz
