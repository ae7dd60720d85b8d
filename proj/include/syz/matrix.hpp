#pragma once
// Dense exact matrices and the reduction routines everything else rests on.
// All pivoting is deterministic: scanning left to right, the pivot row is the
// first remaining row with a nonzero entry. Same input, same echelon form,
// same kernel basis, on every run.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "syz/field.hpp"

namespace syz {

template <class F>
struct Matrix {
  using Elt = typename F::Elt;

  F field;
  int rows = 0;
  int cols = 0;
  std::vector<Elt> a;  // row-major

  Matrix() = default;
  Matrix(const F& f, int r, int c)
      : field(f), rows(r), cols(c), a((std::size_t)r * c, f.zero()) {}

  Elt& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
  const Elt& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

  std::span<Elt> row(int i) { return {a.data() + (std::size_t)i * cols, (std::size_t)cols}; }
  std::span<const Elt> row(int i) const {
    return {a.data() + (std::size_t)i * cols, (std::size_t)cols};
  }

  static Matrix identity(const F& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  bool is_zero() const {
    for (const Elt& x : a)
      if (!field.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field, cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix mul(const Matrix& b) const {
    SYZ_CHECK(field == b.field, "Matrix::mul: field mismatch");
    SYZ_CHECK(cols == b.rows, "Matrix::mul: shape mismatch");
    Matrix c(field, rows, b.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Elt& x = at(i, k);
        if (field.is_zero(x)) continue;
        for (int j = 0; j < b.cols; ++j)
          c.at(i, j) = field.add(c.at(i, j), field.mul(x, b.at(k, j)));
      }
    return c;
  }

  std::vector<Elt> apply(std::span<const Elt> v) const {
    SYZ_CHECK((int)v.size() == cols, "Matrix::apply: length mismatch");
    std::vector<Elt> w(rows, field.zero());
    for (int i = 0; i < rows; ++i) {
      Elt s = field.zero();
      for (int j = 0; j < cols; ++j)
        if (!field.is_zero(v[j])) s = field.add(s, field.mul(at(i, j), v[j]));
      w[i] = s;
    }
    return w;
  }

  bool operator==(const Matrix& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivots;  // pivot column of row 0,1,...,rank-1 (increasing)
};

// Reduced row echelon form in place. Unit pivots, zeros above and below.
template <class F>
RrefInfo rref_in_place(Matrix<F>& m) {
  const F& f = m.field;
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    // rows >= r vanish on every column left of c, so work from c rightwards
    typename F::Elt piv_inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const typename F::Elt x = m.at(i, c);
      if (f.is_zero(x)) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(r, j)));
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

template <class F>
int rank(Matrix<F> m) {
  return rref_in_place(m).rank;
}

// A subspace of k^n presented by a basis whose rows restrict to the identity
// on a fixed set of "section" columns: basis[i][sec[j]] == delta_ij. Then the
// coordinates of any member v are just v restricted to the section columns,
// and membership is checked by reconstructing from those coordinates.
template <class F>
struct Subspace {
  using Elt = typename F::Elt;

  Matrix<F> basis;           // dim x ambient
  std::vector<int> sections;  // one column per basis row

  int dim() const { return basis.rows; }
  int ambient() const { return basis.cols; }

  std::vector<Elt> coords(std::span<const Elt> v) const {
    SYZ_CHECK((int)v.size() == ambient(), "Subspace::coords: length mismatch");
    std::vector<Elt> c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[sections[i]];
    return c;
  }

  std::vector<Elt> reconstruct(std::span<const Elt> c) const {
    const F& f = basis.field;
    SYZ_CHECK((int)c.size() == dim(), "Subspace::reconstruct: length mismatch");
    std::vector<Elt> v(ambient(), f.zero());
    for (int i = 0; i < dim(); ++i) {
      if (f.is_zero(c[i])) continue;
      for (int j = 0; j < ambient(); ++j)
        v[j] = f.add(v[j], f.mul(c[i], basis.at(i, j)));
    }
    return v;
  }

  bool contains(std::span<const Elt> v) const {
    const F& f = basis.field;
    std::vector<Elt> w = reconstruct(coords(v));
    for (int j = 0; j < ambient(); ++j)
      if (!f.is_zero(f.sub(w[j], v[j]))) return false;
    return true;
  }

  // coords() that insists the vector really lies in the subspace.
  std::vector<Elt> coords_checked(std::span<const Elt> v, const char* what) const {
    std::vector<Elt> c = coords(v);
    const F& f = basis.field;
    std::vector<Elt> w = reconstruct(c);
    for (int j = 0; j < ambient(); ++j)
      if (!f.is_zero(f.sub(w[j], v[j]))) fail(std::string(what) + ": vector not in subspace");
    return c;
  }
};

// Kernel of A (right null space), basis rows in echelon order: one row per
// free column, free columns ascending, and row i has a 1 in its own free
// column and 0 in every other free column. That makes the free columns a
// section set in the sense above.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& a) {
  const F& f = a.field;
  Matrix<F> m = a;
  RrefInfo info = rref_in_place(m);
  std::vector<bool> is_pivot(a.cols, false);
  for (int c : info.pivots) is_pivot[c] = true;

  Subspace<F> ker;
  ker.basis = Matrix<F>(f, a.cols - info.rank, a.cols);
  int r = 0;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    ker.basis.at(r, c) = f.one();
    for (int t = 0; t < info.rank; ++t)
      ker.basis.at(r, info.pivots[t]) = f.neg(m.at(t, c));
    ker.sections.push_back(c);
    ++r;
  }
  return ker;
}

// Row space of A as a Subspace (rref rows; pivot columns are the sections).
template <class F>
Subspace<F> row_space(const Matrix<F>& a) {
  Matrix<F> m = a;
  RrefInfo info = rref_in_place(m);
  Subspace<F> s;
  s.basis = Matrix<F>(a.field, info.rank, a.cols);
  for (int i = 0; i < info.rank; ++i)
    for (int j = 0; j < a.cols; ++j) s.basis.at(i, j) = m.at(i, j);
  s.sections = info.pivots;
  return s;
}

// Incrementally maintained reduced echelon basis of a growing subspace.
// Insertion order does not matter for the end result: the reduced echelon
// basis and its pivot set are canonical for the subspace.
template <class F>
struct EchelonBasis {
  using Elt = typename F::Elt;

  F field;
  int ambient = 0;
  std::vector<std::vector<Elt>> rows;  // kept reduced, pivots strictly increasing
  std::vector<int> pivots;

  EchelonBasis() = default;
  EchelonBasis(const F& f, int n) : field(f), ambient(n) {}

  int dim() const { return (int)rows.size(); }

  // Reduce v against the current rows (v minus its projection; exact).
  std::vector<Elt> reduce(std::vector<Elt> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Elt& x = v[pivots[i]];
      if (field.is_zero(x)) continue;
      const Elt c = x;  // rows have unit pivots
      for (int j = pivots[i]; j < ambient; ++j)
        v[j] = field.sub(v[j], field.mul(c, rows[i][j]));
    }
    return v;
  }

  bool contains(const std::vector<Elt>& v) const {
    std::vector<Elt> r = reduce(v);
    for (const Elt& x : r)
      if (!field.is_zero(x)) return false;
    return true;
  }

  // Returns true iff the vector enlarged the span.
  bool add(std::vector<Elt> v) {
    SYZ_CHECK((int)v.size() == ambient, "EchelonBasis::add: length mismatch");
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < ambient; ++j)
      if (!field.is_zero(v[j])) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Elt inv = field.inv(v[p]);
    for (int j = p; j < ambient; ++j) v[j] = field.mul(v[j], inv);
    // clear column p in the existing rows, then insert keeping pivots sorted
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Elt x = rows[i][p];
      if (field.is_zero(x)) continue;
      for (int j = p; j < ambient; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(x, v[j]));
    }
    auto pos = std::upper_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
    pivots.insert(pivots.begin() + pos, p);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
  }

  // Coordinates of a member with respect to the echelon rows. Rows have unit
  // pivots and zeros at each other's pivots, so coordinates are just the
  // pivot entries; membership is verified first.
  std::vector<Elt> member_coords(const std::vector<Elt>& v, const char* what) const {
    if (!contains(v)) fail(std::string(what) + ": vector not in span");
    std::vector<Elt> c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = v[pivots[i]];
    return c;
  }

  Subspace<F> to_subspace() const {
    Subspace<F> s;
    s.basis = Matrix<F>(field, dim(), ambient);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = rows[i][j];
    s.sections = pivots;
    return s;
  }
};

// Quotient k^n / U with U given by an echelon basis. Coordinates on the
// quotient are the non-pivot positions of the reduced representative.
template <class F>
struct QuotientMap {
  using Elt = typename F::Elt;

  EchelonBasis<F> sub;        // the subspace being killed
  std::vector<int> residual;  // non-pivot columns, ascending

  QuotientMap() = default;
  explicit QuotientMap(EchelonBasis<F> u) : sub(std::move(u)) {
    std::vector<bool> is_pivot(sub.ambient, false);
    for (int p : sub.pivots) is_pivot[p] = true;
    for (int j = 0; j < sub.ambient; ++j)
      if (!is_pivot[j]) residual.push_back(j);
  }

  int dim() const { return (int)residual.size(); }

  std::vector<Elt> apply(std::vector<Elt> v) const {
    v = sub.reduce(std::move(v));
    std::vector<Elt> c(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) c[i] = v[residual[i]];
    return c;
  }
};

}  // namespace syz
