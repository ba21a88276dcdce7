#pragma once

// Exact sparse linear algebra with deterministic outputs.
//
// Vectors are sorted sparse index/value lists; matrices are column-sparse.
// All subspaces are kept in reduced row-echelon form (unit pivots, pivot
// columns cleared), which is a canonical representative of the subspace, so
// equality, membership, kernels and quotient representatives are reproducible
// regardless of the order work was fed in.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hhbv/field.hpp"
#include "hhbv/polynomial.hpp"

namespace hhbv {

using SVec = std::vector<std::pair<int, FieldElement>>;  // sorted by index

inline SVec svec_unit(FieldRef F, int i) { return SVec{{i, F->one()}}; }

inline FieldElement svec_get(const SVec& v, int i, FieldRef F) {
  auto it = std::lower_bound(
      v.begin(), v.end(), i,
      [](const std::pair<int, FieldElement>& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return F->zero();
}

inline SVec svec_scale(const SVec& v, const FieldElement& c) {
  if (c.is_zero()) return {};
  SVec r;
  r.reserve(v.size());
  for (const auto& [i, a] : v) {
    FieldElement b = a * c;
    if (!b.is_zero()) r.emplace_back(i, b);
  }
  return r;
}

// a + c*b
inline SVec svec_axpy(const SVec& a, const FieldElement& c, const SVec& b) {
  if (c.is_zero()) return a;
  SVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      FieldElement v = c * b[j].second;
      if (!v.is_zero()) r.emplace_back(b[j].first, v);
      ++j;
    } else {
      FieldElement v = a[i].second + c * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

inline SVec svec_add(const SVec& a, const SVec& b, FieldRef F) {
  return svec_axpy(a, F->one(), b);
}
inline SVec svec_sub(const SVec& a, const SVec& b, FieldRef F) {
  return svec_axpy(a, -F->one(), b);
}

inline std::vector<FieldElement> svec_dense(const SVec& v, int dim, FieldRef F) {
  std::vector<FieldElement> d(static_cast<std::size_t>(dim), F->zero());
  for (const auto& [i, a] : v) d[static_cast<std::size_t>(i)] = a;
  return d;
}

class Matrix {
 public:
  Matrix(FieldRef F, int rows, int cols)
      : F_(F), rows_(rows), cols_(cols), col_(static_cast<std::size_t>(cols)) {}

  static Matrix identity(FieldRef F, int n) {
    Matrix m(F, n, n);
    for (int i = 0; i < n; ++i) m.col_[static_cast<std::size_t>(i)] = svec_unit(F, i);
    return m;
  }

  FieldRef field() const { return F_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const SVec& col(int j) const { return col_[static_cast<std::size_t>(j)]; }
  void set_col(int j, SVec v) { col_[static_cast<std::size_t>(j)] = std::move(v); }
  FieldElement get(int i, int j) const { return svec_get(col(j), i, F_); }
  void set(int i, int j, const FieldElement& v) {
    auto& c = col_[static_cast<std::size_t>(j)];
    auto it = std::lower_bound(
        c.begin(), c.end(), i,
        [](const std::pair<int, FieldElement>& e, int k) { return e.first < k; });
    if (it != c.end() && it->first == i) {
      if (v.is_zero())
        c.erase(it);
      else
        it->second = v;
    } else if (!v.is_zero()) {
      c.insert(it, {i, v});
    }
  }
  void add_to(int i, int j, const FieldElement& v) {
    if (v.is_zero()) return;
    set(i, j, get(i, j) + v);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
  }
  bool is_zero() const {
    for (const auto& c : col_)
      if (!c.empty()) return false;
    return true;
  }

  // M * x for a sparse column vector x
  SVec apply(const SVec& x) const {
    SVec acc;
    for (const auto& [j, c] : x) acc = svec_axpy(acc, c, col(j));
    return acc;
  }

  Matrix multiply(const Matrix& o) const {
    if (o.rows_ != cols_) throw hhbv_error("shape", "matrix product shape mismatch");
    Matrix r(F_, rows_, o.cols_);
    for (int j = 0; j < o.cols_; ++j) r.set_col(j, apply(o.col(j)));
    return r;
  }

  Matrix transpose() const {
    Matrix t(F_, cols_, rows_);
    for (int j = 0; j < cols_; ++j)
      for (const auto& [i, v] : col(j)) t.col_[static_cast<std::size_t>(i)].emplace_back(j, v);
    // columns were filled in ascending j per row bucket, already sorted
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(F_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.set_col(j, svec_add(col(j), o.col(j), F_));
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(F_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.set_col(j, svec_sub(col(j), o.col(j), F_));
    return r;
  }
  Matrix scaled(const FieldElement& c) const {
    Matrix r(F_, rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.set_col(j, svec_scale(col(j), c));
    return r;
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
  }

  // rows as sparse vectors (for elimination)
  std::vector<SVec> row_list() const {
    std::vector<SVec> rows(static_cast<std::size_t>(rows_));
    for (int j = 0; j < cols_; ++j)
      for (const auto& [i, v] : col(j)) rows[static_cast<std::size_t>(i)].emplace_back(j, v);
    return rows;
  }

 private:
  FieldRef F_;
  int rows_, cols_;
  std::vector<SVec> col_;
};

// Incrementally maintained reduced echelon collection.  Each inserted vector
// is reduced against existing pivot rows; if independent it is normalized to
// a unit pivot and back-eliminated from the others.  Optional "tails" ride
// along with the rows, recording each row as a combination of the inserted
// generators (used for solving and for extracting dependence relations).
class Echelon {
 public:
  Echelon(FieldRef F, int dim) : F_(F), dim_(dim) {}

  FieldRef field() const { return F_; }
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<SVec>& tails() const { return tails_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // reduce v against the echelon rows; if tail_out is given it accumulates the
  // combination of previously inserted tails that was subtracted
  SVec reduce(SVec v, SVec* tail_out = nullptr) const {
    SVec tacc;
    std::size_t r = 0;
    // rows_ sorted by pivot; stream through v's entries
    for (std::size_t k = 0; k < v.size();) {
      int idx = v[k].first;
      while (r < rows_.size() && pivots_[r] < idx) ++r;
      if (r < rows_.size() && pivots_[r] == idx) {
        FieldElement c = -v[k].second;  // pivot entries are 1
        v = svec_axpy(v, c, rows_[r]);
        if (tail_out) tacc = svec_axpy(tacc, c, tails_[r]);
        // v[k] got cancelled; indices before idx unchanged
        k = 0;
        std::size_t lo = 0, hi = v.size();
        while (lo < hi) {  // first entry with index > idx
          std::size_t mid = (lo + hi) / 2;
          if (v[mid].first <= idx)
            lo = mid + 1;
          else
            hi = mid;
        }
        k = lo;
        ++r;
      } else {
        ++k;
      }
    }
    if (tail_out) *tail_out = std::move(tacc);
    return v;
  }

  // insert a generator; returns true if it enlarged the span
  bool insert(SVec v, SVec tail = {}) {
    SVec tacc;
    v = reduce(std::move(v), &tacc);
    tail = svec_add(tail, tacc, F_);
    if (v.empty()) return false;
    FieldElement inv = v.front().second.inverse();
    v = svec_scale(v, inv);
    tail = svec_scale(tail, inv);
    int piv = v.front().first;
    std::size_t pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    // clear this pivot from the other rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      FieldElement c = svec_get(rows_[r], piv, F_);
      if (!c.is_zero()) {
        rows_[r] = svec_axpy(rows_[r], -c, v);
        tails_[r] = svec_axpy(tails_[r], -c, tail);
      }
    }
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    tails_.insert(tails_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(tail));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

  bool contains(const SVec& v) const { return reduce(v).empty(); }

 private:
  FieldRef F_;
  int dim_;
  std::vector<SVec> rows_;
  std::vector<SVec> tails_;
  std::vector<int> pivots_;
};

// A subspace in canonical reduced-echelon form.
class Subspace {
 public:
  Subspace(FieldRef F, int ambient) : ech_(F, ambient) {}
  Subspace(FieldRef F, int ambient, const std::vector<SVec>& gens)
      : ech_(F, ambient) {
    for (const auto& g : gens) ech_.insert(g);
  }

  FieldRef field() const { return ech_.field(); }
  int ambient_dim() const { return ech_.dim(); }
  int dim() const { return ech_.rank(); }
  const std::vector<SVec>& basis() const { return ech_.rows(); }
  const std::vector<int>& pivots() const { return ech_.pivots(); }

  bool contains(const SVec& v) const { return ech_.contains(v); }
  bool contains(const Subspace& o) const {
    for (const auto& r : o.basis())
      if (!contains(r)) return false;
    return true;
  }
  bool operator==(const Subspace& o) const {
    return dim() == o.dim() && contains(o);  // canonical forms coincide
  }
  SVec reduce(const SVec& v) const { return ech_.reduce(v); }
  void insert(const SVec& v) { ech_.insert(v); }

  Subspace sum(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& r : o.basis()) s.insert(r);
    return s;
  }

 private:
  Echelon ech_;
};

struct RankKernelImage {
  int rank;
  Subspace kernel;  // ambient = cols
  Subspace image;   // ambient = rows
};

// rank, null space, and column space of M
inline RankKernelImage rank_kernel_image(const Matrix& M) {
  FieldRef F = M.field();
  Echelon rowech(F, M.cols());
  for (auto& r : M.row_list()) rowech.insert(std::move(r));
  int rank = rowech.rank();
  Subspace kernel(F, M.cols());
  {
    std::vector<char> is_pivot(static_cast<std::size_t>(M.cols()), 0);
    for (int p : rowech.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int f = 0; f < M.cols(); ++f) {
      if (is_pivot[static_cast<std::size_t>(f)]) continue;
      SVec k{{f, F->one()}};
      const auto& rows = rowech.rows();
      const auto& piv = rowech.pivots();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        FieldElement c = svec_get(rows[r], f, F);
        if (!c.is_zero()) k = svec_axpy(k, -c, svec_unit(F, piv[r]));
      }
      std::sort(k.begin(), k.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      kernel.insert(k);
    }
  }
  Subspace image(F, M.rows());
  for (int j = 0; j < M.cols(); ++j) image.insert(M.col(j));
  return {rank, std::move(kernel), std::move(image)};
}

inline int matrix_rank(const Matrix& M) {
  Echelon rowech(M.field(), M.cols());
  for (auto& r : M.row_list()) rowech.insert(std::move(r));
  return rowech.rank();
}

// Repeated exact solves against a fixed matrix: the columns of M are
// echelonized with combination tracking; solve(b) reduces b and reads the
// coordinates off the tails.  The returned solution is supported on the
// echelon's chosen columns (a fixed deterministic choice).
class Solver {
 public:
  explicit Solver(const Matrix& M) : M_(&M), ech_(M.field(), M.rows()) {
    for (int j = 0; j < M.cols(); ++j)
      ech_.insert(M.col(j), svec_unit(M.field(), j));
  }

  std::optional<SVec> solve(const SVec& b) const {
    SVec tail;
    SVec rem = ech_.reduce(b, &tail);
    if (!rem.empty()) return std::nullopt;
    // b = sum tail_j * col_j  =>  x = tail (negate the subtraction convention)
    return svec_scale(tail, -M_->field()->one());
  }

  int rank() const { return ech_.rank(); }
  bool invertible() const {
    return M_->rows() == M_->cols() && rank() == M_->rows();
  }

 private:
  const Matrix* M_;
  Echelon ech_;
};

inline std::optional<SVec> solve(const Matrix& M, const SVec& b) {
  return Solver(M).solve(b);
}

inline Matrix inverse(const Matrix& M) {
  if (M.rows() != M.cols()) throw hhbv_error("shape", "inverse of a non-square matrix");
  Solver s(M);
  Matrix inv(M.field(), M.rows(), M.cols());
  for (int j = 0; j < M.cols(); ++j) {
    auto x = s.solve(svec_unit(M.field(), j));
    if (!x) throw hhbv_error("singular", "matrix is singular");
    inv.set_col(j, std::move(*x));
  }
  return inv;
}

// Representatives of total/sub, chosen greedily over total's echelon basis:
// walk the canonical basis of `total` in pivot order and keep each vector
// whose class is independent of sub plus the representatives chosen so far.
inline std::vector<SVec> quotient_representatives(const Subspace& total,
                                                  const Subspace& sub) {
  if (!total.contains(sub))
    throw hhbv_error("bad-argument", "quotient: sub is not contained in total");
  Echelon acc(total.field(), total.ambient_dim());
  for (const auto& r : sub.basis()) acc.insert(r);
  std::vector<SVec> reps;
  for (const auto& t : total.basis())
    if (acc.insert(t)) reps.push_back(t);
  return reps;
}

// monic annihilator of v under M via Krylov iteration
inline Polynomial vector_min_poly(const Matrix& M, const SVec& v) {
  FieldRef F = M.field();
  Echelon ech(F, M.rows());
  SVec w = v;
  int k = 0;
  for (;;) {
    SVec tail;
    SVec rem = ech.reduce(w, &tail);
    if (rem.empty()) {
      // w = M^k v depends on earlier powers: coefficients from the tail
      std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1, F->zero());
      for (const auto& [j, a] : tail) c[static_cast<std::size_t>(j)] = a;
      c[static_cast<std::size_t>(k)] = F->one();
      return Polynomial(F, std::move(c));
    }
    ech.insert(w, svec_unit(F, k));
    w = M.apply(w);
    ++k;
    if (k > M.rows() + 1) throw hhbv_error("internal", "Krylov did not terminate");
  }
}

inline Polynomial minimal_polynomial(const Matrix& M) {
  if (M.rows() != M.cols()) throw hhbv_error("shape", "minimal polynomial of a non-square matrix");
  FieldRef F = M.field();
  Polynomial m = Polynomial::constant(F, F->one());
  for (int i = 0; i < M.rows(); ++i) {
    m = poly_lcm(m, vector_min_poly(M, svec_unit(F, i)));
    if (m.degree() == M.rows()) break;
  }
  return m;
}

// characteristic polynomial as the product of relative annihilators along a
// cyclic decomposition (exact over any field)
inline Polynomial char_polynomial(const Matrix& M) {
  if (M.rows() != M.cols()) throw hhbv_error("shape", "characteristic polynomial of a non-square matrix");
  FieldRef F = M.field();
  const int n = M.rows();
  Echelon K(F, n);
  Polynomial chi = Polynomial::constant(F, F->one());
  for (int i = 0; i < n && K.rank() < n; ++i) {
    SVec start = svec_unit(F, i);
    if (K.contains(start)) continue;
    // local Krylov relative to K
    Echelon loc = K;
    std::vector<SVec> powers;
    SVec w = start;
    for (;;) {
      SVec tail;
      SVec rem = loc.reduce(w, &tail);
      if (rem.empty()) {
        int k = static_cast<int>(powers.size());
        std::vector<FieldElement> c(static_cast<std::size_t>(k) + 1, F->zero());
        for (const auto& [j, a] : tail)
          if (j >= 0) c[static_cast<std::size_t>(j)] = a;
        c[static_cast<std::size_t>(k)] = F->one();
        chi = chi * Polynomial(F, std::move(c));
        break;
      }
      loc.insert(w, svec_unit(F, static_cast<int>(powers.size())));
      powers.push_back(w);
      w = M.apply(w);
    }
    for (auto& p : powers) K.insert(std::move(p));
  }
  if (chi.degree() != n) throw hhbv_error("internal", "characteristic polynomial degree mismatch");
  return chi;
}

struct OperatorClassification {
  Polynomial min_poly;
  Polynomial char_poly;
  bool semisimple;               // min poly squarefree
  bool diagonalizable_in_field;  // min poly splits into distinct linear factors
  std::vector<std::pair<FieldElement, int>> spectrum_in_field;  // char poly roots
};

inline OperatorClassification classify_operator(const Matrix& M) {
  Polynomial mp = minimal_polynomial(M);
  Polynomial cp = char_polynomial(M);
  bool ss = is_squarefree(mp);
  auto mp_roots = roots_in_field(mp);
  int root_degree = 0;
  bool all_simple = true;
  for (const auto& [r, mult] : mp_roots) {
    root_degree += mult;
    if (mult != 1) all_simple = false;
  }
  bool diag = all_simple && root_degree == mp.degree();
  auto spectrum = roots_in_field(cp);
  return {std::move(mp), std::move(cp), ss, diag, std::move(spectrum)};
}

inline Subspace eigenspace(const Matrix& M, const FieldElement& lambda) {
  Matrix shifted = M - Matrix::identity(M.field(), M.rows()).scaled(lambda);
  return rank_kernel_image(shifted).kernel;
}

}  // namespace hhbv
