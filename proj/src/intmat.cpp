#include "gcover/intmat.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcover/errors.hpp"

namespace gcover {

IMatrix IMatrix::identity(long n) {
  IMatrix I(n, n);
  for (long i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IMatrix IMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  long r = long(rows.size());
  long c = r ? long(rows[0].size()) : 0;
  IMatrix M(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) M(i, j) = rows[i][j];
  return M;
}

IMatrix IMatrix::operator*(const IMatrix& o) const {
  IMatrix R(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (long j = 0; j < o.cols_; ++j) R(i, j) += v * o(k, j);
    }
  return R;
}

IMatrix IMatrix::transpose() const {
  IMatrix R(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
  return R;
}

void IMatrix::swap_cols(long i, long j) {
  if (i == j) return;
  for (long r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}
void IMatrix::negate_col(long j) {
  for (long r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}
void IMatrix::add_col_multiple(long dst, long src, const Int& c) {
  if (c == 0) return;
  for (long r = 0; r < rows_; ++r) (*this)(r, dst) += c * (*this)(r, src);
}
void IMatrix::swap_rows(long i, long j) {
  if (i == j) return;
  for (long c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}
void IMatrix::negate_row(long i) {
  for (long c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}
void IMatrix::add_row_multiple(long dst, long src, const Int& c) {
  if (c == 0) return;
  for (long j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

IMatrix IMatrix::cols_subset(const std::vector<long>& idx) const {
  IMatrix R(rows_, long(idx.size()));
  for (long j = 0; j < long(idx.size()); ++j)
    for (long i = 0; i < rows_; ++i) R(i, j) = (*this)(i, idx[j]);
  return R;
}

static Int floordiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

HnfResult hermite_normal_form(const IMatrix& M) {
  HnfResult res{M, IMatrix::identity(M.cols())};
  IMatrix& H = res.H;
  IMatrix& U = res.U;
  long col = 0;
  for (long row = 0; row < M.rows() && col < M.cols(); ++row) {
    // Euclidean sweep: gather the gcd of row entries in columns >= col.
    while (true) {
      long piv = -1;
      for (long j = col; j < H.cols(); ++j) {
        if (H(row, j) == 0) continue;
        if (piv < 0 || boost::multiprecision::abs(H(row, j)) <
                           boost::multiprecision::abs(H(row, piv)))
          piv = j;
      }
      if (piv < 0) break;  // row has no pivot here
      H.swap_cols(col, piv);
      U.swap_cols(col, piv);
      bool clean = true;
      for (long j = col + 1; j < H.cols(); ++j) {
        if (H(row, j) == 0) continue;
        Int q = H(row, j) / H(row, col);
        H.add_col_multiple(j, col, -q);
        U.add_col_multiple(j, col, -q);
        if (H(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      H.negate_col(col);
      U.negate_col(col);
    }
    for (long j = 0; j < col; ++j) {
      Int q = floordiv(H(row, j), H(row, col));
      H.add_col_multiple(j, col, -q);
      U.add_col_multiple(j, col, -q);
    }
    ++col;
  }
  return res;
}

SnfResult smith_normal_form(const IMatrix& M) {
  SnfResult res{IMatrix::identity(M.rows()), M, IMatrix::identity(M.cols())};
  IMatrix& U = res.U;
  IMatrix& D = res.D;
  IMatrix& V = res.V;
  long n = std::min(D.rows(), D.cols());
  for (long t = 0; t < n; ++t) {
    while (true) {
      long pi = -1, pj = -1;
      for (long i = t; i < D.rows(); ++i)
        for (long j = t; j < D.cols(); ++j) {
          if (D(i, j) == 0) continue;
          if (pi < 0 || boost::multiprecision::abs(D(i, j)) <
                            boost::multiprecision::abs(D(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) { pi = t; break; }
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);
      bool done = true;
      for (long i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) done = false;
      }
      for (long j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) done = false;
      }
      if (!done) continue;
      // divisibility: pivot must divide every remaining entry
      bool fixed = false;
      for (long i = t + 1; i < D.rows() && !fixed; ++i)
        for (long j = t + 1; j < D.cols() && !fixed; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            U.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

Int determinant(const IMatrix& M) {
  if (M.rows() != M.cols()) throw Error("determinant: matrix not square");
  long n = M.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IMatrix A = M;
  Int sign = 1, prev = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (A(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      A.swap_rows(k, p);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IMatrix integer_kernel(const IMatrix& M) {
  HnfResult h = hermite_normal_form(M);
  std::vector<long> zero_cols;
  for (long j = 0; j < h.H.cols(); ++j) {
    bool z = true;
    for (long i = 0; i < h.H.rows(); ++i)
      if (h.H(i, j) != 0) { z = false; break; }
    if (z) zero_cols.push_back(j);
  }
  return h.U.cols_subset(zero_cols);
}

IMatrix unimodular_inverse(const IMatrix& U) {
  // HNF of a unimodular matrix is the identity, so M * U' = I.
  HnfResult h = hermite_normal_form(U);
  if (!(h.H == IMatrix::identity(U.rows())))
    throw Error("unimodular_inverse: matrix is not unimodular");
  return h.U;
}

Int IntLattice::index() const {
  if (basis.rows() != basis.cols()) throw Error("IntLattice::index: basis not square");
  Int d = determinant(basis);
  return d < 0 ? Int(-d) : d;
}

IntLattice lattice_mod_kernel(const IMatrix& A, const Int& L) {
  long m = A.rows(), n = A.cols();
  // stack [A | -L I_m]; kernel projected to the first n coordinates
  IMatrix P(m, n + m);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) P(i, j) = A(i, j);
    P(i, n + i) = -L;
  }
  IMatrix K = integer_kernel(P);
  IMatrix B(n, K.cols());
  for (long j = 0; j < K.cols(); ++j)
    for (long i = 0; i < n; ++i) B(i, j) = K(i, j);
  HnfResult h = hermite_normal_form(B);
  std::vector<long> nz;
  for (long j = 0; j < h.H.cols(); ++j) {
    bool z = true;
    for (long i = 0; i < h.H.rows(); ++i)
      if (h.H(i, j) != 0) { z = false; break; }
    if (!z) nz.push_back(j);
  }
  IntLattice lat{h.H.cols_subset(nz)};
  if (lat.basis.cols() != n)
    throw Error("lattice_mod_kernel: kernel lattice is not full rank");
  return lat;
}

std::vector<std::vector<long>> coset_transversal(const IntLattice& lat) {
  long r = lat.basis.rows();
  std::vector<long> diag(r);
  Int count = 1;
  for (long i = 0; i < r; ++i) {
    diag[i] = long(lat.basis(i, i));
    if (diag[i] <= 0) throw Error("coset_transversal: basis not in HNF");
    count *= diag[i];
  }
  if (count > 100000) throw Error("coset_transversal: index too large");
  std::vector<std::vector<long>> reps;
  std::vector<long> cur(r, 0);
  while (true) {
    reps.push_back(cur);
    long i = r - 1;
    while (i >= 0) {
      if (++cur[i] < diag[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  if (r == 0) reps.assign(1, {});
  return reps;
}

std::vector<long> reduce_mod_lattice(const IntLattice& lat, const std::vector<long>& a) {
  long r = lat.basis.rows();
  std::vector<Int> x(a.begin(), a.end());
  // lower-triangular column HNF: reduce top row first
  for (long i = 0; i < r; ++i) {
    Int q = floordiv(x[i], lat.basis(i, i));
    if (q == 0) continue;
    for (long k = i; k < r; ++k) x[k] -= q * lat.basis(k, i);
  }
  std::vector<long> out(r);
  for (long i = 0; i < r; ++i) out[i] = long(x[i]);
  return out;
}

}  // namespace gcover
