#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gcover {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries.
class IMatrix {
 public:
  IMatrix() = default;
  IMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IMatrix identity(long n);
  static IMatrix zero(long rows, long cols) { return IMatrix(rows, cols); }
  static IMatrix from_rows(const std::vector<std::vector<long>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Int& operator()(long i, long j) { return a_[i * cols_ + j]; }
  const Int& operator()(long i, long j) const { return a_[i * cols_ + j]; }

  IMatrix operator*(const IMatrix& o) const;
  IMatrix transpose() const;
  bool operator==(const IMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  void swap_cols(long i, long j);
  void negate_col(long j);
  void add_col_multiple(long dst, long src, const Int& c);  // col dst += c * col src
  void swap_rows(long i, long j);
  void negate_row(long i);
  void add_row_multiple(long dst, long src, const Int& c);

  IMatrix cols_subset(const std::vector<long>& idx) const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct HnfResult {
  IMatrix H;  // H = M * U, column Hermite normal form
  IMatrix U;  // unimodular
};

/// Column Hermite normal form: pivots positive and topmost, zero entries to
/// the right of each pivot in its row, entries to the left reduced into
/// [0, pivot); zero columns collected at the right.
HnfResult hermite_normal_form(const IMatrix& M);

struct SnfResult {
  IMatrix U, D, V;  // U * M * V = D, diagonal with d1 | d2 | ...
};

SnfResult smith_normal_form(const IMatrix& M);

Int determinant(const IMatrix& M);

/// Columns form a basis of { x : M x = 0 }.
IMatrix integer_kernel(const IMatrix& M);

/// Unimodular inverse (only valid when |det| = 1).
IMatrix unimodular_inverse(const IMatrix& U);

/// Full-column-rank sublattice of Z^r stored via a column-HNF basis.
struct IntLattice {
  IMatrix basis;  // r x r when full rank
  Int index() const;  // |Z^r : lattice| = product of pivots
};

/// { x in Z^n : A x = 0 mod L }, always full rank (contains L Z^n).
IntLattice lattice_mod_kernel(const IMatrix& A, const Int& L);

/// Coset representatives of Z^r / lattice: the box transversal of the
/// column-HNF basis diagonal.
std::vector<std::vector<long>> coset_transversal(const IntLattice& lat);

/// Reduce a into the box transversal modulo the lattice.
std::vector<long> reduce_mod_lattice(const IntLattice& lat, const std::vector<long>& a);

}  // namespace gcover
