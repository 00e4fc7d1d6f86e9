#pragma once

#include <Eigen/Dense>
#include <random>
#include <utility>
#include <vector>

#include "gcover/roots.hpp"
#include "gcover/tolerance.hpp"

namespace gcover {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// max(1, largest entry magnitude); used to make comparisons scale-invariant.
double mat_scale(const CMatrix& M);

bool approx_equal(const CMatrix& A, const CMatrix& B, const Tolerance& tol);
bool approx_zero(const CMatrix& A, const Tolerance& tol, double scale = 1.0);
bool is_identity(const CMatrix& A, const Tolerance& tol);

/// Orthonormal basis of the column span; rank cut at eps * sigma_max.
CMatrix column_space(const CMatrix& M, const Tolerance& tol);

/// Orthonormal basis of { x : M x = 0 }.
CMatrix kernel_space(const CMatrix& M, const Tolerance& tol);

long rank_of(const CMatrix& M, const Tolerance& tol);

/// span(inner) contained in span(outer)?  Columns of either need not be orthonormal.
bool subspace_contains(const CMatrix& outer, const CMatrix& inner, const Tolerance& tol);
bool subspace_equal(const CMatrix& A, const CMatrix& B, const Tolerance& tol);

CMatrix kron(const CMatrix& A, const CMatrix& B);
CVector vec_of(const CMatrix& A);
CMatrix unvec(const CVector& v, long rows, long cols);

/// Basis of { T (n x n) : T A_k = B_k T for all k }.
std::vector<CMatrix> solve_sylvester_family(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, const Tolerance& tol);

/// Rectangular version: basis of { X (m x n) : X A_k = B_k X },
/// A_k n x n, B_k m x m.
std::vector<CMatrix> solve_intertwiners(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, long m, long n,
    const Tolerance& tol);

/// Spectral projections of a finite-order operator (T^m = 1) obtained by
/// character averaging: P_k = (1/m) sum_j zeta_m^{-jk} T^j.  Only the nonzero
/// projections are returned, labeled by their eigenvalue.
std::vector<std::pair<RootOfUnity, CMatrix>> finite_order_eigendecomposition(
    const CMatrix& T, long m, const Tolerance& tol);

/// Orthonormal basis (as vectorized columns) of the span of a family of
/// operators on the same space.
CMatrix operator_span(const std::vector<CMatrix>& ops, const Tolerance& tol);

/// Dimension of the unital algebra generated by the given operators.
long unital_closure_rank(const std::vector<CMatrix>& ops, long n, const Tolerance& tol);

CMatrix random_matrix(long rows, long cols, std::mt19937_64& rng);
CVector random_vector(long n, std::mt19937_64& rng);

/// Invertibility test via smallest singular value.
bool is_invertible(const CMatrix& A, const Tolerance& tol);

}  // namespace gcover
