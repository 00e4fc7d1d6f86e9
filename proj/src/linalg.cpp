#include "gcover/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gcover/errors.hpp"

namespace gcover {

double mat_scale(const CMatrix& M) {
  if (M.size() == 0) return 1.0;
  return std::max(1.0, M.cwiseAbs().maxCoeff());
}

bool approx_equal(const CMatrix& A, const CMatrix& B, const Tolerance& tol) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  if (A.size() == 0) return true;
  double scale = std::max(mat_scale(A), mat_scale(B));
  return (A - B).cwiseAbs().maxCoeff() <= tol.eps * scale;
}

bool approx_zero(const CMatrix& A, const Tolerance& tol, double scale) {
  if (A.size() == 0) return true;
  return A.cwiseAbs().maxCoeff() <= tol.eps * std::max(1.0, scale);
}

bool is_identity(const CMatrix& A, const Tolerance& tol) {
  if (A.rows() != A.cols()) return false;
  return approx_equal(A, CMatrix::Identity(A.rows(), A.cols()), tol);
}

CMatrix column_space(const CMatrix& M, const Tolerance& tol) {
  if (M.cols() == 0 || M.rows() == 0) return CMatrix(M.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0) return CMatrix(M.rows(), 0);
  long r = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.eps * sv(0)) ++r;
  return svd.matrixU().leftCols(r);
}

CMatrix kernel_space(const CMatrix& M, const Tolerance& tol) {
  long n = M.cols();
  if (n == 0) return CMatrix(0, 0);
  if (M.rows() == 0) return CMatrix::Identity(n, n);
  if (M.rows() > 4 * n) {
    // normal-equations compression keeps the SVD small; our kernels are
    // well-separated so the squared threshold is safe
    CMatrix G = M.adjoint() * M;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(G);
    const auto& ev = es.eigenvalues();
    double top = std::max(ev.maxCoeff(), 0.0);
    double cut = tol.eps * tol.eps * std::max(top, 1.0);
    long k = 0;
    while (k < n && ev(k) <= cut) ++k;
    return es.eigenvectors().leftCols(k);
  }
  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  long r = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.eps * std::max(top, 1.0)) ++r;
  return svd.matrixV().rightCols(n - r);
}

long rank_of(const CMatrix& M, const Tolerance& tol) {
  return column_space(M, tol).cols();
}

bool subspace_contains(const CMatrix& outer, const CMatrix& inner, const Tolerance& tol) {
  if (inner.cols() == 0) return true;
  CMatrix B = column_space(outer, tol);
  if (B.cols() == 0) return approx_zero(inner, tol, mat_scale(inner));
  CMatrix res = inner - B * (B.adjoint() * inner);
  return approx_zero(res, tol, mat_scale(inner));
}

bool subspace_equal(const CMatrix& A, const CMatrix& B, const Tolerance& tol) {
  return subspace_contains(A, B, tol) && subspace_contains(B, A, tol);
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix R(A.rows() * B.rows(), A.cols() * B.cols());
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j)
      R.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return R;
}

CVector vec_of(const CMatrix& A) {
  return Eigen::Map<const CVector>(A.data(), A.size());
}

CMatrix unvec(const CVector& v, long rows, long cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

std::vector<CMatrix> solve_intertwiners(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, long m, long n,
    const Tolerance& tol) {
  long k = long(pairs.size());
  CMatrix S(k * m * n, m * n);
  CMatrix Im = CMatrix::Identity(m, m);
  CMatrix In = CMatrix::Identity(n, n);
  for (long i = 0; i < k; ++i) {
    const CMatrix& A = pairs[i].first;
    const CMatrix& B = pairs[i].second;
    if (A.rows() != n || A.cols() != n || B.rows() != m || B.cols() != m)
      throw Error("solve_intertwiners: dimension mismatch");
    // vec(X A - B X) = (A^T kron I_m - I_n kron B) vec X
    S.block(i * m * n, 0, m * n, m * n) =
        kron(A.transpose(), Im) - kron(In, B);
  }
  CMatrix K = kernel_space(S, tol);
  std::vector<CMatrix> out;
  for (long j = 0; j < K.cols(); ++j) out.push_back(unvec(K.col(j), m, n));
  return out;
}

std::vector<CMatrix> solve_sylvester_family(
    const std::vector<std::pair<CMatrix, CMatrix>>& pairs, const Tolerance& tol) {
  if (pairs.empty()) throw Error("solve_sylvester_family: no equations");
  long n = pairs[0].first.rows();
  return solve_intertwiners(pairs, n, n, tol);
}

std::vector<std::pair<RootOfUnity, CMatrix>> finite_order_eigendecomposition(
    const CMatrix& T, long m, const Tolerance& tol) {
  if (T.rows() != T.cols()) throw Error("finite_order_eigendecomposition: not square");
  long n = T.rows();
  std::vector<CMatrix> powers(m);
  powers[0] = CMatrix::Identity(n, n);
  for (long j = 1; j < m; ++j) powers[j] = powers[j - 1] * T;
  CMatrix Tm = (m == 0) ? powers[0] : powers[m - 1] * T;
  double scale = mat_scale(Tm);
  if ((Tm - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol.eps * 100 * scale)
    throw NotFiniteOrderError("finite_order_eigendecomposition: T^m != I");
  std::vector<std::pair<RootOfUnity, CMatrix>> out;
  for (long k = 0; k < m; ++k) {
    CMatrix P = CMatrix::Zero(n, n);
    for (long j = 0; j < m; ++j)
      P += RootOfUnity(m, -k * j).value() * powers[j];
    P /= double(m);
    if (P.cwiseAbs().maxCoeff() > tol.eps * 100) out.emplace_back(RootOfUnity(m, k), P);
  }
  return out;
}

CMatrix operator_span(const std::vector<CMatrix>& ops, const Tolerance& tol) {
  if (ops.empty()) return CMatrix(0, 0);
  long sz = ops[0].size();
  CMatrix S(sz, long(ops.size()));
  for (long j = 0; j < long(ops.size()); ++j) S.col(j) = vec_of(ops[j]);
  return column_space(S, tol);
}

namespace {

// incremental orthonormal span of vectorized operators
struct VecSpan {
  CMatrix basis;  // n^2 x k orthonormal
  explicit VecSpan(long dim) : basis(dim, 0) {}
  bool add(const CVector& v, const Tolerance& tol) {
    CVector r = v;
    if (basis.cols() > 0) r -= basis * (basis.adjoint() * v);
    double nv = v.norm();
    if (r.norm() <= tol.eps * std::max(1.0, nv)) return false;
    r.normalize();
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = r;
    return true;
  }
};

}  // namespace

long unital_closure_rank(const std::vector<CMatrix>& ops, long n, const Tolerance& tol) {
  VecSpan span(n * n);
  std::vector<CMatrix> members;
  auto push = [&](const CMatrix& M) {
    if (span.add(vec_of(M), tol)) {
      members.push_back(M);
      return true;
    }
    return false;
  };
  push(CMatrix::Identity(n, n));
  for (const auto& op : ops) push(op);
  std::size_t frontier = 0;
  while (frontier < members.size()) {
    std::size_t end = members.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (long(span.basis.cols()) == n * n) return n * n;
        push(members[i] * members[j]);
        if (j < frontier) push(members[j] * members[i]);
      }
    }
    frontier = end;
  }
  return span.basis.cols();
}

CMatrix random_matrix(long rows, long cols, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  CMatrix M(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) M(i, j) = Cx(d(rng), d(rng));
  return M;
}

CVector random_vector(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  CVector v(n);
  for (long i = 0; i < n; ++i) v(i) = Cx(d(rng), d(rng));
  return v;
}

bool is_invertible(const CMatrix& A, const Tolerance& tol) {
  if (A.rows() != A.cols() || A.rows() == 0) return false;
  Eigen::JacobiSVD<CMatrix> svd(A);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > tol.eps * std::max(sv(0), 1.0);
}

}  // namespace gcover
