#include "gcover/graded_algebra.hpp"

#include <Eigen/Dense>
#include <map>
#include <sstream>

#include "gcover/errors.hpp"

namespace gcover {

std::vector<long> GradedAlgebra::basis_of_degree(const GrpElt& g) const {
  std::vector<long> out;
  for (long i = 0; i < dim; ++i)
    if (grading[i] == g) out.push_back(i);
  return out;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  auto line = [&](const char* name, bool okf, double res) {
    os << (okf ? "  [ok]   " : "  [FAIL] ") << name << " (residual " << res << ")\n";
  };
  line("associativity", assoc_ok, assoc_residual);
  line("unit", unit_ok, unit_residual);
  line("homogeneity", homog_ok, homog_residual);
  if (rep_checked) line("representation", rep_ok, rep_residual);
  return os.str();
}

ValidationReport validate(const GradedAlgebra& A, const Rep* rho, const Tolerance& tol) {
  ValidationReport r;
  long n = A.dim;
  double scale = 1.0;
  for (const auto& L : A.left_mult) scale = std::max(scale, mat_scale(L));

  // (e_i e_j) e_k = e_i (e_j e_k) in coordinates: L_i L_j = sum_k (L_i)_{kj}^T ...
  // use left regular matrices: associativity <=> L_{e_i e_j} = L_i L_j
  double assoc = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CVector pij = A.product(i, j);
      CMatrix Lij = CMatrix::Zero(n, n);
      for (long k = 0; k < n; ++k)
        if (std::abs(pij(k)) > 0) Lij += pij(k) * A.left_mult[k];
      assoc = std::max(assoc, (A.left_mult[i] * A.left_mult[j] - Lij).cwiseAbs().maxCoeff());
    }
  r.assoc_residual = assoc;
  r.assoc_ok = assoc <= tol.eps * scale * scale * n;

  double unit_res = 0;
  CMatrix Lu = CMatrix::Zero(n, n);
  for (long k = 0; k < n; ++k)
    if (std::abs(A.unit(k)) > 0) Lu += A.unit(k) * A.left_mult[k];
  unit_res = (Lu - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  for (long i = 0; i < n; ++i) {
    // right identity: e_i * 1 = e_i
    CVector v = CVector::Zero(n);
    for (long k = 0; k < n; ++k)
      if (std::abs(A.unit(k)) > 0) v += A.unit(k) * A.product(i, k);
    v(i) -= 1.0;
    unit_res = std::max(unit_res, v.cwiseAbs().maxCoeff());
  }
  r.unit_residual = unit_res;
  r.unit_ok = unit_res <= tol.eps * scale * n;

  double homog = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      GrpElt sum = group_add(A.group, A.grading[i], A.grading[j]);
      CVector pij = A.product(i, j);
      for (long k = 0; k < n; ++k)
        if (!(A.grading[k] == sum)) homog = std::max(homog, std::abs(pij(k)));
    }
  r.homog_residual = homog;
  r.homog_ok = homog <= tol.eps * scale;
  // the unit must be of degree zero
  for (long k = 0; k < n; ++k)
    if (std::abs(A.unit(k)) > tol.eps && !A.grading[k].is_zero()) r.homog_ok = false;

  if (rho) {
    r.rep_checked = true;
    long m = rho->module_dim;
    double rres = 0;
    CMatrix unit_act = CMatrix::Zero(m, m);
    for (long k = 0; k < n; ++k)
      if (std::abs(A.unit(k)) > 0) unit_act += A.unit(k) * rho->action[k];
    rres = (unit_act - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        CVector pij = A.product(i, j);
        CMatrix rhs = CMatrix::Zero(m, m);
        for (long k = 0; k < n; ++k)
          if (std::abs(pij(k)) > 0) rhs += pij(k) * rho->action[k];
        rres = std::max(rres, (rho->action[i] * rho->action[j] - rhs).cwiseAbs().maxCoeff());
      }
    double rscale = 1.0;
    for (const auto& M : rho->action) rscale = std::max(rscale, mat_scale(M));
    r.rep_residual = rres;
    r.rep_ok = rres <= tol.eps * rscale * rscale * n;
  }
  return r;
}

CMatrix homogeneous_image(const GradedAlgebra& A, const Rep& rho, const GrpElt& g,
                          const Tolerance& tol) {
  std::vector<CMatrix> ops;
  for (long i : A.basis_of_degree(g)) ops.push_back(rho.action[i]);
  if (ops.empty()) return CMatrix(rho.module_dim * rho.module_dim, 0);
  return operator_span(ops, tol);
}

bool is_simple(const Rep& rho, const Tolerance& tol) {
  long m = rho.module_dim;
  if (m < 1) return false;
  // rho(A) is already an algebra, so a plain span rank suffices
  return operator_span(rho.action, tol).cols() == m * m;
}

CMatrix a0_cyclic_subspace(const GradedAlgebra& A, const Rep& rho, const CVector& v,
                           const Tolerance& tol) {
  std::vector<long> idx = A.basis_of_degree(group_zero(A.group));
  CMatrix cols(rho.module_dim, long(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) cols.col(j) = rho.action[idx[j]] * v;
  return column_space(cols, tol);
}

std::pair<GradedAlgebra, Rep> algebra_from_operators(const FinAbGroup& G,
                                                     const std::vector<CMatrix>& ops,
                                                     const std::vector<GrpElt>& degrees,
                                                     const Tolerance& tol) {
  long n = long(ops.size());
  if (n == 0 || degrees.size() != ops.size())
    throw Error("algebra_from_operators: empty basis or degree mismatch");
  long m = ops[0].rows();
  CMatrix B(m * m, n);
  for (long j = 0; j < n; ++j) B.col(j) = vec_of(ops[j]);
  Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(B);
  if (cod.rank() < n) throw Error("algebra_from_operators: operators not independent");

  auto expand = [&](const CMatrix& M) {
    CVector c = cod.solve(vec_of(M));
    if ((B * c - vec_of(M)).cwiseAbs().maxCoeff() > tol.eps * 100 * std::max(1.0, mat_scale(M)))
      throw Error("algebra_from_operators: span not closed");
    return c;
  };

  GradedAlgebra A;
  A.group = G;
  A.dim = n;
  A.grading = degrees;
  A.unit = expand(CMatrix::Identity(m, m));
  A.left_mult.assign(n, CMatrix::Zero(n, n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) A.left_mult[i].col(j) = expand(ops[i] * ops[j]);
  Rep rho{m, ops};
  return {A, rho};
}

std::pair<GradedAlgebra, Rep> envelope_from_lie(const LieAlgebra& L,
                                                const std::vector<CMatrix>& action,
                                                const Tolerance& tol) {
  long n = L.dim;
  if (long(action.size()) != n) throw Error("envelope_from_lie: action size mismatch");
  long m = action.empty() ? 0 : action[0].rows();
  double scale = 1.0;
  for (const auto& M : action) scale = std::max(scale, mat_scale(M));
  // bracket compatibility
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CMatrix lhs = action[i] * action[j] - action[j] * action[i];
      CVector br = L.bracket[i].col(j);
      CMatrix rhs = CMatrix::Zero(m, m);
      for (long k = 0; k < n; ++k)
        if (std::abs(br(k)) > 0) rhs += br(k) * action[k];
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol.eps * scale * scale * n)
        throw NotARepresentationError("envelope_from_lie: bracket check failed");
    }

  // iterated closure of degree-filtered products; each degree keeps its own span
  std::map<GrpElt, CMatrix> span_of;  // degree -> orthonormal vec'd span
  std::vector<CMatrix> basis_ops;
  std::vector<GrpElt> degs;
  auto try_add = [&](const CMatrix& M, const GrpElt& d) {
    CVector v = vec_of(M);
    auto it = span_of.find(d);
    CVector res = v;
    if (it != span_of.end() && it->second.cols() > 0)
      res -= it->second * (it->second.adjoint() * v);
    if (res.norm() <= tol.eps * std::max(1.0, v.norm())) return false;
    res.normalize();
    CMatrix& S = span_of.try_emplace(d, CMatrix(m * m, 0)).first->second;
    S.conservativeResize(Eigen::NoChange, S.cols() + 1);
    S.col(S.cols() - 1) = res;
    basis_ops.push_back(M);
    degs.push_back(d);
    return true;
  };
  try_add(CMatrix::Identity(m, m), group_zero(L.group));
  for (long i = 0; i < n; ++i) try_add(action[i], L.grading[i]);
  std::size_t frontier = 0;
  while (frontier < basis_ops.size()) {
    std::size_t end = basis_ops.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        try_add(basis_ops[i] * basis_ops[j], group_add(L.group, degs[i], degs[j]));
        if (j < frontier)
          try_add(basis_ops[j] * basis_ops[i], group_add(L.group, degs[j], degs[i]));
      }
    frontier = end;
  }
  try {
    return algebra_from_operators(L.group, basis_ops, degs, tol);
  } catch (const Error&) {
    // per-degree spans overlap: the image algebra carries no induced grading
    throw GradingInvalidError("envelope_from_lie: homogeneous components are not independent");
  }
}

}  // namespace gcover
