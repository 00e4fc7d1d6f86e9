#include "gcover/twisting.hpp"

#include <cmath>
#include <numbers>

#include "gcover/errors.hpp"

namespace gcover {

Rep twist(const GradedAlgebra& A, const Rep& rho, const Character& sigma) {
  if (sigma.group != A.group) throw GroupMismatchError("twist: character group mismatch");
  Rep out;
  out.module_dim = rho.module_dim;
  out.action.reserve(rho.action.size());
  for (long i = 0; i < A.dim; ++i)
    out.action.push_back(character_value(sigma, A.grading[i]).value() * rho.action[i]);
  return out;
}

std::pair<CMatrix, Cx> normalize_twist(const CMatrix& T, long m, const Tolerance& tol) {
  if (T.rows() != T.cols() || m < 1) throw Error("normalize_twist: bad input");
  long n = T.rows();
  CMatrix P = CMatrix::Identity(n, n);
  for (long k = 0; k < m; ++k) P = P * T;
  double scale = mat_scale(P);
  Cx lambda = P.trace() / double(n);
  if ((P - lambda * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol.eps * 100 * scale ||
      std::abs(lambda) <= tol.eps)
    throw NotScalarPowerError("normalize_twist: T^m is not a nonzero scalar");
  // principal m-th root
  Cx root = std::exp(std::log(lambda) / double(m));
  return {T / root, lambda};
}

long twist_intertwiner_dim(const GradedAlgebra& A, const Rep& rho, const Character& sigma1,
                           const Character& sigma2, const Tolerance& tol) {
  Rep r1 = twist(A, rho, sigma1);
  Rep r2 = twist(A, rho, sigma2);
  std::vector<std::pair<CMatrix, CMatrix>> pairs;
  for (long i = 0; i < A.dim; ++i) pairs.emplace_back(r1.action[i], r2.action[i]);
  return long(solve_sylvester_family(pairs, tol).size());
}

StabilizerResult stabilizer(const GradedAlgebra& A, const Rep& rho, const Tolerance& tol,
                            long max_enumeration) {
  if (!is_simple(rho, tol))
    throw NotSimpleError("stabilizer: module is not simple, intertwiners are not unique");
  if (A.group.order() > max_enumeration)
    throw Error("stabilizer: dual group too large for exhaustive enumeration");

  StabilizerResult res;
  auto solve_for = [&](const Character& sigma) -> std::vector<CMatrix> {
    Rep tw = twist(A, rho, sigma);
    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    for (long i = 0; i < A.dim; ++i) pairs.emplace_back(rho.action[i], tw.action[i]);
    return solve_sylvester_family(pairs, tol);
  };

  std::vector<GrpElt> stab_elts;
  for (const Character& sigma : all_characters(A.group)) {
    auto sols = solve_for(sigma);
    if (sols.size() > 1)
      throw NotSimpleError("stabilizer: intertwiner space has dimension > 1");
    if (sols.size() == 1 && is_invertible(sols[0], tol)) {
      res.elements.push_back(sigma);
      stab_elts.push_back(GrpElt{sigma.exps});
    }
  }

  // dual group as an abstract group: same invariant factors as G
  res.Hhat = subgroup_from_generators(A.group, stab_elts);
  res.ts.orders = res.Hhat.intrinsic.factors;
  for (const GrpElt& b : res.Hhat.basis) {
    Character eta{A.group, b.r};
    res.ts.gens.push_back(eta);
    auto sols = solve_for(eta);
    if (sols.size() != 1) throw Error("stabilizer: lost intertwiner for a basis element");
    auto [T, lambda] = normalize_twist(sols[0], element_order(A.group, b), tol);
    res.ts.ops.push_back(T);
    res.ts.lambdas.push_back(lambda);
  }
  res.ts.dual_sub = res.Hhat;

  // each T_j must intertwine rho with its eta_j-twist
  for (std::size_t j = 0; j < res.ts.ops.size(); ++j) {
    Rep tw = twist(A, rho, res.ts.gens[j]);
    const CMatrix& T = res.ts.ops[j];
    for (long i = 0; i < A.dim; ++i) {
      double scale = mat_scale(rho.action[i]) * mat_scale(T);
      if ((T * rho.action[i] - tw.action[i] * T).cwiseAbs().maxCoeff() > tol.eps * 100 * scale)
        throw Error("stabilizer: normalized intertwiner fails its defining relation");
    }
  }
  return res;
}

CMatrix graded_selfequivalence(const GradedAlgebra& A, const Rep& rho,
                               const std::vector<std::pair<GrpElt, CMatrix>>& decomposition,
                               const Character& sigma, const Tolerance& tol) {
  long n = rho.module_dim;
  long total = 0;
  CMatrix B(n, n);
  std::vector<Cx> scalars;
  for (const auto& [g, comp] : decomposition) {
    for (long j = 0; j < comp.cols(); ++j) {
      if (total >= n) throw Error("graded_selfequivalence: decomposition too large");
      B.col(total++) = comp.col(j);
      scalars.push_back(character_value(sigma, g).value());
    }
  }
  if (total != n || !is_invertible(B, tol))
    throw Error("graded_selfequivalence: components do not decompose the module");
  CMatrix D = CMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) D(i, i) = scalars[i];
  CMatrix theta = B * D * B.inverse();

  Rep tw = twist(A, rho, sigma);
  for (long i = 0; i < A.dim; ++i) {
    double scale = mat_scale(rho.action[i]) * mat_scale(theta);
    if ((tw.action[i] * theta - theta * rho.action[i]).cwiseAbs().maxCoeff() >
        tol.eps * 100 * scale)
      throw Error("graded_selfequivalence: theta does not intertwine the twist");
  }
  return theta;
}

Character psi_of(const GrpElt& g, const Subgroup& Hhat) {
  // g viewed as a character of the dual group via the fixed pairing
  return psi_restrict(Character{Hhat.ambient, g.r}, Hhat);
}

GradedAlgebra regrade_to_subgroup(const GradedAlgebra& A, const Subgroup& Hhat) {
  GradedAlgebra out = A;
  out.group = Hhat.intrinsic;
  out.grading.clear();
  for (const GrpElt& g : A.grading) out.grading.push_back(GrpElt{psi_of(g, Hhat).exps});
  return out;
}

}  // namespace gcover
