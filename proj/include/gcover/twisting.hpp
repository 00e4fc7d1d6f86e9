#pragma once

#include <optional>
#include <vector>

#include "gcover/graded_algebra.hpp"

namespace gcover {

/// Independent generators eta_1..eta_r of a stabilizer subgroup of the dual
/// group together with their normalized intertwiners T_j (T_j^{s_j} = 1).
/// Generators are always independent: the group they generate is the direct
/// product of the cyclic groups of orders s_j.
struct TwistSystem {
  std::vector<long> orders;          // s_j
  std::vector<CMatrix> ops;          // normalized T_j
  std::vector<Cx> lambdas;           // scalar absorbed by each normalization
  std::vector<Character> gens;       // eta_j as characters of the grading group
  std::optional<Subgroup> dual_sub;  // the subgroup they generate inside the dual

  long rank() const { return long(orders.size()); }
  long module_dim() const { return ops.empty() ? 0 : ops[0].rows(); }
};

/// Twist of a representation by a dual-group character acting as the
/// automorphism scaling degree-g elements by sigma(g).
Rep twist(const GradedAlgebra& A, const Rep& rho, const Character& sigma);

/// Rescale T so that T^m = 1; requires T^m to be a nonzero scalar.
/// Returns the rescaled operator and the scalar that was removed.
std::pair<CMatrix, Cx> normalize_twist(const CMatrix& T, long m, const Tolerance& tol);

struct StabilizerResult {
  Subgroup Hhat;                     // inside the dual group (same invariant factors as G)
  TwistSystem ts;
  std::vector<Character> elements;   // all stabilizing characters
};

/// The subgroup of dual characters sigma with M^sigma isomorphic to M,
/// found by exhaustive intertwiner solves; requires rho simple so that each
/// intertwiner space is at most one-dimensional.
StabilizerResult stabilizer(const GradedAlgebra& A, const Rep& rho, const Tolerance& tol,
                            long max_enumeration = 256);

/// Dimension of the intertwiner space Hom(M^{sigma1}, M^{sigma2}); an
/// invertible element exists iff the dimension is 1 and rho is simple.
long twist_intertwiner_dim(const GradedAlgebra& A, const Rep& rho, const Character& sigma1,
                           const Character& sigma2, const Tolerance& tol);

/// For a module carrying a direct G-graded decomposition, the explicit
/// self-isomorphism between M and M^sigma that scales the degree-g component
/// by sigma(g); the intertwining property is verified before returning.
CMatrix graded_selfequivalence(const GradedAlgebra& A, const Rep& rho,
                               const std::vector<std::pair<GrpElt, CMatrix>>& decomposition,
                               const Character& sigma, const Tolerance& tol);

/// Regrade a G-graded algebra by the dual of a stabilizer subgroup: each
/// basis degree g is replaced by its restriction to the subgroup.
GradedAlgebra regrade_to_subgroup(const GradedAlgebra& A, const Subgroup& Hhat);

/// psi applied to a grading-group element: the character of the subgroup
/// obtained by evaluating its elements at g.
Character psi_of(const GrpElt& g, const Subgroup& Hhat);

}  // namespace gcover
