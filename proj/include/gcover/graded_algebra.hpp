#pragma once

#include <string>
#include <vector>

#include "gcover/groups.hpp"
#include "gcover/linalg.hpp"

namespace gcover {

/// Finite-dimensional associative algebra given by structure constants on a
/// homogeneous basis.  left_mult[i] is the matrix of left multiplication by
/// e_i in the basis, i.e. column j holds the coordinates of e_i * e_j.
struct GradedAlgebra {
  FinAbGroup group;
  long dim = 0;
  std::vector<CMatrix> left_mult;
  CVector unit;
  std::vector<GrpElt> grading;

  CVector product(long i, long j) const { return left_mult[i].col(j); }
  std::vector<long> basis_of_degree(const GrpElt& g) const;
};

struct Rep {
  long module_dim = 0;
  std::vector<CMatrix> action;  // one matrix per algebra basis element
};

struct ValidationReport {
  bool assoc_ok = false;
  double assoc_residual = 0;
  bool unit_ok = false;
  double unit_residual = 0;
  bool homog_ok = false;
  double homog_residual = 0;
  bool rep_checked = false;
  bool rep_ok = true;
  double rep_residual = 0;
  bool ok() const { return assoc_ok && unit_ok && homog_ok && (!rep_checked || rep_ok); }
  std::string str() const;
};

ValidationReport validate(const GradedAlgebra& A, const Rep* rho, const Tolerance& tol);

/// Orthonormal basis (vectorized) of span{ rho(a) : a basis element of degree g }.
CMatrix homogeneous_image(const GradedAlgebra& A, const Rep& rho, const GrpElt& g,
                          const Tolerance& tol);

/// Burnside / density criterion: rho(A) = End(M).
bool is_simple(const Rep& rho, const Tolerance& tol);

/// span{ rho(a) v : a of degree 0 }, as an orthonormal basis.
CMatrix a0_cyclic_subspace(const GradedAlgebra& A, const Rep& rho, const CVector& v,
                           const Tolerance& tol);

/// Lie algebra data: bracket[i] has column j = coordinates of [x_i, x_j].
struct LieAlgebra {
  FinAbGroup group;
  long dim = 0;
  std::vector<CMatrix> bracket;
  std::vector<GrpElt> grading;
};

/// Builds the associative subalgebra of End(M) generated by the identity and
/// the images of a graded Lie algebra, with the induced grading, together
/// with the tautological representation on M.
std::pair<GradedAlgebra, Rep> envelope_from_lie(const LieAlgebra& L,
                                                const std::vector<CMatrix>& action,
                                                const Tolerance& tol);

/// Builds algebra + rep from linearly independent operators with assigned
/// degrees; the span must be closed under products and contain the identity.
std::pair<GradedAlgebra, Rep> algebra_from_operators(const FinAbGroup& G,
                                                     const std::vector<CMatrix>& ops,
                                                     const std::vector<GrpElt>& degrees,
                                                     const Tolerance& tol);

}  // namespace gcover
