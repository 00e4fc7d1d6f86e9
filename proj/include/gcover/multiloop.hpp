#pragma once

#include <vector>

#include "gcover/coverings.hpp"

namespace gcover {

/// Truncated multiloop Lie algebra: pairs (base element of degree abar, t^a)
/// for |a|_inf <= cutoff, with the component at a restricted to the base
/// elements of degree matching the image of a in the grading group.
struct MultiloopAlgebra {
  LieAlgebra base;
  std::vector<GrpElt> epi;  // images of the N standard generators of Z^N
  long loops = 0;           // N
  long cutoff = 0;
  std::vector<std::pair<long, std::vector<long>>> basis;  // (base index, monomial)

  long dim() const { return long(basis.size()); }
  GrpElt degree_of_monomial(const std::vector<long>& a) const;
  long index_of(long base_idx, const std::vector<long>& a) const;
  /// Coordinates of [basis_i, basis_j]; empty when the bracket truncates.
  std::vector<std::pair<long, Cx>> bracket(long i, long j) const;
};

MultiloopAlgebra build_multiloop(const LieAlgebra& L, const std::vector<GrpElt>& epi,
                                 long cutoff, const Tolerance& tol);

/// max residual of antisymmetry and the Jacobi identity over all in-window
/// triples (brackets leaving the window are not required to close).
double multiloop_jacobi_residual(const MultiloopAlgebra& ml);

/// Loop module attached to a covering of a module of the base Lie algebra:
/// components M_abar (x) t^a inside the truncation window.
struct MultiloopModule {
  const MultiloopAlgebra* algebra = nullptr;
  std::vector<std::pair<std::vector<long>, CMatrix>> components;  // (monomial, basis)
  std::vector<long> offsets;
  long total = 0;

  long comp_index(const std::vector<long>& a) const;
};

/// base_action: matrices of the base Lie algebra on the covered module.
MultiloopModule loop_module(const MultiloopAlgebra& ml,
                            const std::vector<CMatrix>& base_action, const Covering& c,
                            const Tolerance& tol);

/// Sparse action of a multiloop basis element on the loop module.
CMatrix loop_action(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                    const std::vector<CMatrix>& base_action, long ml_index,
                    const Tolerance& tol);

/// max residual of action([x,y]) = [action(x), action(y)] over in-window pairs.
double loop_commutator_residual(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                                const std::vector<CMatrix>& base_action,
                                const Tolerance& tol);

}  // namespace gcover
