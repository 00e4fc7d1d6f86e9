#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcover/quantum_torus.hpp"

namespace gcover {

/// Family of subspaces of a module indexed by the grading group; every group
/// element owns an entry (possibly of dimension zero).
struct Covering {
  FinAbGroup group;
  std::map<GrpElt, CMatrix> comps;

  const CMatrix& at(const GrpElt& g) const { return comps.at(g); }
  long dim_at(const GrpElt& g) const { return comps.at(g).cols(); }
};

/// components A_g v for a cyclic vector v.
Covering covering_from_vector(const GradedAlgebra& A, const Rep& rho, const CVector& v,
                              const Tolerance& tol);

bool is_covering(const GradedAlgebra& A, const Rep& rho, const Covering& c,
                 const Tolerance& tol);

/// Minimality test: every nonzero component is simple over the degree-zero
/// subalgebra and the homogeneous actions map components onto components.
bool is_thin(const GradedAlgebra& A, const Rep& rho, const Covering& c, const Tolerance& tol);

/// First shift h with c1[g] = c2[g+h] for all g, if any.
std::optional<GrpElt> equivalent(const Covering& c1, const Covering& c2, const Tolerance& tol);

/// Thin covering of the module underlying an isotypic decomposition,
/// attached to a nonzero vector n of N (in N-coordinates):
/// M_h = sum_a T^a(n) (x) V^{h + gamma(a)} over coset representatives.
Covering thin_h_covering(const IsotypicDecomp& dec, const GammaMap& gamma, const CVector& n,
                         const Tolerance& tol);

/// Pull an H-covering back along psi to a G-covering: component at g is the
/// H-component at psi(g).
Covering thin_g_covering(const Covering& hcov, const FinAbGroup& G, const Subgroup& Hhat);

/// External direct sum of covering components with block actions.
struct GradedModule {
  FinAbGroup group;
  std::vector<GrpElt> elts;
  std::vector<long> dims;
  std::vector<long> offsets;
  long total = 0;
  std::vector<CMatrix> comp_bases;            // component bases inside the source module
  std::vector<std::vector<CMatrix>> blocks;   // blocks[k][gi]: component gi -> gi + deg(e_k)

  long index_of(const GrpElt& g) const;
  CMatrix full_action(const GradedAlgebra& A, long k) const;
};

GradedModule graded_module_from_covering(const GradedAlgebra& A, const Rep& rho,
                                         const Covering& c, const Tolerance& tol);

/// Burnside test for the enlarged operator algebra (block actions plus
/// component projections): graded submodules are exactly its invariant
/// subspaces.
bool is_graded_simple(const GradedAlgebra& A, const GradedModule& gm, const Tolerance& tol);

/// First shift admitting an invertible graded intertwiner, with the map.
std::optional<std::pair<GrpElt, CMatrix>> graded_iso_up_to_shift(const GradedAlgebra& A,
                                                                 const GradedModule& gm1,
                                                                 const GradedModule& gm2,
                                                                 const Tolerance& tol);

struct ExtractedCovering {
  Rep rep;        // simple quotient of the underlying module
  Covering cov;   // images of the graded components
  CMatrix phi;    // quotient map from the graded module onto the simple module
};

/// Project a graded module onto a simple ungraded quotient (seeded commutant
/// splitting) and take the images of its components; the result is verified
/// to be a thin covering reproducing the input up to graded isomorphism.
ExtractedCovering covering_from_graded(const GradedAlgebra& A, const GradedModule& gm,
                                       const Tolerance& tol);

struct UniciteReport {
  struct Entry {
    GrpElt g;
    bool unit_in_product = false;
    double unit_residual = 0;
    bool component_irreducible = false;
  };
  std::vector<Entry> entries;
  bool ok() const {
    for (const auto& e : entries)
      if (!e.unit_in_product || !e.component_irreducible) return false;
    return true;
  }
};

/// Checks 1 in A_g A_{-g} and the irreducibility of each A_g over A_0 under
/// left multiplication.
UniciteReport check_unicite_hypotheses(const GradedAlgebra& A, const Tolerance& tol);

/// Invertible intertwiner between two representations of the same algebra,
/// if one exists (unique up to scale when both are simple).
std::optional<CMatrix> module_intertwiner(const Rep& rho1, const Rep& rho2,
                                          const Tolerance& tol);

/// Move a covering along a module isomorphism.
Covering transport_covering(const Covering& c, const CMatrix& alpha, const Tolerance& tol);

}  // namespace gcover
