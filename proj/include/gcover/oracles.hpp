#pragma once

#include <vector>

#include "gcover/coverings.hpp"

namespace gcover {

struct OracleBudget {
  long max_module_dim = 6;
  long max_group_order = 8;
  long sample_count = 50;
  std::uint64_t seed = 0;
};

/// All simple submodules of M over the degree-zero subalgebra, enumerated as
/// the summands of a seeded decomposition plus sampled members of each
/// continuous family (graphs of intertwiners between isotypic copies).
std::vector<CMatrix> enumerate_simple_a0_submodules(const GradedAlgebra& A, const Rep& rho,
                                                    const OracleBudget& budget,
                                                    const Tolerance& tol);

/// Independent thinness test: hunt for a proper subcovering generated by a
/// simple module sitting inside a component.
bool brute_force_is_thin(const GradedAlgebra& A, const Rep& rho, const Covering& c,
                         const OracleBudget& budget, const Tolerance& tol);

/// All thin coverings reachable from sampled cyclic vectors, deduplicated up
/// to equivalence.
std::vector<Covering> enumerate_thin_coverings(const GradedAlgebra& A, const Rep& rho,
                                               const OracleBudget& budget,
                                               const Tolerance& tol);

/// Finite shadow of the density statement for a family of pairwise
/// non-isomorphic simple modules: the stacked image must be the full product
/// of endomorphism algebras.
bool quasifinite_density_check(const GradedAlgebra& A, const std::vector<Rep>& family,
                               const Tolerance& tol);

}  // namespace gcover
