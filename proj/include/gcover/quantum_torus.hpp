#pragma once

#include <vector>

#include "gcover/intmat.hpp"
#include "gcover/twisting.hpp"

namespace gcover {

/// Cyclotomic quantum torus on r generators t_i of orders s_i with
/// t_i t_j = q_ij t_j t_i, q_ij = zeta_L^{E_ij}.  E is stored as an exact
/// antisymmetric integer matrix with entries in (-L/2, L/2].
struct QTorusSpec {
  long rank = 0;
  std::vector<long> orders;             // s_i
  long L = 1;                           // lcm of all q_ij orders
  std::vector<std::vector<long>> E;     // exponent matrix, E[i][j]

  long exponent_mod(long i, long j) const { return ((E[i][j] % L) + L) % L; }
  RootOfUnity q(long i, long j) const { return RootOfUnity(L, exponent_mod(i, j)); }
};

/// Check the defining invariants: zero diagonal, antisymmetry mod L, and
/// q_ij^{gcd(s_i, s_j)} = 1.
void validate_spec(const QTorusSpec& spec);

/// Extract q_ij from pairwise commutators of the twist operators and snap
/// each to the root of unity it must be.
QTorusSpec qmatrix_from_twists(const TwistSystem& ts, const Tolerance& tol);

/// gamma: Z^r -> Hom(H, C*), a |-> (eta^b |-> prod q_ij^{a_i b_j}).
struct GammaMap {
  QTorusSpec spec;
  FinAbGroup Hgroup;   // H presented on the generators: factors = orders
  IntLattice kernel;   // ker gamma, full rank in Z^r
};

GammaMap make_gamma(const QTorusSpec& spec);
Character gamma_of(const GammaMap& gm, const std::vector<long>& a);

/// Kernel of gamma; monomials with exponents in it span the centre.
IntLattice center_lattice(const QTorusSpec& spec);

struct NormalFormBlock {
  long d = 1;          // order of the block's commutation scalar
  RootOfUnity zeta;    // the scalar itself
};

struct NormalFormResult {
  IMatrix P;                              // unimodular, rows give the new generators
  std::vector<NormalFormBlock> blocks;    // orders non-increasing
  long central_rank = 0;                  // r - 2 * blocks.size()
  std::vector<std::vector<long>> transformed;  // P E P^T mod L
};

/// Unimodular congruence bringing E to consecutive 2x2 antidiagonal blocks
/// of non-increasing order followed by zeros.
NormalFormResult normal_form(const QTorusSpec& spec);
/// Same reduction with seeded random pivot tie-breaking.
NormalFormResult normal_form_randomized(const QTorusSpec& spec, std::uint64_t seed);

struct StandardModule {
  long dim = 1;
  std::vector<CMatrix> gens;  // x_1, y_1, ..., x_l, y_l, then central z's
};

/// The simple module of the normal-form torus at a central character:
/// per block the clock/shift pair scaled by the character values, tensored
/// over the blocks; central generators act by scalars.
StandardModule standard_simple_module(const std::vector<NormalFormBlock>& blocks,
                                      const std::vector<Cx>& chi_x,
                                      const std::vector<Cx>& chi_y,
                                      const std::vector<Cx>& chi_z);

struct IsotypicComponent {
  Character label;                  // h in Hom(H, C*) coordinates
  std::vector<CMatrix> embeddings;  // maps from N-coordinates into M
  long multiplicity() const { return long(embeddings.size()); }
};

/// M identified with N tensor (sum of V^h): N is a simple module of the
/// torus, each component records the label h and a basis of intertwiners
/// N^h -> M whose images tile the h-isotypic block.
struct IsotypicDecomp {
  QTorusSpec spec;
  FinAbGroup Hgroup;
  IntLattice kernel;
  std::vector<std::vector<long>> coset_reps;  // Z^r / ker gamma
  CMatrix N_basis;                            // module_dim x dim_N, orthonormal
  std::vector<CMatrix> t_on_N;                // generators restricted to N
  std::vector<IsotypicComponent> components;
  CMatrix U;                                  // change of basis, M = N (x) sum V^h
  double residual = 0;                        // conjugated-action mismatch

  long dim_N() const { return N_basis.cols(); }
  long module_dim() const { return N_basis.rows(); }
  /// N-coordinates of the ordered monomial T^a applied inside N.
  CMatrix monomial_on_N(const std::vector<long>& a) const;
};

IsotypicDecomp isotypic_decompose(const TwistSystem& ts, long module_dim,
                                  const Tolerance& tol);

/// Ordered monomial T_1^{a_1} ... T_r^{a_r}; exponents are taken mod the
/// generator orders (valid because the operators are normalized).
CMatrix twist_monomial(const TwistSystem& ts, const std::vector<long>& a);

}  // namespace gcover
