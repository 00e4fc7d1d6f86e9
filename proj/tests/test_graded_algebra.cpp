#include "doctest.h"
#include "fixtures.hpp"
#include "gcover/graded_algebra.hpp"

using namespace gcover;

namespace {
const Tolerance tol;
}

TEST_CASE("validate passes on library-built algebras") {
  auto [pauli, prho] = fixtures::pauli_instance(tol);
  CHECK(validate(pauli, &prho, tol).ok());

  auto [ga, grho] = fixtures::group_algebra_instance(FinAbGroup{{2}},
                                                     trivial_character(FinAbGroup{{2}}));
  CHECK(validate(ga, &grho, tol).ok());

  auto [cyc, crho] = fixtures::cyclic_instance(tol);
  CHECK(validate(cyc, &crho, tol).ok());

  auto [mixed, mrho] = fixtures::mixed_instance(tol);
  CHECK(validate(mixed, &mrho, tol).ok());
}

TEST_CASE("validate flags a broken grading") {
  auto [pauli, prho] = fixtures::pauli_instance(tol);
  // declare E of degree (0,0): the product E*F now has mixed degree support
  pauli.grading[2] = GrpElt{{0, 0}};
  ValidationReport r = validate(pauli, &prho, tol);
  CHECK(r.assoc_ok);
  CHECK(!r.homog_ok);
}

TEST_CASE("homogeneous image dimensions") {
  auto [pauli, rho] = fixtures::pauli_instance(tol);
  CHECK(homogeneous_image(pauli, rho, GrpElt{{0, 0}}, tol).cols() == 1);
  CHECK(homogeneous_image(pauli, rho, GrpElt{{1, 0}}, tol).cols() == 1);
  CMatrix E = fixtures::clock_matrix(2);
  CMatrix img = homogeneous_image(pauli, rho, GrpElt{{1, 0}}, tol);
  CHECK(subspace_equal(img, CMatrix(vec_of(E)), tol));

  // degree outside the grading support
  FinAbGroup Z2{{2}};
  auto [triv, trho] = algebra_from_operators(Z2, {CMatrix::Identity(1, 1)},
                                             {group_zero(Z2)}, tol);
  CHECK(homogeneous_image(triv, trho, GrpElt{{1}}, tol).cols() == 0);
}

TEST_CASE("simplicity via density rank") {
  auto [pauli, rho] = fixtures::pauli_instance(tol);
  CHECK(is_simple(rho, tol));

  // scalars acting on C^2
  Rep scalars;
  scalars.module_dim = 2;
  scalars.action = {CMatrix::Identity(2, 2)};
  CHECK(!is_simple(scalars, tol));

  // direct sum of two copies of the natural M_2-module: image dim 4 != 16
  Rep doubled;
  doubled.module_dim = 4;
  for (const CMatrix& a : rho.action) {
    CMatrix M = CMatrix::Zero(4, 4);
    M.block(0, 0, 2, 2) = a;
    M.block(2, 2, 2, 2) = a;
    doubled.action.push_back(M);
  }
  CHECK(!is_simple(doubled, tol));
}

TEST_CASE("a0 cyclic subspace") {
  auto [pauli, rho] = fixtures::pauli_instance(tol);
  CVector v = CVector::Zero(2);
  CHECK(a0_cyclic_subspace(pauli, rho, v, tol).cols() == 0);
  v(0) = 1.0;
  CMatrix S = a0_cyclic_subspace(pauli, rho, v, tol);
  CMatrix e1(2, 1);
  e1 << 1, 0;
  CHECK(subspace_equal(S, e1, tol));
}

TEST_CASE("a0 cyclic subspace matches brute-force span on a block instance") {
  // A_0 = M_2 + M_2 block diagonal inside M_4, A_1 = antidiagonal blocks
  FinAbGroup Z2{{2}};
  std::vector<CMatrix> ops;
  std::vector<GrpElt> degs;
  for (int blk = 0; blk < 2; ++blk)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CMatrix M = CMatrix::Zero(4, 4);
        M(blk * 2 + i, blk * 2 + j) = 1.0;
        ops.push_back(M);
        degs.push_back(GrpElt{{0}});
      }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CMatrix M = CMatrix::Zero(4, 4);
      M(i, 2 + j) = 1.0;
      ops.push_back(M);
      degs.push_back(GrpElt{{1}});
      CMatrix N = CMatrix::Zero(4, 4);
      N(2 + i, j) = 1.0;
      ops.push_back(N);
      degs.push_back(GrpElt{{1}});
    }
  auto [A, rho] = algebra_from_operators(Z2, ops, degs, tol);
  std::mt19937_64 rng(11);
  CVector v = random_vector(4, rng);
  CMatrix S = a0_cyclic_subspace(A, rho, v, tol);
  CMatrix brute(4, 8);
  long c = 0;
  for (long i = 0; i < A.dim; ++i)
    if (A.grading[i].is_zero()) brute.col(c++) = rho.action[i] * v;
  CHECK(subspace_equal(S, column_space(brute, tol), tol));
  CHECK(S.cols() == 4);
}

TEST_CASE("envelope of an abelian one-dimensional Lie algebra") {
  LieAlgebra L;
  L.group = FinAbGroup{{2}};
  L.dim = 1;
  L.grading = {GrpElt{{1}}};
  L.bracket = {CMatrix::Zero(1, 1)};
  CMatrix T(2, 2);
  T << 1, 0, 0, -1;
  auto [A, rho] = envelope_from_lie(L, {T}, tol);
  CHECK(A.dim == 2);
  CHECK(validate(A, &rho, tol).ok());
  CHECK(A.basis_of_degree(GrpElt{{0}}).size() == 1);
  CHECK(A.basis_of_degree(GrpElt{{1}}).size() == 1);
}

TEST_CASE("envelope of the zero Lie algebra is the scalars") {
  LieAlgebra L;
  L.group = FinAbGroup{{2}};
  L.dim = 1;
  L.grading = {GrpElt{{0}}};
  L.bracket = {CMatrix::Zero(1, 1)};
  auto [A, rho] = envelope_from_lie(L, {CMatrix::Zero(3, 3)}, tol);
  CHECK(A.dim == 1);
  CHECK(is_identity(rho.action[0], tol));
}

TEST_CASE("envelope of graded sl2 on the natural module") {
  auto [L, act] = fixtures::sl2_graded_lie();
  auto [A, rho] = envelope_from_lie(L, act, tol);
  CHECK(A.dim == 4);
  CHECK(A.basis_of_degree(GrpElt{{0}}).size() == 2);
  CHECK(A.basis_of_degree(GrpElt{{1}}).size() == 2);
  CHECK(validate(A, &rho, tol).ok());
  CHECK(is_simple(rho, tol));

  // broken bracket data must be rejected
  LieAlgebra bad = L;
  bad.bracket[0](2, 1) = 5.0;
  CHECK_THROWS_AS(envelope_from_lie(bad, act, tol), NotARepresentationError);
}

TEST_CASE("graded density shadow on simple modules") {
  // when rho is simple the homogeneous images tile End(M)
  auto [pauli, rho] = fixtures::pauli_instance(tol);
  long total = 0;
  for (const GrpElt& g : all_elements(pauli.group))
    total += homogeneous_image(pauli, rho, g, tol).cols();
  CHECK(total == rho.module_dim * rho.module_dim);
}
