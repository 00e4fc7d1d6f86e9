#pragma once

// Shared desk-scale instances used across the test suites.

#include <utility>
#include <vector>

#include "gcover/graded_algebra.hpp"
#include "gcover/groups.hpp"
#include "gcover/linalg.hpp"

namespace fixtures {

using namespace gcover;

inline CMatrix clock_matrix(long n) {
  CMatrix E = CMatrix::Zero(n, n);
  for (long i = 0; i < n; ++i) E(i, i) = RootOfUnity(n, i).value();
  return E;
}

inline CMatrix shift_matrix(long n) {
  CMatrix F = CMatrix::Zero(n, n);
  for (long j = 0; j < n; ++j) F((j + 1) % n, j) = 1.0;
  return F;
}

/// M_n with the clock-and-shift grading by Z_n x Z_n and the natural module.
inline std::pair<GradedAlgebra, Rep> clock_shift_instance(long n, const Tolerance& tol) {
  FinAbGroup G{{n, n}};
  CMatrix E = clock_matrix(n), F = shift_matrix(n);
  std::vector<CMatrix> ops;
  std::vector<GrpElt> degs;
  for (long a = 0; a < n; ++a) {
    CMatrix Ea = CMatrix::Identity(n, n);
    for (long k = 0; k < a; ++k) Ea = Ea * E;
    for (long b = 0; b < n; ++b) {
      CMatrix Fb = CMatrix::Identity(n, n);
      for (long k = 0; k < b; ++k) Fb = Fb * F;
      ops.push_back(Ea * Fb);
      degs.push_back(GrpElt{{a, b}});
    }
  }
  return algebra_from_operators(G, ops, degs, tol);
}

inline std::pair<GradedAlgebra, Rep> pauli_instance(const Tolerance& tol) {
  return clock_shift_instance(2, tol);
}

/// M_2 graded by Z_2 into diagonal/antidiagonal parts (conjugation grading).
inline std::pair<GradedAlgebra, Rep> cyclic_instance(const Tolerance& tol) {
  FinAbGroup G{{2}};
  CMatrix I = CMatrix::Identity(2, 2);
  CMatrix E = clock_matrix(2), F = shift_matrix(2);
  std::vector<CMatrix> ops = {I, E, F, E * F};
  std::vector<GrpElt> degs = {GrpElt{{0}}, GrpElt{{0}}, GrpElt{{1}}, GrpElt{{1}}};
  return algebra_from_operators(G, ops, degs, tol);
}

/// Group algebra C[G] with the tautological grading and a character module.
inline std::pair<GradedAlgebra, Rep> group_algebra_instance(const FinAbGroup& G,
                                                            const Character& chi) {
  auto elts = all_elements(G);
  long n = long(elts.size());
  GradedAlgebra A;
  A.group = G;
  A.dim = n;
  A.grading = elts;
  A.unit = CVector::Zero(n);
  A.unit(0) = 1.0;  // elts[0] is the identity
  A.left_mult.assign(n, CMatrix::Zero(n, n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      GrpElt s = group_add(G, elts[i], elts[j]);
      for (long k = 0; k < n; ++k)
        if (elts[k] == s) A.left_mult[i](k, j) = 1.0;
    }
  Rep rho;
  rho.module_dim = 1;
  for (long i = 0; i < n; ++i) {
    CMatrix m(1, 1);
    m(0, 0) = character_value(chi, elts[i]).value();
    rho.action.push_back(m);
  }
  return {A, rho};
}

/// sl_2 with the order-2 automorphism grading: degree 0 = span{e-f},
/// degree 1 = span{e+f, h}; natural module C^2.
inline std::pair<LieAlgebra, std::vector<CMatrix>> sl2_graded_lie() {
  LieAlgebra L;
  L.group = FinAbGroup{{2}};
  L.dim = 3;
  L.grading = {GrpElt{{0}}, GrpElt{{1}}, GrpElt{{1}}};
  // u1 = e - f, u2 = e + f, u3 = h
  // [u1,u2] = 2 u3, [u1,u3] = -2 u2, [u2,u3] = -2 u1
  L.bracket.assign(3, CMatrix::Zero(3, 3));
  auto set = [&](long i, long j, long k, double c) {
    L.bracket[i](k, j) = c;
    L.bracket[j](k, i) = -c;
  };
  set(0, 1, 2, 2.0);
  set(0, 2, 1, -2.0);
  set(1, 2, 0, -2.0);
  CMatrix u1(2, 2), u2(2, 2), u3(2, 2);
  u1 << 0, 1, -1, 0;
  u2 << 0, 1, 1, 0;
  u3 << 1, 0, 0, -1;
  return {L, {u1, u2, u3}};
}

/// C[Z_2] tensor M_2 graded by Z_2 x Z_2; the module C^2 ignores the group
/// algebra factor, so only half of the dual group stabilizes it.
inline std::pair<GradedAlgebra, Rep> mixed_instance(const Tolerance& tol) {
  FinAbGroup G{{2, 2}};
  CMatrix I = CMatrix::Identity(2, 2);
  CMatrix E = clock_matrix(2), F = shift_matrix(2);
  // basis x^a (x) D with D in {I, E} degree (a,0), {F, EF} degree (a,1)
  std::vector<CMatrix> mats = {I, E, F, E * F};
  std::vector<long> mdeg = {0, 0, 1, 1};
  GradedAlgebra A;
  A.group = G;
  A.dim = 8;
  Rep rho;
  rho.module_dim = 2;
  std::vector<CMatrix> ops;
  for (long a = 0; a < 2; ++a)
    for (long d = 0; d < 4; ++d) {
      A.grading.push_back(GrpElt{{a, mdeg[d]}});
      rho.action.push_back(mats[d]);
      (void)tol;
    }
  // structure constants: (x^a (x) D)(x^b (x) D') = x^{a+b} (x) DD'
  A.left_mult.assign(8, CMatrix::Zero(8, 8));
  CMatrix basis_flat(4, 4);
  for (long d = 0; d < 4; ++d) basis_flat.col(d) = vec_of(mats[d]);
  Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(basis_flat);
  for (long a = 0; a < 2; ++a)
    for (long d = 0; d < 4; ++d)
      for (long b = 0; b < 2; ++b)
        for (long e = 0; e < 4; ++e) {
          CVector coeff = cod.solve(vec_of(CMatrix(mats[d] * mats[e])));
          long i = a * 4 + d, j = b * 4 + e;
          long ab = (a + b) % 2;
          for (long f = 0; f < 4; ++f) A.left_mult[i](ab * 4 + f, j) = coeff(f);
        }
  A.unit = CVector::Zero(8);
  A.unit(0) = 1.0;
  return {A, rho};
}

}  // namespace fixtures
