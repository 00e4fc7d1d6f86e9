#include "doctest.h"
#include "fixtures.hpp"
#include "gcover/multiloop.hpp"

using namespace gcover;

namespace {
const Tolerance tol;
}

TEST_CASE("untwisted multiloop of a trivial grading") {
  // trivial dual group: g (x) span{t^-1, 1, t} with all components full
  LieAlgebra L;
  L.group = FinAbGroup{{1}};
  L.dim = 2;
  L.grading = {GrpElt{{0}}, GrpElt{{0}}};
  L.bracket.assign(2, CMatrix::Zero(2, 2));
  MultiloopAlgebra ml = build_multiloop(L, {GrpElt{{0}}}, 1, tol);
  CHECK(ml.dim() == 6);  // 2 base elements x 3 monomials
  CHECK(multiloop_jacobi_residual(ml) == 0.0);
}

TEST_CASE("sl2 with the order-2 grading, window 2") {
  auto [L, act] = fixtures::sl2_graded_lie();
  MultiloopAlgebra ml = build_multiloop(L, {GrpElt{{1}}}, 2, tol);
  // eigenspace dims: even monomials carry dim 1, odd carry dim 2
  CHECK(ml.dim() == 7);
  CHECK(multiloop_jacobi_residual(ml) <= 1e-12);

  // bad grading rejected
  LieAlgebra bad = L;
  bad.grading[2] = GrpElt{{0}};
  CHECK_THROWS_AS(build_multiloop(bad, {GrpElt{{1}}}, 2, tol), GradingInvalidError);
}

TEST_CASE("abelian two-dimensional base with zero brackets") {
  LieAlgebra L;
  L.group = FinAbGroup{{2}};
  L.dim = 2;
  L.grading = {GrpElt{{0}}, GrpElt{{1}}};
  L.bracket.assign(2, CMatrix::Zero(2, 2));
  MultiloopAlgebra ml = build_multiloop(L, {GrpElt{{1}}}, 1, tol);
  CHECK(ml.dim() == 3);  // one element per monomial degree
  for (long i = 0; i < ml.dim(); ++i)
    for (long j = 0; j < ml.dim(); ++j) CHECK(ml.bracket(i, j).empty());
}

TEST_CASE("loop module over the sl2 covering") {
  auto [L, act] = fixtures::sl2_graded_lie();
  auto [A, rho] = envelope_from_lie(L, act, tol);
  // the thin coverings are the eigenline pairs of the degree-0 rotation, so
  // seed with an eigenvector of e - f
  CVector v(2);
  v << 1, Cx(0, -1);
  Covering c = covering_from_vector(A, rho, v, tol);
  REQUIRE(is_thin(A, rho, c, tol));

  MultiloopAlgebra ml = build_multiloop(L, {GrpElt{{1}}}, 2, tol);
  MultiloopModule mod = loop_module(ml, act, c, tol);
  CHECK(mod.total > 0);
  double res = loop_commutator_residual(ml, mod, act, tol);
  CHECK(res <= 1e-9);
}

TEST_CASE("loop module grading additivity and specialization") {
  auto [L, act] = fixtures::sl2_graded_lie();
  auto [A, rho] = envelope_from_lie(L, act, tol);
  CVector v(2);
  v << 1, Cx(0, -1);
  Covering c = covering_from_vector(A, rho, v, tol);
  MultiloopAlgebra ml = build_multiloop(L, {GrpElt{{1}}}, 2, tol);
  MultiloopModule mod = loop_module(ml, act, c, tol);

  for (long i = 0; i < ml.dim(); ++i) {
    CMatrix Mi = loop_action(ml, mod, act, i, tol);
    const auto& a = ml.basis[i].second;
    // support lands only in the component shifted by the monomial
    for (std::size_t ci = 0; ci < mod.components.size(); ++ci) {
      const auto& [b, B] = mod.components[ci];
      std::vector<long> sum(b.size());
      bool in_window = true;
      for (std::size_t t = 0; t < b.size(); ++t) {
        sum[t] = a[t] + b[t];
        if (std::abs(sum[t]) > ml.cutoff) in_window = false;
      }
      for (std::size_t tj = 0; tj < mod.components.size(); ++tj) {
        if (in_window && mod.components[tj].first == sum) continue;
        CMatrix blockv = Mi.block(mod.offsets[tj], mod.offsets[ci],
                                  mod.components[tj].second.cols(), B.cols());
        CHECK(approx_zero(blockv, tol, 1.0));
      }
    }
  }

  // specializing t = 1 on the zero-monomial slice recovers the base action
  long zero_ci = mod.comp_index(std::vector<long>(1, 0));
  const CMatrix& B0 = mod.components[zero_ci].second;
  for (long xb = 0; xb < L.dim; ++xb) {
    long idx = ml.index_of(xb, std::vector<long>(1, 0));
    if (idx < 0) continue;
    CMatrix Mi = loop_action(ml, mod, act, idx, tol);
    CMatrix blockv =
        Mi.block(mod.offsets[zero_ci], mod.offsets[zero_ci], B0.cols(), B0.cols());
    CMatrix expected = B0.adjoint() * act[xb] * B0;
    CHECK(approx_equal(blockv, expected, Tolerance{1e-8, 0}));
  }
}
