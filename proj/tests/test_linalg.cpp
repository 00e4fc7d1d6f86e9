#include <complex>

#include "doctest.h"
#include "gcover/linalg.hpp"

using namespace gcover;

namespace {
const Tolerance tol;

// independent dense kernel via Gaussian elimination, used as the oracle for
// the stacked intertwiner systems
std::vector<CVector> gauss_kernel(CMatrix A, double eps = 1e-9) {
  long m = A.rows(), n = A.cols();
  std::vector<long> pivot_col;
  long row = 0;
  for (long col = 0; col < n && row < m; ++col) {
    long p = -1;
    double best = eps;
    for (long i = row; i < m; ++i)
      if (std::abs(A(i, col)) > best) { best = std::abs(A(i, col)); p = i; }
    if (p < 0) continue;
    A.row(row).swap(A.row(p));
    A.row(row) /= A(row, col);
    for (long i = 0; i < m; ++i)
      if (i != row && std::abs(A(i, col)) > 0) A.row(i) -= A(i, col) * A.row(row);
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(n, false);
  for (long c : pivot_col) is_piv[c] = true;
  std::vector<CVector> basis;
  for (long c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    CVector v = CVector::Zero(n);
    v(c) = 1.0;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v(pivot_col[k]) = -A(k, c);
    basis.push_back(v);
  }
  return basis;
}
}  // namespace

TEST_CASE("snap root of unity") {
  CHECK(snap_root_of_unity(Cx(1.0, 0.0), 4, tol) == RootOfUnity(1, 0));
  CHECK(snap_root_of_unity(Cx(-1.0, 1e-12), 2, tol) == RootOfUnity(2, 1));
  // nearest candidate to exp(2 pi i / 6), evaluated independently
  Cx z(0.5, std::sqrt(3.0) / 2.0);
  CHECK(snap_root_of_unity(z, 6, tol) == RootOfUnity(6, 1));
  CHECK_THROWS_AS(snap_root_of_unity(Cx(0.5, 0.5), 4, tol), NoSnapError);
  Tolerance fat{0.8, 0};  // eps too large for order 8: zeta_8 is 0.765 away from 1
  CHECK_THROWS_AS(snap_root_of_unity(Cx(1.0, 0.0), 8, fat), AmbiguousSnapError);
}

TEST_CASE("roots of unity arithmetic") {
  RootOfUnity a(6, 2);  // reduces to zeta_3
  CHECK(a.order == 3);
  CHECK(a.exponent == 1);
  RootOfUnity b(4, 3);
  RootOfUnity c = a * b;
  CHECK(c.order == 12);
  CHECK(std::abs(c.value() - a.value() * b.value()) < 1e-12);
  CHECK((a * a.inverse()).is_one());
  // snap o evaluate = identity
  for (long m = 1; m <= 12; ++m)
    for (long k = 0; k < m; ++k) {
      RootOfUnity r(m, k);
      CHECK(snap_root_of_unity(r.value(), 12, tol) == r);
    }
}

TEST_CASE("column space") {
  CHECK(column_space(CMatrix::Zero(3, 2), tol).cols() == 0);
  CHECK(column_space(CMatrix::Identity(3, 3), tol).cols() == 3);
  CMatrix M(2, 2);
  M << 1, 2, 2, 4;  // det = 0, rank 1
  CMatrix B = column_space(M, tol);
  CHECK(B.cols() == 1);
  CMatrix dir(2, 1);
  dir << 1, 2;
  CHECK(subspace_equal(B, dir, tol));
}

TEST_CASE("sylvester family solver") {
  CMatrix I2 = CMatrix::Identity(2, 2);
  auto sols = solve_sylvester_family({{I2, I2}}, tol);
  CHECK(sols.size() == 4);

  CMatrix E(2, 2), F(2, 2);
  E << 1, 0, 0, -1;
  F << 0, 1, 1, 0;
  // pairs generating all of M_2 with B_k = A_k: commutant is the scalars
  auto schur = solve_sylvester_family({{E, E}, {F, F}}, tol);
  REQUIRE(schur.size() == 1);
  CHECK(subspace_equal(CMatrix(vec_of(schur[0])), CMatrix(vec_of(I2)), tol));

  auto none = solve_sylvester_family({{I2, CMatrix(-I2)}}, tol);
  CHECK(none.empty());
}

TEST_CASE("sylvester solver agrees with hand-rolled kernel") {
  CMatrix E(2, 2), F(2, 2);
  E << 1, 0, 0, -1;
  F << 0, 1, 1, 0;
  std::vector<std::pair<CMatrix, CMatrix>> pairs = {{E, E}, {F, F}};
  // stack the 4k x 4 system by hand
  CMatrix S(8, 4);
  for (int k = 0; k < 2; ++k) {
    const CMatrix& A = pairs[k].first;
    const CMatrix& B = pairs[k].second;
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        long eq = k * 4 + q * 2 + p;  // entry (p,q) of T*A - B*T, column-major
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            Cx coeff = 0.0;
            if (i == p) coeff += A(j, q);
            if (j == q) coeff -= B(p, i);
            S(eq, j * 2 + i) += coeff;
          }
      }
  }
  auto oracle = gauss_kernel(S);
  auto sols = solve_sylvester_family(pairs, tol);
  CHECK(oracle.size() == sols.size());
}

TEST_CASE("finite order eigendecomposition") {
  CMatrix I1 = CMatrix::Identity(1, 1);
  auto dec = finite_order_eigendecomposition(I1, 1, tol);
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first.is_one());

  CMatrix D(2, 2);
  D << 1, 0, 0, -1;
  dec = finite_order_eigendecomposition(D, 2, tol);
  REQUIRE(dec.size() == 2);
  CMatrix P0(2, 2), P1(2, 2);
  P0 << 1, 0, 0, 0;
  P1 << 0, 0, 0, 1;
  CHECK(approx_equal(dec[0].second, P0, tol));
  CHECK(approx_equal(dec[1].second, P1, tol));

  CMatrix F(2, 2);
  F << 0, 1, 1, 0;
  dec = finite_order_eigendecomposition(F, 2, tol);
  REQUIRE(dec.size() == 2);
  CMatrix plus(2, 1), minus(2, 1);
  plus << 1, 1;
  minus << 1, -1;
  CHECK(subspace_equal(column_space(dec[0].second, tol), plus, tol));
  CHECK(subspace_equal(column_space(dec[1].second, tol), minus, tol));

  CHECK_THROWS_AS(finite_order_eigendecomposition(2.0 * I1, 3, tol), NotFiniteOrderError);
}

TEST_CASE("eigenprojection identities hold for random finite-order operators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    long m = 2 + trial % 3;
    long n = 3;
    // conjugate a root-of-unity diagonal by a random invertible matrix
    CMatrix Q = random_matrix(n, n, rng);
    CMatrix Dm = CMatrix::Zero(n, n);
    std::uniform_int_distribution<long> pick(0, m - 1);
    for (long i = 0; i < n; ++i) Dm(i, i) = RootOfUnity(m, pick(rng)).value();
    CMatrix T = Q * Dm * Q.inverse();
    auto dec = finite_order_eigendecomposition(T, m, tol);
    CMatrix sum = CMatrix::Zero(n, n);
    for (auto& [zeta, P] : dec) {
      sum += P;
      CHECK(approx_zero(P * P - P, Tolerance{1e-8, 0}, mat_scale(P)));
      CHECK(approx_zero(T * P - zeta.value() * P, Tolerance{1e-8, 0}, mat_scale(P)));
    }
    CHECK(approx_equal(sum, CMatrix::Identity(n, n), Tolerance{1e-8, 0}));
    for (std::size_t a = 0; a < dec.size(); ++a)
      for (std::size_t b = a + 1; b < dec.size(); ++b)
        CHECK(approx_zero(dec[a].second * dec[b].second, Tolerance{1e-8, 0}, 1.0));
  }
}

TEST_CASE("unital closure rank") {
  CMatrix E(2, 2), F(2, 2);
  E << 1, 0, 0, -1;
  F << 0, 1, 1, 0;
  CHECK(unital_closure_rank({E, F}, 2, tol) == 4);
  CHECK(unital_closure_rank({E}, 2, tol) == 2);
  CHECK(unital_closure_rank({}, 2, tol) == 1);
}
