#include "gcover/coverings.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "gcover/errors.hpp"

namespace gcover {

Covering covering_from_vector(const GradedAlgebra& A, const Rep& rho, const CVector& v,
                              const Tolerance& tol) {
  if (v.norm() <= tol.eps) throw ZeroVectorError("covering_from_vector: zero vector");
  Covering c;
  c.group = A.group;
  for (const GrpElt& g : all_elements(A.group)) {
    std::vector<long> idx = A.basis_of_degree(g);
    CMatrix cols(rho.module_dim, long(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) cols.col(long(j)) = rho.action[idx[j]] * v;
    c.comps[g] = column_space(cols, tol);
  }
  return c;
}

bool is_covering(const GradedAlgebra& A, const Rep& rho, const Covering& c,
                 const Tolerance& tol) {
  if (c.group != A.group) return false;
  long n = rho.module_dim;
  long total_cols = 0;
  for (const auto& [g, B] : c.comps) total_cols += B.cols();
  CMatrix all(n, total_cols);
  long off = 0;
  for (const auto& [g, B] : c.comps) {
    all.block(0, off, n, B.cols()) = B;
    off += B.cols();
  }
  if (rank_of(all, tol) != n) return false;

  for (long k = 0; k < A.dim; ++k) {
    const GrpElt& d = A.grading[k];
    for (const auto& [g, B] : c.comps) {
      if (B.cols() == 0) continue;
      const CMatrix& target = c.comps.at(group_add(A.group, g, d));
      if (!subspace_contains(target, CMatrix(rho.action[k] * B), tol)) return false;
    }
  }
  return true;
}

bool is_thin(const GradedAlgebra& A, const Rep& rho, const Covering& c, const Tolerance& tol) {
  if (!is_covering(A, rho, c, tol)) return false;
  std::vector<long> zero_idx = A.basis_of_degree(group_zero(A.group));
  // (a) each nonzero component is simple over A_0
  for (const auto& [h, B] : c.comps) {
    long dh = B.cols();
    if (dh == 0) continue;
    std::vector<CMatrix> restricted;
    for (long i : zero_idx) restricted.push_back(B.adjoint() * rho.action[i] * B);
    if (operator_span(restricted, tol).cols() != dh * dh) return false;
  }
  // (b) homogeneous actions carry components onto components
  for (const auto& [h, B] : c.comps) {
    if (B.cols() == 0) continue;
    for (const GrpElt& g : all_elements(A.group)) {
      std::vector<long> idx = A.basis_of_degree(group_sub(A.group, g, h));
      CMatrix cols(rho.module_dim, long(idx.size()) * B.cols());
      long off = 0;
      for (long i : idx) {
        cols.block(0, off, rho.module_dim, B.cols()) = rho.action[i] * B;
        off += B.cols();
      }
      if (!subspace_equal(column_space(cols, tol), c.comps.at(g), tol)) return false;
    }
  }
  return true;
}

std::optional<GrpElt> equivalent(const Covering& c1, const Covering& c2, const Tolerance& tol) {
  if (c1.group != c2.group) return std::nullopt;
  for (const GrpElt& h : all_elements(c1.group)) {
    bool match = true;
    for (const auto& [g, B] : c1.comps) {
      const CMatrix& other = c2.comps.at(group_add(c1.group, g, h));
      if (B.cols() != other.cols() || !subspace_equal(B, other, tol)) {
        match = false;
        break;
      }
    }
    if (match) return h;
  }
  return std::nullopt;
}

Covering thin_h_covering(const IsotypicDecomp& dec, const GammaMap& gamma, const CVector& n,
                         const Tolerance& tol) {
  if (n.norm() <= tol.eps) throw ZeroVectorError("thin_h_covering: zero vector in N");
  if (n.size() != dec.dim_N()) throw Error("thin_h_covering: vector has wrong dimension");
  Covering c;
  c.group = dec.Hgroup;
  std::map<std::vector<long>, const IsotypicComponent*> comp_at;
  for (const auto& comp : dec.components) comp_at[comp.label.exps] = &comp;

  std::vector<std::pair<std::vector<long>, CVector>> moved;  // (gamma(a), T^a n)
  for (const auto& a : dec.coset_reps)
    moved.emplace_back(gamma_of(gamma, a).exps, dec.monomial_on_N(a) * n);

  for (const GrpElt& h : all_elements(dec.Hgroup)) {
    std::vector<CVector> cols;
    for (const auto& [ga, vec] : moved) {
      Character target{dec.Hgroup, {}};
      target.exps.resize(ga.size());
      for (std::size_t i = 0; i < ga.size(); ++i)
        target.exps[i] = (h.r[i] + ga[i]) % dec.Hgroup.factors[i];
      auto it = comp_at.find(target.exps);
      if (it == comp_at.end()) continue;
      for (const CMatrix& phi : it->second->embeddings) cols.push_back(phi * vec);
    }
    CMatrix M(dec.module_dim(), long(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) M.col(long(j)) = cols[j];
    c.comps[h] = column_space(M, tol);
  }
  return c;
}

Covering thin_g_covering(const Covering& hcov, const FinAbGroup& G, const Subgroup& Hhat) {
  Covering c;
  c.group = G;
  for (const GrpElt& g : all_elements(G)) {
    Character pg = psi_of(g, Hhat);
    c.comps[g] = hcov.comps.at(GrpElt{pg.exps});
  }
  return c;
}

long GradedModule::index_of(const GrpElt& g) const {
  for (std::size_t i = 0; i < elts.size(); ++i)
    if (elts[i] == g) return long(i);
  throw Error("GradedModule: unknown group element");
}

CMatrix GradedModule::full_action(const GradedAlgebra& A, long k) const {
  CMatrix M = CMatrix::Zero(total, total);
  for (std::size_t gi = 0; gi < elts.size(); ++gi) {
    if (dims[gi] == 0) continue;
    long ti = index_of(group_add(group, elts[gi], A.grading[k]));
    if (dims[ti] == 0) continue;
    M.block(offsets[ti], offsets[gi], dims[ti], dims[gi]) = blocks[k][gi];
  }
  return M;
}

GradedModule graded_module_from_covering(const GradedAlgebra& A, const Rep& rho,
                                         const Covering& c, const Tolerance& tol) {
  if (!is_thin(A, rho, c, tol))
    throw NotThinError("graded_module_from_covering: covering is not thin");
  GradedModule gm;
  gm.group = A.group;
  gm.elts = all_elements(A.group);
  for (const GrpElt& g : gm.elts) {
    const CMatrix& B = c.comps.at(g);
    gm.offsets.push_back(gm.total);
    gm.dims.push_back(B.cols());
    gm.comp_bases.push_back(B);
    gm.total += B.cols();
  }
  gm.blocks.assign(A.dim, {});
  for (long k = 0; k < A.dim; ++k) {
    gm.blocks[k].resize(gm.elts.size());
    for (std::size_t gi = 0; gi < gm.elts.size(); ++gi) {
      long ti = gm.index_of(group_add(A.group, gm.elts[gi], A.grading[k]));
      const CMatrix& src = gm.comp_bases[gi];
      const CMatrix& dst = gm.comp_bases[ti];
      CMatrix moved = rho.action[k] * src;
      CMatrix coeff = dst.adjoint() * moved;
      if ((dst * coeff - moved).cwiseAbs().maxCoeff() >
          tol.eps * 100 * std::max(1.0, mat_scale(moved)))
        throw Error("graded_module_from_covering: action leaves the covering");
      gm.blocks[k][gi] = coeff;
    }
  }
  return gm;
}

bool is_graded_simple(const GradedAlgebra& A, const GradedModule& gm, const Tolerance& tol) {
  if (gm.total == 0) return false;
  std::vector<CMatrix> ops;
  for (long k = 0; k < A.dim; ++k) ops.push_back(gm.full_action(A, k));
  for (std::size_t gi = 0; gi < gm.elts.size(); ++gi) {
    CMatrix P = CMatrix::Zero(gm.total, gm.total);
    for (long t = 0; t < gm.dims[gi]; ++t) P(gm.offsets[gi] + t, gm.offsets[gi] + t) = 1.0;
    ops.push_back(P);
  }
  return unital_closure_rank(ops, gm.total, tol) == gm.total * gm.total;
}

std::optional<std::pair<GrpElt, CMatrix>> graded_iso_up_to_shift(const GradedAlgebra& A,
                                                                 const GradedModule& gm1,
                                                                 const GradedModule& gm2,
                                                                 const Tolerance& tol) {
  if (gm1.group != gm2.group || gm1.total != gm2.total) return std::nullopt;
  const FinAbGroup& G = gm1.group;
  for (const GrpElt& h : all_elements(G)) {
    bool dims_ok = true;
    std::vector<long> var_off(gm1.elts.size(), 0);
    long nvars = 0;
    for (std::size_t gi = 0; gi < gm1.elts.size(); ++gi) {
      long ti = gm2.index_of(group_add(G, gm1.elts[gi], h));
      if (gm1.dims[gi] != gm2.dims[ti]) {
        dims_ok = false;
        break;
      }
      var_off[gi] = nvars;
      nvars += gm1.dims[gi] * gm2.dims[ti];
    }
    if (!dims_ok || nvars == 0) continue;

    // theta_{g+d} B1_{k,g} = B2_{k,g+h} theta_g blockwise
    long nrows = 0;
    std::vector<std::tuple<long, long, long>> eqs;  // (k, gi, row offset)
    for (long k = 0; k < A.dim; ++k)
      for (std::size_t gi = 0; gi < gm1.elts.size(); ++gi) {
        long si = gm1.index_of(group_add(G, gm1.elts[gi], A.grading[k]));
        long rows = gm2.dims[gm2.index_of(group_add(G, gm1.elts[si], h))] * gm1.dims[gi];
        if (rows == 0) continue;
        eqs.emplace_back(k, long(gi), nrows);
        nrows += rows;
      }
    CMatrix S = CMatrix::Zero(nrows, nvars);
    for (auto& [k, gi, row0] : eqs) {
      long si = gm1.index_of(group_add(G, gm1.elts[gi], A.grading[k]));
      long ti_g = gm2.index_of(group_add(G, gm1.elts[gi], h));
      long ti_s = gm2.index_of(group_add(G, gm1.elts[si], h));
      const CMatrix& B1 = gm1.blocks[k][gi];          // dims1[si] x dims1[gi]
      const CMatrix& B2 = gm2.blocks[k][ti_g];        // dims2[ti_s] x dims2[ti_g]
      long m = gm2.dims[ti_s], p = gm1.dims[si], q = gm1.dims[gi];
      // vec(theta_s B1) = (B1^T kron I_m) vec(theta_s)
      for (long a = 0; a < p; ++a)
        for (long b = 0; b < q; ++b)
          for (long i = 0; i < m; ++i)
            S(row0 + b * m + i, var_off[si] + a * m + i) += B1(a, b);
      // vec(B2 theta_g) = (I_q kron B2) vec(theta_g)
      for (long b = 0; b < q; ++b)
        for (long i = 0; i < m; ++i)
          for (long j = 0; j < gm2.dims[ti_g]; ++j)
            S(row0 + b * m + i, var_off[gi] + b * gm2.dims[ti_g] + j) -= B2(i, j);
    }
    CMatrix K = kernel_space(S, tol);
    if (K.cols() == 0) continue;

    auto assemble = [&](const CVector& sol) {
      CMatrix theta = CMatrix::Zero(gm2.total, gm1.total);
      for (std::size_t gi = 0; gi < gm1.elts.size(); ++gi) {
        long ti = gm2.index_of(group_add(G, gm1.elts[gi], h));
        long m = gm2.dims[ti], q = gm1.dims[gi];
        for (long b = 0; b < q; ++b)
          for (long i = 0; i < m; ++i)
            theta(gm2.offsets[ti] + i, gm1.offsets[gi] + b) = sol(var_off[gi] + b * m + i);
      }
      return theta;
    };
    for (long j = 0; j < K.cols(); ++j) {
      CMatrix theta = assemble(K.col(j));
      if (is_invertible(theta, tol)) return std::make_pair(h, theta);
    }
    std::mt19937_64 rng(tol.seed + 17);
    for (int t = 0; t < 8; ++t) {
      CVector mix = K * random_vector(K.cols(), rng);
      CMatrix theta = assemble(mix);
      if (is_invertible(theta, tol)) return std::make_pair(h, theta);
    }
  }
  return std::nullopt;
}

// The summation map (m_g)_g |-> sum_g m_g is itself a surjection onto the
// original simple module and restricts bijectively to every component, so it
// is the quotient that reproduces the input covering verbatim.  It needs the
// component embeddings; abstract graded modules fall back to the seeded
// commutant splitting below.
static std::optional<ExtractedCovering> summation_quotient(const GradedAlgebra& A,
                                                           const GradedModule& gm,
                                                           const Tolerance& tol) {
  if (gm.comp_bases.size() != gm.elts.size()) return std::nullopt;
  long n = -1;
  for (const CMatrix& B : gm.comp_bases)
    if (B.rows() > 0) n = B.rows();
  if (n <= 0) return std::nullopt;
  CMatrix S(n, gm.total);
  for (std::size_t gi = 0; gi < gm.elts.size(); ++gi) {
    if (gm.dims[gi] == 0) continue;
    if (gm.comp_bases[gi].rows() != n) return std::nullopt;
    S.block(0, gm.offsets[gi], n, gm.dims[gi]) = gm.comp_bases[gi];
  }
  if (rank_of(S, tol) != n) return std::nullopt;
  // reconstruct the action on the target from the blocks: rho_k S = S btilde_k
  Eigen::CompleteOrthogonalDecomposition<CMatrix> cod(S.transpose());
  Rep rho;
  rho.module_dim = n;
  for (long k = 0; k < A.dim; ++k) {
    CMatrix R = S * gm.full_action(A, k);
    CMatrix X = cod.solve(R.transpose()).transpose();
    if ((X * S - R).cwiseAbs().maxCoeff() > tol.eps * 100 * std::max(1.0, mat_scale(R)))
      return std::nullopt;
    rho.action.push_back(X);
  }
  if (!is_simple(rho, tol)) return std::nullopt;
  ExtractedCovering out;
  out.rep = rho;
  out.phi = S;
  out.cov.group = gm.group;
  for (std::size_t gi = 0; gi < gm.elts.size(); ++gi)
    out.cov.comps[gm.elts[gi]] = column_space(gm.comp_bases[gi], tol);
  return out;
}

ExtractedCovering covering_from_graded(const GradedAlgebra& A, const GradedModule& gm,
                                       const Tolerance& tol) {
  auto verified = [&](ExtractedCovering out) {
    if (!is_thin(A, out.rep, out.cov, tol))
      throw NotThinError("covering_from_graded: extracted covering is not thin");
    GradedModule back = graded_module_from_covering(A, out.rep, out.cov, tol);
    if (!graded_iso_up_to_shift(A, gm, back, tol))
      throw Error("covering_from_graded: reconstruction is not graded-isomorphic to the input");
    return out;
  };
  if (auto canonical = summation_quotient(A, gm, tol)) return verified(*canonical);
  long n = gm.total;
  Rep big;
  big.module_dim = n;
  for (long k = 0; k < A.dim; ++k) big.action.push_back(gm.full_action(A, k));

  // peel off a simple summand via seeded commutant splitting
  CMatrix phi = CMatrix::Identity(n, n);
  Rep cur = big;
  std::mt19937_64 rng(tol.seed + 0x51ed1);
  int attempts = 0;
  while (!is_simple(cur, tol)) {
    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    for (const CMatrix& a : cur.action) pairs.emplace_back(a, a);
    std::vector<CMatrix> comm = solve_sylvester_family(pairs, tol);
    if (comm.size() <= 1)
      throw NotCompletelyReducibleError(
          "covering_from_graded: module has trivial commutant but is not simple");
    bool advanced = false;
    for (; attempts < 8 && !advanced; ++attempts) {
      CMatrix R = CMatrix::Zero(cur.module_dim, cur.module_dim);
      std::normal_distribution<double> d(0.0, 1.0);
      for (const CMatrix& K : comm) R += Cx(d(rng), d(rng)) * K;
      Eigen::ComplexEigenSolver<CMatrix> es(R);
      if (es.info() != Eigen::Success) continue;
      // smallest eigenvalue cluster spans a candidate summand
      long m = cur.module_dim;
      double sep = 1e-6 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      std::vector<std::vector<long>> clusters;
      for (long i = 0; i < m; ++i) {
        bool placed = false;
        for (auto& cl : clusters)
          if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(cl.front())) < sep) {
            cl.push_back(i);
            placed = true;
            break;
          }
        if (!placed) clusters.push_back({i});
      }
      if (clusters.size() < 2) continue;
      std::sort(clusters.begin(), clusters.end(),
                [](auto& a, auto& b) { return a.size() < b.size(); });
      const auto& cl = clusters.front();
      CMatrix V(m, long(cl.size()));
      for (std::size_t j = 0; j < cl.size(); ++j) V.col(long(j)) = es.eigenvectors().col(cl[j]);
      CMatrix E = column_space(V, tol);
      // E must be invariant; build the module map onto it
      bool invariant = true;
      Rep next;
      next.module_dim = E.cols();
      for (const CMatrix& a : cur.action) {
        CMatrix loc = E.adjoint() * a * E;
        if ((a * E - E * loc).cwiseAbs().maxCoeff() > tol.eps * 1000 * mat_scale(a)) {
          invariant = false;
          break;
        }
        next.action.push_back(loc);
      }
      if (!invariant) continue;
      // spectral projection onto the cluster, an A-module map
      CMatrix W = es.eigenvectors();
      CMatrix D = CMatrix::Zero(m, m);
      for (long i : cl) D(i, i) = 1.0;
      CMatrix P = W * D * W.inverse();
      phi = (E.adjoint() * P) * phi;
      cur = next;
      advanced = true;
    }
    if (!advanced)
      throw NotCompletelyReducibleError(
          "covering_from_graded: commutant splitting failed within the retry budget");
  }

  ExtractedCovering out;
  out.rep = cur;
  out.phi = phi;
  out.cov.group = gm.group;
  for (std::size_t gi = 0; gi < gm.elts.size(); ++gi) {
    CMatrix img = phi.block(0, gm.offsets[gi], phi.rows(), gm.dims[gi]);
    out.cov.comps[gm.elts[gi]] = column_space(img, tol);
  }
  return verified(out);
}

UniciteReport check_unicite_hypotheses(const GradedAlgebra& A, const Tolerance& tol) {
  UniciteReport rep;
  for (const GrpElt& g : all_elements(A.group)) {
    UniciteReport::Entry e;
    e.g = g;
    std::vector<long> pos = A.basis_of_degree(g);
    std::vector<long> neg = A.basis_of_degree(group_neg(A.group, g));
    // (i) unit in span(A_g A_{-g})
    if (!pos.empty() && !neg.empty()) {
      CMatrix prods(A.dim, long(pos.size() * neg.size()));
      long c = 0;
      for (long i : pos)
        for (long j : neg) prods.col(c++) = A.product(i, j);
      CMatrix B = column_space(prods, tol);
      CVector res = A.unit;
      if (B.cols() > 0) res -= B * (B.adjoint() * A.unit);
      e.unit_residual = res.norm();
      e.unit_in_product = e.unit_residual <= tol.eps * std::max(1.0, A.unit.norm());
    }
    // (ii) A_g irreducible over A_0 under left multiplication
    long dg = long(pos.size());
    if (dg == 0) {
      e.component_irreducible = true;  // vacuous
    } else {
      std::vector<long> zero_idx = A.basis_of_degree(group_zero(A.group));
      std::vector<CMatrix> mats;
      for (long i : zero_idx) {
        CMatrix M(dg, dg);
        for (long a = 0; a < dg; ++a)
          for (long b = 0; b < dg; ++b) M(a, b) = A.left_mult[i](pos[a], pos[b]);
        mats.push_back(M);
      }
      e.component_irreducible = operator_span(mats, tol).cols() == dg * dg;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

std::optional<CMatrix> module_intertwiner(const Rep& rho1, const Rep& rho2,
                                          const Tolerance& tol) {
  if (rho1.action.size() != rho2.action.size()) return std::nullopt;
  std::vector<std::pair<CMatrix, CMatrix>> pairs;
  for (std::size_t i = 0; i < rho1.action.size(); ++i)
    pairs.emplace_back(rho1.action[i], rho2.action[i]);
  auto sols = solve_intertwiners(pairs, rho2.module_dim, rho1.module_dim, tol);
  for (const CMatrix& T : sols)
    if (T.rows() == T.cols() && is_invertible(T, tol)) return T;
  if (sols.size() > 1) {
    std::mt19937_64 rng(tol.seed + 29);
    for (int t = 0; t < 8; ++t) {
      CMatrix mix = CMatrix::Zero(rho2.module_dim, rho1.module_dim);
      std::normal_distribution<double> d(0.0, 1.0);
      for (const CMatrix& T : sols) mix += Cx(d(rng), d(rng)) * T;
      if (mix.rows() == mix.cols() && is_invertible(mix, tol)) return mix;
    }
  }
  return std::nullopt;
}

Covering transport_covering(const Covering& c, const CMatrix& alpha, const Tolerance& tol) {
  Covering out;
  out.group = c.group;
  for (const auto& [g, B] : c.comps) out.comps[g] = column_space(CMatrix(alpha * B), tol);
  return out;
}

}  // namespace gcover
