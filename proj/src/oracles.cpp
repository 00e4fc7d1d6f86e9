#include "gcover/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <random>

#include "gcover/errors.hpp"

namespace gcover {

namespace {

bool ops_act_simply(const std::vector<CMatrix>& ops, long dim, const Tolerance& tol) {
  std::vector<CMatrix> with_id = ops;
  with_id.push_back(CMatrix::Identity(dim, dim));
  return operator_span(with_id, tol).cols() == dim * dim;
}

// decompose C^dim into simple submodules of the algebra spanned by ops
// (assumed closed under products up to span)
std::vector<CMatrix> split_into_simples(const std::vector<CMatrix>& ops, long dim,
                                        std::mt19937_64& rng, const Tolerance& tol) {
  if (dim == 0) return {};
  if (ops_act_simply(ops, dim, tol)) return {CMatrix::Identity(dim, dim)};
  std::vector<std::pair<CMatrix, CMatrix>> pairs;
  for (const CMatrix& a : ops) pairs.emplace_back(a, a);
  std::vector<CMatrix> comm = pairs.empty()
                                  ? std::vector<CMatrix>{}
                                  : solve_sylvester_family(pairs, tol);
  if (pairs.empty()) {
    // zero algebra: every line is a submodule
    std::vector<CMatrix> lines;
    for (long i = 0; i < dim; ++i) {
      CMatrix e = CMatrix::Zero(dim, 1);
      e(i, 0) = 1.0;
      lines.push_back(e);
    }
    return lines;
  }
  if (comm.size() <= 1)
    throw NotCompletelyReducibleError("split_into_simples: indecomposable but not simple");
  for (int attempt = 0; attempt < 8; ++attempt) {
    CMatrix R = CMatrix::Zero(dim, dim);
    std::normal_distribution<double> d(0.0, 1.0);
    for (const CMatrix& K : comm) R += Cx(d(rng), d(rng)) * K;
    Eigen::ComplexEigenSolver<CMatrix> es(R);
    if (es.info() != Eigen::Success) continue;
    double sep = 1e-6 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    std::vector<std::vector<long>> clusters;
    for (long i = 0; i < dim; ++i) {
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
    std::vector<CMatrix> out;
    bool ok = true;
    for (const auto& cl : clusters) {
      CMatrix V(dim, long(cl.size()));
      for (std::size_t j = 0; j < cl.size(); ++j) V.col(long(j)) = es.eigenvectors().col(cl[j]);
      CMatrix E = column_space(V, tol);
      std::vector<CMatrix> restricted;
      for (const CMatrix& a : ops) {
        CMatrix loc = E.adjoint() * a * E;
        if ((a * E - E * loc).cwiseAbs().maxCoeff() > tol.eps * 1000 * mat_scale(a)) {
          ok = false;
          break;
        }
        restricted.push_back(loc);
      }
      if (!ok) break;
      for (const CMatrix& S : split_into_simples(restricted, E.cols(), rng, tol))
        out.push_back(E * S);
    }
    if (ok) return out;
  }
  throw NotCompletelyReducibleError("split_into_simples: splitting failed in retry budget");
}

// all simple submodules for the algebra spanned by ops: decomposition
// summands plus a projective sample of each isotypic family
std::vector<CMatrix> enumerate_simples_of(const std::vector<CMatrix>& ops, long dim,
                                          long sample_count, std::uint64_t seed,
                                          const Tolerance& tol) {
  std::mt19937_64 rng(seed + 0xabcdef);
  std::vector<CMatrix> summands = split_into_simples(ops, dim, rng, tol);
  // isotype classes via intertwiner existence
  std::vector<std::vector<long>> classes;
  std::vector<std::vector<CMatrix>> class_embeddings;  // maps S_first -> M
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const CMatrix& Si = summands[i];
    std::vector<CMatrix> ops_i;
    for (const CMatrix& a : ops) ops_i.push_back(Si.adjoint() * a * Si);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const CMatrix& S0 = summands[classes[c][0]];
      if (S0.cols() != Si.cols()) continue;
      std::vector<std::pair<CMatrix, CMatrix>> pairs;
      for (const CMatrix& a : ops)
        pairs.emplace_back(CMatrix(S0.adjoint() * a * S0), CMatrix(Si.adjoint() * a * Si));
      auto sols = pairs.empty() ? std::vector<CMatrix>{CMatrix::Identity(Si.cols(), S0.cols())}
                                : solve_intertwiners(pairs, Si.cols(), S0.cols(), tol);
      for (const CMatrix& xi : sols)
        if (is_invertible(xi, tol)) {
          classes[c].push_back(long(i));
          class_embeddings[c].push_back(Si * xi);
          placed = true;
          break;
        }
      if (placed) break;
    }
    if (!placed) {
      classes.push_back({long(i)});
      class_embeddings.push_back({Si});
    }
  }

  std::vector<CMatrix> out;
  std::normal_distribution<double> d(0.0, 1.0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& embeds = class_embeddings[c];
    long k = long(embeds.size());
    for (const CMatrix& E : embeds) out.push_back(column_space(E, tol));
    if (k < 2) continue;
    for (long s = 0; s < sample_count; ++s) {
      CMatrix mix = CMatrix::Zero(dim, embeds[0].cols());
      for (const CMatrix& E : embeds) mix += Cx(d(rng), d(rng)) * E;
      out.push_back(column_space(mix, tol));
    }
  }
  return out;
}

std::vector<CMatrix> a0_ops(const GradedAlgebra& A, const Rep& rho) {
  std::vector<CMatrix> ops;
  for (long i : A.basis_of_degree(group_zero(A.group))) ops.push_back(rho.action[i]);
  return ops;
}

}  // namespace

std::vector<CMatrix> enumerate_simple_a0_submodules(const GradedAlgebra& A, const Rep& rho,
                                                    const OracleBudget& budget,
                                                    const Tolerance& tol) {
  if (rho.module_dim > budget.max_module_dim)
    throw BudgetExceededError("enumerate_simple_a0_submodules: module dimension over budget");
  return enumerate_simples_of(a0_ops(A, rho), rho.module_dim, budget.sample_count,
                              budget.seed, tol);
}

bool brute_force_is_thin(const GradedAlgebra& A, const Rep& rho, const Covering& c,
                         const OracleBudget& budget, const Tolerance& tol) {
  if (rho.module_dim > budget.max_module_dim)
    throw BudgetExceededError("brute_force_is_thin: module dimension over budget");
  std::vector<CMatrix> zero_ops = a0_ops(A, rho);
  for (const auto& [g, B] : c.comps) {
    long dg = B.cols();
    if (dg == 0) continue;
    // simple candidates inside this component, plus the component itself
    std::vector<CMatrix> restricted;
    for (const CMatrix& a : zero_ops) restricted.push_back(B.adjoint() * a * B);
    std::vector<CMatrix> candidates;
    for (const CMatrix& S : enumerate_simples_of(restricted, dg, budget.sample_count,
                                                 budget.seed, tol))
      candidates.push_back(column_space(CMatrix(B * S), tol));
    candidates.push_back(B);
    for (const CMatrix& S : candidates) {
      bool contained = true, proper = false;
      for (const GrpElt& h : all_elements(A.group)) {
        std::vector<long> idx = A.basis_of_degree(group_sub(A.group, h, g));
        CMatrix cols(rho.module_dim, long(idx.size()) * S.cols());
        long off = 0;
        for (long i : idx) {
          cols.block(0, off, rho.module_dim, S.cols()) = rho.action[i] * S;
          off += S.cols();
        }
        CMatrix Nh = column_space(cols, tol);
        if (!subspace_contains(c.comps.at(h), Nh, tol)) {
          contained = false;
          break;
        }
        if (Nh.cols() < c.comps.at(h).cols()) proper = true;
      }
      if (contained && proper) return false;  // a proper subcovering exists
    }
  }
  return true;
}

std::vector<Covering> enumerate_thin_coverings(const GradedAlgebra& A, const Rep& rho,
                                               const OracleBudget& budget,
                                               const Tolerance& tol) {
  if (A.group.order() > budget.max_group_order)
    throw BudgetExceededError("enumerate_thin_coverings: group order over budget");
  std::vector<CMatrix> simples = enumerate_simple_a0_submodules(A, rho, budget, tol);
  std::vector<Covering> found;
  for (const CMatrix& S : simples) {
    // components A_g S; independent of the vector chosen inside S
    Covering c;
    c.group = A.group;
    for (const GrpElt& g : all_elements(A.group)) {
      std::vector<long> idx = A.basis_of_degree(g);
      CMatrix cols(rho.module_dim, long(idx.size()) * S.cols());
      long off = 0;
      for (long i : idx) {
        cols.block(0, off, rho.module_dim, S.cols()) = rho.action[i] * S;
        off += S.cols();
      }
      c.comps[g] = column_space(cols, tol);
    }
    if (!is_covering(A, rho, c, tol)) continue;
    if (!brute_force_is_thin(A, rho, c, budget, tol)) continue;
    bool dup = false;
    for (const Covering& prev : found)
      if (equivalent(prev, c, tol).has_value()) {
        dup = true;
        break;
      }
    if (!dup) found.push_back(c);
  }
  return found;
}

bool quasifinite_density_check(const GradedAlgebra& A, const std::vector<Rep>& family,
                               const Tolerance& tol) {
  long total = 0;
  long expect = 0;
  for (const Rep& r : family) {
    total += r.module_dim;
    expect += r.module_dim * r.module_dim;
  }
  std::vector<CMatrix> stacked;
  for (long i = 0; i < A.dim; ++i) {
    CMatrix M = CMatrix::Zero(total, total);
    long off = 0;
    for (const Rep& r : family) {
      M.block(off, off, r.module_dim, r.module_dim) = r.action[i];
      off += r.module_dim;
    }
    stacked.push_back(M);
  }
  return operator_span(stacked, tol).cols() == expect;
}

}  // namespace gcover
