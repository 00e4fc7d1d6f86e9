#include "gcover/multiloop.hpp"

#include <algorithm>
#include <functional>

#include "gcover/errors.hpp"

namespace gcover {

GrpElt MultiloopAlgebra::degree_of_monomial(const std::vector<long>& a) const {
  GrpElt g = group_zero(base.group);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long c = a[i];
    for (std::size_t k = 0; k < g.r.size(); ++k) {
      long m = base.group.factors[k];
      g.r[k] = ((g.r[k] + c * epi[i].r[k]) % m + m) % m;
    }
  }
  return g;
}

long MultiloopAlgebra::index_of(long base_idx, const std::vector<long>& a) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].first == base_idx && basis[i].second == a) return long(i);
  return -1;
}

std::vector<std::pair<long, Cx>> MultiloopAlgebra::bracket(long i, long j) const {
  const auto& [xi, ai] = basis[i];
  const auto& [xj, aj] = basis[j];
  std::vector<long> sum(ai.size());
  for (std::size_t k = 0; k < ai.size(); ++k) {
    sum[k] = ai[k] + aj[k];
    if (std::abs(sum[k]) > cutoff) return {};  // truncated
  }
  std::vector<std::pair<long, Cx>> out;
  CVector coords = base.bracket[xi].col(xj);
  for (long t = 0; t < base.dim; ++t) {
    if (std::abs(coords(t)) == 0.0) continue;
    long idx = index_of(t, sum);
    if (idx < 0) continue;  // zero coordinate in the eigenspace at this degree
    out.emplace_back(idx, coords(t));
  }
  return out;
}

static void walk_monomials(long N, long D, std::vector<long>& cur,
                           const std::function<void(const std::vector<long>&)>& fn) {
  if (long(cur.size()) == N) {
    fn(cur);
    return;
  }
  for (long v = -D; v <= D; ++v) {
    cur.push_back(v);
    walk_monomials(N, D, cur, fn);
    cur.pop_back();
  }
}

MultiloopAlgebra build_multiloop(const LieAlgebra& L, const std::vector<GrpElt>& epi,
                                 long cutoff, const Tolerance& tol) {
  // bracket homogeneity of the base grading
  for (long i = 0; i < L.dim; ++i)
    for (long j = 0; j < L.dim; ++j) {
      GrpElt sum = group_add(L.group, L.grading[i], L.grading[j]);
      CVector c = L.bracket[i].col(j);
      for (long t = 0; t < L.dim; ++t)
        if (std::abs(c(t)) > tol.eps && !(L.grading[t] == sum))
          throw GradingInvalidError("build_multiloop: bracket is not graded");
    }
  for (const GrpElt& e : epi)
    if (e.r.size() != L.group.factors.size())
      throw GradingInvalidError("build_multiloop: epimorphism image has wrong rank");

  MultiloopAlgebra ml;
  ml.base = L;
  ml.epi = epi;
  ml.loops = long(epi.size());
  ml.cutoff = cutoff;
  std::vector<long> cur;
  walk_monomials(ml.loops, cutoff, cur, [&](const std::vector<long>& a) {
    GrpElt abar = ml.degree_of_monomial(a);
    for (long t = 0; t < L.dim; ++t)
      if (L.grading[t] == abar) ml.basis.emplace_back(t, a);
  });
  return ml;
}

double multiloop_jacobi_residual(const MultiloopAlgebra& ml) {
  long n = ml.dim();
  double res = 0;
  auto add_into = [&](std::vector<Cx>& acc, long i, long j, Cx scale) {
    for (auto& [idx, c] : ml.bracket(i, j)) acc[idx] += scale * c;
  };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      // antisymmetry on pairs staying inside the window
      std::vector<Cx> anti(n, Cx(0, 0));
      add_into(anti, i, j, Cx(1, 0));
      add_into(anti, j, i, Cx(1, 0));
      for (const Cx& v : anti) res = std::max(res, std::abs(v));
      for (long k = 0; k < n; ++k) {
        // all three nested brackets must stay within the cutoff
        auto in_window = [&](long a, long b, long c) {
          for (std::size_t t = 0; t < ml.basis[a].second.size(); ++t) {
            long s = ml.basis[a].second[t] + ml.basis[b].second[t] + ml.basis[c].second[t];
            if (std::abs(s) > ml.cutoff) return false;
            long s2 = ml.basis[b].second[t] + ml.basis[c].second[t];
            if (std::abs(s2) > ml.cutoff) return false;
          }
          return true;
        };
        if (!in_window(i, j, k) || !in_window(j, k, i) || !in_window(k, i, j)) continue;
        std::vector<Cx> jac(n, Cx(0, 0));
        for (auto& [idx, c] : ml.bracket(j, k)) add_into(jac, i, idx, c);
        for (auto& [idx, c] : ml.bracket(k, i)) add_into(jac, j, idx, c);
        for (auto& [idx, c] : ml.bracket(i, j)) add_into(jac, k, idx, c);
        for (const Cx& v : jac) res = std::max(res, std::abs(v));
      }
    }
  return res;
}

long MultiloopModule::comp_index(const std::vector<long>& a) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].first == a) return long(i);
  return -1;
}

MultiloopModule loop_module(const MultiloopAlgebra& ml,
                            const std::vector<CMatrix>& base_action, const Covering& c,
                            const Tolerance& tol) {
  if (long(base_action.size()) != ml.base.dim)
    throw Error("loop_module: one action matrix per base element expected");
  // the covering must be over the base grading group
  if (!(c.group == ml.base.group)) throw GroupMismatchError("loop_module: group mismatch");

  MultiloopModule mod;
  mod.algebra = &ml;
  std::vector<long> cur;
  walk_monomials(ml.loops, ml.cutoff, cur, [&](const std::vector<long>& a) {
    GrpElt abar = ml.degree_of_monomial(a);
    const CMatrix& B = c.comps.at(abar);
    mod.offsets.push_back(mod.total);
    mod.components.emplace_back(a, B);
    mod.total += B.cols();
  });
  (void)tol;
  return mod;
}

CMatrix loop_action(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                    const std::vector<CMatrix>& base_action, long ml_index,
                    const Tolerance& tol) {
  const auto& [xb, a] = ml.basis[ml_index];
  CMatrix M = CMatrix::Zero(mod.total, mod.total);
  for (std::size_t ci = 0; ci < mod.components.size(); ++ci) {
    const auto& [b, B] = mod.components[ci];
    if (B.cols() == 0) continue;
    std::vector<long> sum(b.size());
    bool ok = true;
    for (std::size_t t = 0; t < b.size(); ++t) {
      sum[t] = a[t] + b[t];
      if (std::abs(sum[t]) > ml.cutoff) ok = false;
    }
    if (!ok) continue;  // action truncated outside the window
    long ti = mod.comp_index(sum);
    const CMatrix& target = mod.components[ti].second;
    CMatrix moved = base_action[xb] * B;
    CMatrix coeff = target.adjoint() * moved;
    if ((target * coeff - moved).cwiseAbs().maxCoeff() >
        tol.eps * 100 * std::max(1.0, mat_scale(moved)))
      throw Error("loop_action: action leaves the covering component");
    M.block(mod.offsets[ti], mod.offsets[ci], coeff.rows(), coeff.cols()) = coeff;
  }
  return M;
}

double loop_commutator_residual(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                                const std::vector<CMatrix>& base_action,
                                const Tolerance& tol) {
  long n = ml.dim();
  std::vector<CMatrix> acts;
  acts.reserve(n);
  for (long i = 0; i < n; ++i) acts.push_back(loop_action(ml, mod, base_action, i, tol));
  double res = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      // restrict to pairs whose bracket and double moves stay in the window:
      // compare on components where no truncation interferes
      CMatrix lhs = CMatrix::Zero(mod.total, mod.total);
      for (auto& [idx, c] : ml.bracket(i, j)) lhs += c * acts[idx];
      CMatrix rhs = acts[i] * acts[j] - acts[j] * acts[i];
      for (std::size_t ci = 0; ci < mod.components.size(); ++ci) {
        const auto& [b, B] = mod.components[ci];
        if (B.cols() == 0) continue;
        bool interior = true;
        for (std::size_t t = 0; t < b.size(); ++t) {
          long sij = ml.basis[i].second[t] + ml.basis[j].second[t];
          long s = sij + b[t];
          long s1 = ml.basis[i].second[t] + b[t];
          long s2 = ml.basis[j].second[t] + b[t];
          if (std::abs(sij) > ml.cutoff || std::abs(s) > ml.cutoff ||
              std::abs(s1) > ml.cutoff || std::abs(s2) > ml.cutoff)
            interior = false;
        }
        if (!interior) continue;
        res = std::max(res, (lhs - rhs)
                                .block(0, mod.offsets[ci], mod.total, B.cols())
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
  return res;
}

}  // namespace gcover
