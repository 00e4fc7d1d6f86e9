#include "gcover/pipeline.hpp"

#include "gcover/errors.hpp"

namespace gcover {

PipelineResult run_pipeline(const Problem& p, const Tolerance& tol) {
  PipelineResult pr;
  if (p.lie) {
    if (!p.lie_data) throw Error("run_pipeline: lie flag without lie data");
    auto [env, rho] = envelope_from_lie(*p.lie_data, p.lie_action, tol);
    pr.alg = env;
    pr.rho = rho;
  } else {
    pr.alg = p.algebra;
    pr.rho = p.rep;
  }
  pr.vr = validate(pr.alg, &pr.rho, tol);
  if (!pr.vr.ok()) throw Error("run_pipeline: validation failed\n" + pr.vr.str());
  pr.stab = stabilizer(pr.alg, pr.rho, tol);
  pr.algH = regrade_to_subgroup(pr.alg, pr.stab.Hhat);
  pr.spec = qmatrix_from_twists(pr.stab.ts, tol);
  pr.gamma = make_gamma(pr.spec);
  pr.nf = normal_form(pr.spec);
  pr.dec = isotypic_decompose(pr.stab.ts, pr.rho.module_dim, tol);
  return pr;
}

ThinPair pipeline_thin(const PipelineResult& pr, const CVector& n, const Tolerance& tol) {
  ThinPair tp;
  tp.hcov = thin_h_covering(pr.dec, pr.gamma, n, tol);
  tp.gcov = thin_g_covering(tp.hcov, pr.alg.group, pr.stab.Hhat);
  return tp;
}

CVector sample_n_vector(const PipelineResult& pr, std::mt19937_64& rng) {
  return random_vector(pr.dec.dim_N(), rng);
}

}  // namespace gcover
