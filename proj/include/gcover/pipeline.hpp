#pragma once

#include "gcover/json_io.hpp"
#include "gcover/oracles.hpp"

namespace gcover {

/// Everything computed on the way from a problem file to thin coverings:
/// validated algebra (the envelope when the input was Lie data), stabilizer
/// subgroup with normalized twists, torus data, and the isotypic split.
struct PipelineResult {
  GradedAlgebra alg;
  Rep rho;
  ValidationReport vr;
  StabilizerResult stab;
  GradedAlgebra algH;        // same algebra regraded by the stabilizer dual
  QTorusSpec spec;
  GammaMap gamma;
  NormalFormResult nf;
  IsotypicDecomp dec;
};

PipelineResult run_pipeline(const Problem& p, const Tolerance& tol);

/// H-covering from a vector of N together with its pullback along psi.
struct ThinPair {
  Covering hcov;
  Covering gcov;
};

ThinPair pipeline_thin(const PipelineResult& pr, const CVector& n, const Tolerance& tol);

CVector sample_n_vector(const PipelineResult& pr, std::mt19937_64& rng);

}  // namespace gcover
