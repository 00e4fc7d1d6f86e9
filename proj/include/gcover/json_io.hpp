#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "gcover/coverings.hpp"
#include "gcover/multiloop.hpp"

namespace gcover {

using Json = nlohmann::ordered_json;

/// Parsed problem file: a graded algebra with a module, or Lie data from
/// which the enveloping image is built, plus an optional multiloop section.
struct Problem {
  FinAbGroup group;
  bool lie = false;
  GradedAlgebra algebra;  // associative structure constants (unset when lie)
  Rep rep;
  std::optional<LieAlgebra> lie_data;
  std::vector<CMatrix> lie_action;
  std::optional<std::pair<std::vector<GrpElt>, long>> multiloop_section;  // epi, cutoff
};

Cx parse_complex(const Json& j);
Problem parse_problem(const Json& j);
QTorusSpec parse_qtorus_spec(const Json& j);

Json group_to_json(const FinAbGroup& G);
Json character_to_json(const Character& chi);
Json matrix_to_json(const CMatrix& M);
Json covering_to_json(const Covering& c);
Json qtorus_to_json(const QTorusSpec& spec);
Json normal_form_to_json(const NormalFormResult& nf);
Json graded_module_to_json(const GradedModule& gm);
Json isotypic_to_json(const IsotypicDecomp& dec);
Json multiloop_to_json(const MultiloopAlgebra& ml);
Json loop_module_to_json(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                         const std::vector<CMatrix>& base_action, const Tolerance& tol);

std::string element_key(const GrpElt& g);

/// FNV-1a 64-bit digest, hex-encoded; used to pin inputs in certificates.
std::string digest(const std::string& bytes);

}  // namespace gcover
