#include "gcover/json_io.hpp"

#include <sstream>

#include "gcover/errors.hpp"

namespace gcover {

Cx parse_complex(const Json& j) {
  if (j.is_number()) return Cx(j.get<double>(), 0.0);
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw SchemaError("complex literal must be [re, im]");
    return Cx(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_object()) {
    if (j.contains("zeta")) {
      const Json& z = j["zeta"];
      if (!z.is_array() || z.size() != 2) throw SchemaError("zeta literal must be [m, k]");
      return RootOfUnity(z[0].get<long>(), z[1].get<long>()).value();
    }
    if (j.contains("rat")) {
      const Json& r = j["rat"];
      if (!r.is_array() || r.size() != 2 || r[1].get<double>() == 0)
        throw SchemaError("rat literal must be [p, q] with q != 0");
      return Cx(r[0].get<double>() / r[1].get<double>(), 0.0);
    }
  }
  throw SchemaError("unrecognized complex literal: " + j.dump());
}

static FinAbGroup parse_group(const Json& j) {
  if (!j.is_object() || !j.contains("invariant_factors"))
    throw SchemaError("group must be {\"invariant_factors\": [...]}");
  FinAbGroup G;
  for (const Json& m : j["invariant_factors"]) {
    long v = m.get<long>();
    if (v < 1) throw SchemaError("invariant factors must be >= 1");
    G.factors.push_back(v);
  }
  return G;
}

static GrpElt parse_element(const Json& j, const FinAbGroup& G) {
  if (!j.is_array() || j.size() != G.factors.size())
    throw SchemaError("group element has wrong length: " + j.dump());
  GrpElt e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    long v = j[i].get<long>();
    e.r.push_back(((v % G.factors[i]) + G.factors[i]) % G.factors[i]);
  }
  return e;
}

static CMatrix parse_matrix(const Json& j, long rows, long cols) {
  if (!j.is_array() || long(j.size()) != rows) throw SchemaError("matrix has wrong row count");
  CMatrix M(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (!j[i].is_array() || long(j[i].size()) != cols)
      throw SchemaError("matrix has wrong column count");
    for (long k = 0; k < cols; ++k) M(i, k) = parse_complex(j[i][k]);
  }
  return M;
}

Problem parse_problem(const Json& j) {
  if (!j.is_object()) throw SchemaError("problem file must be a JSON object");
  Problem p;
  if (!j.contains("group")) throw SchemaError("missing \"group\"");
  p.group = parse_group(j["group"]);
  p.lie = j.value("lie", false);

  if (!j.contains("algebra")) throw SchemaError("missing \"algebra\"");
  const Json& ja = j["algebra"];
  long dim = ja.at("dim").get<long>();
  if (dim < 1) throw SchemaError("algebra dim must be positive");
  const Json& js = ja.at("structure");
  if (!js.is_array() || long(js.size()) != dim) throw SchemaError("structure must be dim x dim");
  std::vector<GrpElt> grading;
  for (const Json& g : ja.at("grading")) grading.push_back(parse_element(g, p.group));
  if (long(grading.size()) != dim) throw SchemaError("grading must list one degree per basis element");

  if (!j.contains("module")) throw SchemaError("missing \"module\"");
  const Json& jm = j["module"];
  long mdim = jm.at("dim").get<long>();
  if (mdim < 1) throw SchemaError("module dim must be positive");
  const Json& jact = jm.at("action");
  if (!jact.is_array() || long(jact.size()) != dim)
    throw SchemaError("module action must list one matrix per basis element");
  std::vector<CMatrix> action;
  for (long i = 0; i < dim; ++i) action.push_back(parse_matrix(jact[i], mdim, mdim));

  if (p.lie) {
    LieAlgebra L;
    L.group = p.group;
    L.dim = dim;
    L.grading = grading;
    for (long i = 0; i < dim; ++i) {
      if (!js[i].is_array() || long(js[i].size()) != dim)
        throw SchemaError("structure must be dim x dim");
      CMatrix B(dim, dim);
      for (long k = 0; k < dim; ++k) {
        const Json& coords = js[i][k];
        if (!coords.is_array() || long(coords.size()) != dim)
          throw SchemaError("structure coordinates must have length dim");
        for (long t = 0; t < dim; ++t) B(t, k) = parse_complex(coords[t]);
      }
      L.bracket.push_back(B);
    }
    p.lie_data = L;
    p.lie_action = action;
  } else {
    GradedAlgebra A;
    A.group = p.group;
    A.dim = dim;
    A.grading = grading;
    for (long i = 0; i < dim; ++i) {
      if (!js[i].is_array() || long(js[i].size()) != dim)
        throw SchemaError("structure must be dim x dim");
      CMatrix B(dim, dim);
      for (long k = 0; k < dim; ++k) {
        const Json& coords = js[i][k];
        if (!coords.is_array() || long(coords.size()) != dim)
          throw SchemaError("structure coordinates must have length dim");
        for (long t = 0; t < dim; ++t) B(t, k) = parse_complex(coords[t]);
      }
      A.left_mult.push_back(B);
    }
    const Json& ju = ja.at("unit");
    if (!ju.is_array() || long(ju.size()) != dim) throw SchemaError("unit must have length dim");
    A.unit = CVector(dim);
    for (long t = 0; t < dim; ++t) A.unit(t) = parse_complex(ju[t]);
    p.algebra = A;
    p.rep = Rep{mdim, action};
  }

  if (j.contains("multiloop")) {
    const Json& jl = j["multiloop"];
    std::vector<GrpElt> epi;
    for (const Json& e : jl.at("epimorphism")) epi.push_back(parse_element(e, p.group));
    long cutoff = jl.at("cutoff").get<long>();
    if (cutoff < 0) throw SchemaError("cutoff must be nonnegative");
    p.multiloop_section = {epi, cutoff};
  }
  return p;
}

QTorusSpec parse_qtorus_spec(const Json& j) {
  QTorusSpec spec;
  spec.L = j.at("L").get<long>();
  for (const Json& s : j.at("orders")) spec.orders.push_back(s.get<long>());
  spec.rank = long(spec.orders.size());
  const Json& je = j.at("exponents");
  if (!je.is_array() || long(je.size()) != spec.rank)
    throw SchemaError("exponents must be rank x rank");
  for (const Json& row : je) {
    std::vector<long> r;
    for (const Json& v : row) r.push_back(v.get<long>());
    if (long(r.size()) != spec.rank) throw SchemaError("exponents must be rank x rank");
    spec.E.push_back(r);
  }
  try {
    validate_spec(spec);
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid torus spec: ") + e.what());
  }
  return spec;
}

std::string element_key(const GrpElt& g) {
  std::string s;
  for (std::size_t i = 0; i < g.r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g.r[i]);
  }
  return s;
}

Json group_to_json(const FinAbGroup& G) { return Json{{"invariant_factors", G.factors}}; }

Json character_to_json(const Character& chi) { return Json{{"exponents", chi.exps}}; }

Json matrix_to_json(const CMatrix& M) {
  Json rows = Json::array();
  for (long i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < M.cols(); ++j) row.push_back(Json::array({M(i, j).real(), M(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Json covering_to_json(const Covering& c) {
  Json comps = Json::object();
  for (const auto& [g, B] : c.comps) {
    Json cols = Json::array();
    for (long j = 0; j < B.cols(); ++j) {
      Json col = Json::array();
      for (long i = 0; i < B.rows(); ++i)
        col.push_back(Json::array({B(i, j).real(), B(i, j).imag()}));
      cols.push_back(col);
    }
    comps[element_key(g)] = cols;
  }
  return Json{{"group", group_to_json(c.group)}, {"components", comps}};
}

Json qtorus_to_json(const QTorusSpec& spec) {
  Json e = Json::array();
  for (long i = 0; i < spec.rank; ++i) {
    Json row = Json::array();
    for (long j = 0; j < spec.rank; ++j) row.push_back(spec.exponent_mod(i, j));
    e.push_back(row);
  }
  return Json{{"L", spec.L}, {"orders", spec.orders}, {"exponents", e}};
}

Json normal_form_to_json(const NormalFormResult& nf) {
  Json P = Json::array();
  for (long i = 0; i < nf.P.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < nf.P.cols(); ++j) row.push_back(long(nf.P(i, j)));
    P.push_back(row);
  }
  Json blocks = Json::array();
  for (const auto& b : nf.blocks)
    blocks.push_back(Json{{"d", b.d}, {"zeta", Json::array({b.zeta.order, b.zeta.exponent})}});
  return Json{{"P", P}, {"blocks", blocks}, {"central_rank", nf.central_rank}};
}

Json graded_module_to_json(const GradedModule& gm) {
  Json dims = Json::object();
  for (std::size_t i = 0; i < gm.elts.size(); ++i) dims[element_key(gm.elts[i])] = gm.dims[i];
  Json blocks = Json::array();
  for (std::size_t k = 0; k < gm.blocks.size(); ++k) {
    Json per = Json::object();
    for (std::size_t gi = 0; gi < gm.elts.size(); ++gi)
      if (gm.blocks[k][gi].size() > 0 && gm.blocks[k][gi].cwiseAbs().maxCoeff() > 0)
        per[element_key(gm.elts[gi])] = matrix_to_json(gm.blocks[k][gi]);
    blocks.push_back(per);
  }
  return Json{{"total_dim", gm.total}, {"component_dims", dims}, {"blocks", blocks}};
}

Json isotypic_to_json(const IsotypicDecomp& dec) {
  Json comps = Json::array();
  for (const auto& c : dec.components)
    comps.push_back(Json{{"label", c.label.exps}, {"multiplicity", c.multiplicity()}});
  return Json{{"dim_N", dec.dim_N()},
              {"components", comps},
              {"kernel_index", long(dec.kernel.index())},
              {"residual", dec.residual}};
}

Json multiloop_to_json(const MultiloopAlgebra& ml) {
  Json basis = Json::array();
  for (const auto& [b, a] : ml.basis)
    basis.push_back(Json{{"base", b}, {"monomial", a}});
  Json brackets = Json::array();
  for (long i = 0; i < ml.dim(); ++i)
    for (long j = i + 1; j < ml.dim(); ++j) {
      auto terms = ml.bracket(i, j);
      if (terms.empty()) continue;
      Json entry{{"i", i}, {"j", j}};
      Json ts = Json::array();
      for (auto& [idx, c] : terms)
        ts.push_back(Json{{"k", idx}, {"c", Json::array({c.real(), c.imag()})}});
      entry["terms"] = ts;
      brackets.push_back(entry);
    }
  return Json{{"dim", ml.dim()},
              {"cutoff", ml.cutoff},
              {"basis", basis},
              {"brackets", brackets}};
}

Json loop_module_to_json(const MultiloopAlgebra& ml, const MultiloopModule& mod,
                         const std::vector<CMatrix>& base_action, const Tolerance& tol) {
  Json comps = Json::array();
  for (const auto& [a, B] : mod.components)
    comps.push_back(Json{{"monomial", a}, {"dim", B.cols()}});
  Json actions = Json::array();
  for (long i = 0; i < ml.dim(); ++i) {
    CMatrix M = loop_action(ml, mod, base_action, i, tol);
    Json entries = Json::array();
    for (long r = 0; r < M.rows(); ++r)
      for (long c = 0; c < M.cols(); ++c)
        if (std::abs(M(r, c)) > tol.eps)
          entries.push_back(Json{{"row", r}, {"col", c},
                                 {"v", Json::array({M(r, c).real(), M(r, c).imag()})}});
    actions.push_back(entries);
  }
  return Json{{"total_dim", mod.total}, {"components", comps}, {"actions", actions}};
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace gcover
