#include "gcover/quantum_torus.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <random>

#include "gcover/errors.hpp"

namespace gcover {

void validate_spec(const QTorusSpec& spec) {
  long r = spec.rank;
  if (long(spec.orders.size()) != r || long(spec.E.size()) != r)
    throw Error("QTorusSpec: shape mismatch");
  if (spec.L < 1) throw Error("QTorusSpec: L must be positive");
  for (long i = 0; i < r; ++i) {
    if (long(spec.E[i].size()) != r) throw Error("QTorusSpec: shape mismatch");
    if (spec.orders[i] < 1) throw Error("QTorusSpec: generator orders must be positive");
    if (spec.exponent_mod(i, i) != 0) throw Error("QTorusSpec: diagonal must vanish");
    for (long j = 0; j < r; ++j) {
      if ((spec.exponent_mod(i, j) + spec.exponent_mod(j, i)) % spec.L != 0)
        throw Error("QTorusSpec: q_ij q_ji != 1");
      long g = std::gcd(spec.orders[i], spec.orders[j]);
      if ((spec.exponent_mod(i, j) * g) % spec.L != 0)
        throw Error("QTorusSpec: q_ij^gcd(s_i,s_j) != 1");
    }
  }
}

CMatrix twist_monomial(const TwistSystem& ts, const std::vector<long>& a) {
  long n = ts.module_dim();
  CMatrix M = CMatrix::Identity(n, n);
  for (long i = 0; i < ts.rank(); ++i) {
    long e = ((a[i] % ts.orders[i]) + ts.orders[i]) % ts.orders[i];
    for (long k = 0; k < e; ++k) M = M * ts.ops[i];
  }
  return M;
}

static void check_category_c(const TwistSystem& ts, const Tolerance& tol) {
  for (long i = 0; i < ts.rank(); ++i) {
    CMatrix P = CMatrix::Identity(ts.module_dim(), ts.module_dim());
    for (long k = 0; k < ts.orders[i]; ++k) P = P * ts.ops[i];
    if (!approx_equal(P, CMatrix::Identity(P.rows(), P.cols()), Tolerance{tol.eps * 100, 0}))
      throw NotCategoryCError("twist operator " + std::to_string(i) +
                              " is not of finite order " + std::to_string(ts.orders[i]));
  }
}

QTorusSpec qmatrix_from_twists(const TwistSystem& ts, const Tolerance& tol) {
  check_category_c(ts, tol);
  long r = ts.rank();
  long n = ts.module_dim();
  std::vector<std::vector<RootOfUnity>> q(r, std::vector<RootOfUnity>(r));
  long L = 1;
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      CMatrix ij = ts.ops[i] * ts.ops[j];
      CMatrix ji = ts.ops[j] * ts.ops[i];
      CMatrix D = ij * ji.inverse();
      Cx val = D.trace() / double(n);
      double scale = mat_scale(D);
      if ((D - val * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol.eps * 1000 * scale)
        throw NotScalarCommutatorError(
            "commutator of twist operators is not scalar; module is not simple over the torus");
      long g = std::gcd(ts.orders[i], ts.orders[j]);
      q[i][j] = snap_root_of_order_dividing(val, g, tol);
      q[j][i] = q[i][j].inverse();
      L = std::lcm(L, q[i][j].order);
    }
  QTorusSpec spec;
  spec.rank = r;
  spec.orders = ts.orders;
  spec.L = L;
  spec.E.assign(r, std::vector<long>(r, 0));
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      long e = q[i][j].exponent * (L / q[i][j].order);
      spec.E[i][j] = e;
      spec.E[j][i] = -e;
    }
  validate_spec(spec);
  return spec;
}

IntLattice center_lattice(const QTorusSpec& spec) {
  long r = spec.rank;
  IMatrix Et(r, r);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) Et(i, j) = spec.E[j][i];
  return lattice_mod_kernel(Et, spec.L);
}

GammaMap make_gamma(const QTorusSpec& spec) {
  validate_spec(spec);
  GammaMap gm;
  gm.spec = spec;
  gm.Hgroup = FinAbGroup{spec.orders};
  gm.kernel = center_lattice(spec);
  return gm;
}

Character gamma_of(const GammaMap& gm, const std::vector<long>& a) {
  const QTorusSpec& spec = gm.spec;
  long r = spec.rank;
  if (long(a.size()) != r) throw Error("gamma_of: wrong exponent length");
  std::vector<long> exps(r, 0);
  for (long j = 0; j < r; ++j) {
    long acc = 0;  // (a^T E)_j mod L
    for (long i = 0; i < r; ++i)
      acc = ((acc + a[i] * spec.E[i][j]) % spec.L + spec.L) % spec.L;
    long s = spec.orders[j];
    if ((acc * s) % spec.L != 0)
      throw Error("gamma_of: value is not well-defined on the generator relations");
    exps[j] = (acc * s / spec.L) % s;
  }
  return Character{gm.Hgroup, exps};
}

// ---------------------------------------------------------------------------
// skew normal form over Z/L by unimodular congruence

namespace {

struct SkewReducer {
  IMatrix A;  // exact antisymmetric integer lift
  IMatrix P;
  long L;
  long r;
  std::mt19937_64* rng = nullptr;

  void reduce_entries() {
    for (long i = 0; i < r; ++i) {
      A(i, i) = 0;
      for (long j = i + 1; j < r; ++j) {
        Int v = A(i, j) % L;
        if (v < 0) v += L;
        if (2 * v > L) v -= L;  // representative in (-L/2, L/2]
        A(i, j) = v;
        A(j, i) = -v;
      }
    }
  }

  long order_of(const Int& v) const {
    Int m = v % L;
    if (m < 0) m += L;
    if (m == 0) return 1;
    return long(Int(L / boost::multiprecision::gcd(m, Int(L))));
  }

  void congruence_swap(long i, long j) {
    if (i == j) return;
    A.swap_rows(i, j);
    A.swap_cols(i, j);
    P.swap_rows(i, j);
  }
  // row dst += c row src, mirrored on columns
  void congruence_add(long dst, long src, const Int& c) {
    A.add_row_multiple(dst, src, c);
    A.add_col_multiple(dst, src, c);
    P.add_row_multiple(dst, src, c);
  }
  // rows (a,b) <- [[al, be],[ga, de]] * rows (a,b), det = +-1, mirrored
  void congruence_mix(long a, long b, const Int& al, const Int& be, const Int& ga,
                      const Int& de) {
    for (long j = 0; j < r; ++j) {
      Int ra = A(a, j), rb = A(b, j);
      A(a, j) = al * ra + be * rb;
      A(b, j) = ga * ra + de * rb;
    }
    for (long i = 0; i < r; ++i) {
      Int ca = A(i, a), cb = A(i, b);
      A(i, a) = al * ca + be * cb;
      A(i, b) = ga * ca + de * cb;
    }
    for (long j = 0; j < P.cols(); ++j) {
      Int ra = P(a, j), rb = P(b, j);
      P(a, j) = al * ra + be * rb;
      P(b, j) = ga * ra + de * rb;
    }
  }

  static Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
      x = a >= 0 ? 1 : -1;
      y = 0;
      return a >= 0 ? a : Int(-a);
    }
    Int x1, y1;
    Int g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
  }

  // gcd-improve the pivot at (p, q) against entry at (row_keep, k) by mixing
  // rows (mix_row, k)
  void improve(long p, long q, long mix_row, long k) {
    Int piv = A(p, q);
    Int other = (mix_row == q) ? A(p, k) : A(q, k);
    Int x, y;
    Int g = egcd(piv, other, x, y);
    congruence_mix(mix_row, k, x, y, -other / g, piv / g);
  }

  bool divides_mod(const Int& g, const Int& v) const {
    Int m = v % g;
    return m == 0;
  }

  std::pair<long, long> pick_pivot(long pos) {
    long best_ord = 1;
    std::vector<std::pair<long, long>> cands;
    for (long i = pos; i < r; ++i)
      for (long j = i + 1; j < r; ++j) {
        long o = order_of(A(i, j));
        if (o <= 1) continue;
        if (o > best_ord) {
          best_ord = o;
          cands.clear();
        }
        if (o == best_ord) cands.emplace_back(i, j);
      }
    if (cands.empty()) return {-1, -1};
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
      return cands[pick(*rng)];
    }
    return cands.front();
  }

  NormalFormResult run() {
    NormalFormResult out;
    reduce_entries();
    long pos = 0;
    while (pos + 1 < r) {
      auto [pi, pj] = pick_pivot(pos);
      if (pi < 0) break;
      congruence_swap(pos, pi);
      congruence_swap(pos + 1, pj == pos ? pi : pj);
      long p = pos, q = pos + 1;
      while (true) {
        // improvement: the pivot gcd must divide its whole row pair
        while (true) {
          reduce_entries();
          Int g = boost::multiprecision::gcd(boost::multiprecision::abs(A(p, q)), Int(L));
          long fix_k = -1, fix_row = -1;
          for (long k = q + 1; k < r && fix_k < 0; ++k) {
            if (!divides_mod(g, A(p, k))) { fix_k = k; fix_row = q; }
            else if (!divides_mod(g, A(q, k))) { fix_k = k; fix_row = p; }
          }
          if (fix_k < 0) break;
          // mixing rows (q,k) reaches gcd(A(p,q), A(p,k)) at the pivot;
          // mixing rows (p,k) likewise via A(q,p) = -A(p,q)
          if (fix_row == q)
            improve(p, q, q, fix_k);
          else {
            Int piv = A(q, p);
            Int other = A(q, fix_k);
            Int x, y;
            Int g2 = egcd(piv, other, x, y);
            congruence_mix(p, fix_k, x, y, -other / g2, piv / g2);
          }
        }
        // clear both pivot rows beyond the block
        Int piv = A(p, q);
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(piv), Int(L));
        for (long k = q + 1; k < r; ++k) {
          if (A(p, k) % L != 0) {
            Int c = modsolve(piv, -A(p, k));
            congruence_add(k, q, c);
          }
          if (A(q, k) % L != 0) {
            Int c = modsolve(-piv, -A(q, k));
            congruence_add(k, p, c);
          }
        }
        reduce_entries();
        // keep later block orders no larger: pivot gcd must divide the rest
        bool dirty = false;
        for (long i = q + 1; i < r && !dirty; ++i)
          for (long j = i + 1; j < r && !dirty; ++j)
            if (!divides_mod(g, A(i, j))) {
              congruence_add(p, i, 1);
              dirty = true;
            }
        if (!dirty) break;  // the added row strictly improves the pivot next pass
      }
      NormalFormBlock blk;
      Int e = A(p, q) % L;
      if (e < 0) e += L;
      blk.zeta = RootOfUnity(L, long(e));
      blk.d = blk.zeta.order;
      out.blocks.push_back(blk);
      pos += 2;
    }
    out.P = P;
    out.central_rank = r - 2 * long(out.blocks.size());
    out.transformed.assign(r, std::vector<long>(r, 0));
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < r; ++j) {
        Int v = A(i, j) % L;
        if (v < 0) v += L;
        out.transformed[i][j] = long(v);
      }
    return out;
  }

  // c with piv * c = rhs mod L (requires gcd(piv, L) | rhs)
  Int modsolve(const Int& piv, const Int& rhs) {
    Int x, y;
    Int g = egcd(piv % L, Int(L), x, y);
    if (rhs % g != 0) throw Error("normal_form: clearing step is infeasible");
    Int c = (rhs / g) * x % (L / g);
    return c;
  }
};

}  // namespace

static NormalFormResult normal_form_impl(const QTorusSpec& spec, std::mt19937_64* rng) {
  validate_spec(spec);
  SkewReducer red;
  red.L = spec.L;
  red.r = spec.rank;
  red.rng = rng;
  red.A = IMatrix(spec.rank, spec.rank);
  for (long i = 0; i < spec.rank; ++i)
    for (long j = 0; j < spec.rank; ++j) red.A(i, j) = spec.E[i][j];
  red.P = IMatrix::identity(spec.rank);
  NormalFormResult out = red.run();
  // exactness audit: P unimodular and P E P^T matches the reported shape
  Int dp = determinant(out.P);
  if (dp != 1 && dp != -1) throw Error("normal_form: transform is not unimodular");
  IMatrix Eint(spec.rank, spec.rank);
  for (long i = 0; i < spec.rank; ++i)
    for (long j = 0; j < spec.rank; ++j) Eint(i, j) = spec.E[i][j];
  IMatrix T = out.P * Eint * out.P.transpose();
  for (long i = 0; i < spec.rank; ++i)
    for (long j = 0; j < spec.rank; ++j) {
      Int v = (T(i, j) - out.transformed[i][j]) % spec.L;
      if (v != 0) throw Error("normal_form: congruence audit failed");
    }
  return out;
}

NormalFormResult normal_form(const QTorusSpec& spec) { return normal_form_impl(spec, nullptr); }

NormalFormResult normal_form_randomized(const QTorusSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return normal_form_impl(spec, &rng);
}

StandardModule standard_simple_module(const std::vector<NormalFormBlock>& blocks,
                                      const std::vector<Cx>& chi_x,
                                      const std::vector<Cx>& chi_y,
                                      const std::vector<Cx>& chi_z) {
  for (Cx c : chi_x)
    if (std::abs(c) == 0.0) throw ZeroCharacterError("central character value is zero");
  for (Cx c : chi_y)
    if (std::abs(c) == 0.0) throw ZeroCharacterError("central character value is zero");
  for (Cx c : chi_z)
    if (std::abs(c) == 0.0) throw ZeroCharacterError("central character value is zero");
  if (chi_x.size() != blocks.size() || chi_y.size() != blocks.size())
    throw Error("standard_simple_module: one character value per block expected");

  StandardModule mod;
  std::vector<CMatrix> xs, ys;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    long d = blocks[b].d;
    CMatrix X = CMatrix::Zero(d, d);
    Cx scale = std::exp(std::log(chi_x[b]) / double(d));
    for (long t = 0; t < d; ++t) X(t, t) = scale * blocks[b].zeta.pow(t).value();
    CMatrix Y = CMatrix::Zero(d, d);
    for (long t = 0; t + 1 < d; ++t) Y(t + 1, t) = 1.0;
    Y(0, d - 1) = chi_y[b];
    xs.push_back(X);
    ys.push_back(Y);
    mod.dim *= d;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    CMatrix Xf = CMatrix::Identity(1, 1), Yf = CMatrix::Identity(1, 1);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      const CMatrix& xc = (c == b) ? xs[c] : CMatrix(CMatrix::Identity(xs[c].rows(), xs[c].rows()));
      const CMatrix& yc = (c == b) ? ys[c] : CMatrix(CMatrix::Identity(ys[c].rows(), ys[c].rows()));
      Xf = kron(Xf, xc);
      Yf = kron(Yf, yc);
    }
    mod.gens.push_back(Xf);
    mod.gens.push_back(Yf);
  }
  for (Cx z : chi_z) mod.gens.push_back(z * CMatrix::Identity(mod.dim, mod.dim));
  return mod;
}

CMatrix IsotypicDecomp::monomial_on_N(const std::vector<long>& a) const {
  CMatrix M = CMatrix::Identity(dim_N(), dim_N());
  for (long i = 0; i < long(t_on_N.size()); ++i) {
    long e = ((a[i] % spec.orders[i]) + spec.orders[i]) % spec.orders[i];
    for (long k = 0; k < e; ++k) M = M * t_on_N[i];
  }
  return M;
}

IsotypicDecomp isotypic_decompose(const TwistSystem& ts, long module_dim,
                                  const Tolerance& tol) {
  long n = ts.module_dim();
  long r = ts.rank();
  if (r > 0 && n != module_dim)
    throw Error("isotypic_decompose: module dimension mismatch");
  if (r == 0 && module_dim > 0) n = module_dim;
  check_category_c(ts, tol);

  IsotypicDecomp dec;
  dec.spec = qmatrix_from_twists(ts, tol);
  GammaMap gm = make_gamma(dec.spec);
  dec.Hgroup = gm.Hgroup;
  dec.kernel = gm.kernel;
  dec.coset_reps = coset_transversal(dec.kernel);

  auto monomial = [&](const std::vector<long>& a) -> CMatrix {
    if (r == 0) return CMatrix::Identity(n, n);
    return twist_monomial(ts, a);
  };

  long S = 1;
  for (long s : ts.orders) S = std::lcm(S, s);

  // central blocks: joint eigenspaces of the kernel monomials
  struct Block {
    CMatrix basis;
    std::vector<RootOfUnity> label;
  };
  std::vector<Block> blocks{{CMatrix::Identity(n, n), {}}};
  for (long c = 0; c < dec.kernel.basis.cols(); ++c) {
    std::vector<long> k(r);
    for (long i = 0; i < r; ++i) k[i] = long(dec.kernel.basis(i, c));
    CMatrix Tk = monomial(k);
    // (T^k)^S is a scalar root of unity of order dividing L; its order
    // bounds the eigenvalue order of T^k
    CMatrix Pw = CMatrix::Identity(n, n);
    for (long t = 0; t < S; ++t) Pw = Pw * Tk;
    Cx scal = Pw.trace() / double(n);
    if ((Pw - scal * CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() >
        tol.eps * 1000 * mat_scale(Pw))
      throw NotCategoryCError("central monomial power is not scalar");
    long u = snap_root_of_unity(scal, dec.spec.L, Tolerance{1e-6, tol.seed}).order;
    long m = S * u;
    std::vector<Block> next;
    for (Block& b : blocks) {
      CMatrix Tloc = b.basis.adjoint() * Tk * b.basis;
      if ((Tk * b.basis - b.basis * Tloc).cwiseAbs().maxCoeff() >
          tol.eps * 1000 * mat_scale(Tk))
        throw Error("isotypic_decompose: central monomial does not preserve a block");
      for (auto& [zeta, proj] : finite_order_eigendecomposition(Tloc, m, tol)) {
        CMatrix sub = column_space(proj, tol);
        Block nb;
        nb.basis = b.basis * sub;
        nb.label = b.label;
        nb.label.push_back(zeta);
        next.push_back(std::move(nb));
      }
    }
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.label < b.label; });

  // home block: the lexicographically first label.  A simple copy of N
  // inside it is cut out by a spectral projection of a random element of the
  // commutant of the torus action on the block (the block is isotypic, so
  // generic eigenspaces are single copies).
  const CMatrix& B0 = blocks.front().basis;
  long dB0 = B0.cols();
  std::vector<std::pair<CMatrix, CMatrix>> comm_pairs;
  for (long i = 0; i < r; ++i) {
    CMatrix Tloc = B0.adjoint() * ts.ops[i] * B0;
    comm_pairs.emplace_back(Tloc, Tloc);
  }
  std::vector<CMatrix> comm = solve_intertwiners(comm_pairs, dB0, dB0, tol);
  long mult0 = std::lround(std::sqrt(double(comm.size())));
  if (mult0 * mult0 != long(comm.size()))
    throw Error("isotypic_decompose: home-block commutant is not a matrix algebra");
  CMatrix Nloc;
  if (mult0 == 1) {
    Nloc = CMatrix::Identity(dB0, dB0);
  } else {
    long target = dB0 / mult0;
    std::mt19937_64 rng(tol.seed + 0x9e3779b9);
    bool done = false;
    for (int attempt = 0; attempt < 8 && !done; ++attempt) {
      CMatrix R = CMatrix::Zero(dB0, dB0);
      for (const CMatrix& K : comm) {
        std::normal_distribution<double> d(0.0, 1.0);
        R += Cx(d(rng), d(rng)) * K;
      }
      Eigen::ComplexEigenSolver<CMatrix> es(R);
      // smallest eigenvalue cluster
      std::vector<long> idx(dB0);
      std::iota(idx.begin(), idx.end(), 0);
      double sep = 1e-6 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      std::vector<std::vector<long>> clusters;
      for (long i : idx) {
        bool placed = false;
        for (auto& c : clusters)
          if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(c.front())) < sep) {
            c.push_back(i);
            placed = true;
            break;
          }
        if (!placed) clusters.push_back({i});
      }
      std::sort(clusters.begin(), clusters.end(),
                [](auto& a, auto& b) { return a.size() < b.size(); });
      for (auto& c : clusters) {
        if (long(c.size()) != target) continue;
        CMatrix V(dB0, long(c.size()));
        for (std::size_t j = 0; j < c.size(); ++j) V.col(long(j)) = es.eigenvectors().col(c[j]);
        Nloc = column_space(V, tol);
        done = true;
        break;
      }
    }
    if (!done)
      throw Error("isotypic_decompose: failed to split a simple copy out of the home block");
  }
  dec.N_basis = B0 * Nloc;
  long dN = dec.N_basis.cols();
  for (long i = 0; i < r; ++i) {
    CMatrix ti = dec.N_basis.adjoint() * ts.ops[i] * dec.N_basis;
    if ((ts.ops[i] * dec.N_basis - dec.N_basis * ti).cwiseAbs().maxCoeff() >
        tol.eps * 1000 * mat_scale(ts.ops[i]))
      throw Error("isotypic_decompose: N is not invariant under the torus");
    dec.t_on_N.push_back(ti);
  }

  // label each block by the character twisting N onto it
  auto characters = all_characters(dec.Hgroup);
  std::vector<std::pair<Character, std::vector<CMatrix>>> comps;
  long total_check = 0;
  for (Block& b : blocks) {
    long dB = b.basis.cols();
    bool found = false;
    for (const Character& h : characters) {
      std::vector<std::pair<CMatrix, CMatrix>> pairs;
      for (long i = 0; i < r; ++i) {
        GrpElt ei;
        ei.r.assign(r, 0);
        ei.r[i] = 1;
        Cx hv = character_value(h, ei).value();
        CMatrix Tloc = b.basis.adjoint() * ts.ops[i] * b.basis;
        pairs.emplace_back(hv * dec.t_on_N[i], Tloc);
      }
      std::vector<CMatrix> xis = solve_intertwiners(pairs, dB, dN, tol);
      if (xis.empty()) continue;
      if (long(xis.size()) * dN != dB)
        throw LabelNotInHError("isotypic_decompose: block dimension is not a multiple of dim N");
      std::vector<CMatrix> embeddings;
      for (const CMatrix& xi : xis) embeddings.push_back(b.basis * xi);
      comps.emplace_back(h, std::move(embeddings));
      total_check += dB;
      found = true;
      break;
    }
    if (!found)
      throw LabelNotInHError("isotypic_decompose: no character labels a central block");
  }
  if (total_check != n) throw Error("isotypic_decompose: components do not tile the module");

  // assemble U and verify the conjugated action shape
  dec.U = CMatrix::Zero(n, n);
  long col = 0;
  for (auto& [h, embeds] : comps) {
    dec.components.push_back(IsotypicComponent{h, embeds});
    for (const CMatrix& phi : embeds) {
      dec.U.block(0, col, n, dN) = phi;
      col += dN;
    }
  }
  if (!is_invertible(dec.U, tol)) throw Error("isotypic_decompose: change of basis is singular");

  CMatrix Uinv = dec.U.inverse();
  double res = 0;
  for (long i = 0; i < r; ++i) {
    CMatrix conj = Uinv * ts.ops[i] * dec.U;
    CMatrix expect = CMatrix::Zero(n, n);
    long off = 0;
    for (const auto& comp : dec.components) {
      GrpElt ei;
      ei.r.assign(r, 0);
      ei.r[i] = 1;
      Cx hv = character_value(comp.label, ei).value();
      for (long j = 0; j < comp.multiplicity(); ++j) {
        expect.block(off, off, dN, dN) = hv * dec.t_on_N[i];
        off += dN;
      }
    }
    res = std::max(res, (conj - expect).cwiseAbs().maxCoeff());
  }
  dec.residual = res;
  if (res > tol.eps * 1e5)
    throw Error("isotypic_decompose: conjugated action does not match the product form");
  return dec;
}

}  // namespace gcover
