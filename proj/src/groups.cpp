#include "gcover/groups.hpp"

#include <numeric>

#include "gcover/errors.hpp"

namespace gcover {

std::string GrpElt::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

static void check_elt(const FinAbGroup& G, const GrpElt& a, const char* who) {
  if (a.r.size() != G.factors.size())
    throw GroupMismatchError(std::string(who) + ": element does not match group rank");
}

GrpElt group_zero(const FinAbGroup& G) { return GrpElt{std::vector<long>(G.factors.size(), 0)}; }

GrpElt group_add(const FinAbGroup& G, const GrpElt& a, const GrpElt& b) {
  check_elt(G, a, "group_add");
  check_elt(G, b, "group_add");
  GrpElt c = a;
  for (std::size_t i = 0; i < c.r.size(); ++i) c.r[i] = (a.r[i] + b.r[i]) % G.factors[i];
  return c;
}

GrpElt group_neg(const FinAbGroup& G, const GrpElt& a) {
  check_elt(G, a, "group_neg");
  GrpElt c = a;
  for (std::size_t i = 0; i < c.r.size(); ++i) c.r[i] = (G.factors[i] - a.r[i]) % G.factors[i];
  return c;
}

GrpElt group_sub(const FinAbGroup& G, const GrpElt& a, const GrpElt& b) {
  return group_add(G, a, group_neg(G, b));
}

long element_order(const FinAbGroup& G, const GrpElt& a) {
  check_elt(G, a, "element_order");
  long o = 1;
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    long m = G.factors[i];
    long oi = m / std::gcd(m, a.r[i] == 0 ? m : a.r[i]);
    o = std::lcm(o, oi);
  }
  return o;
}

std::vector<GrpElt> all_elements(const FinAbGroup& G) {
  std::vector<GrpElt> out;
  GrpElt cur = group_zero(G);
  long n = long(G.factors.size());
  while (true) {
    out.push_back(cur);
    long i = n - 1;
    while (i >= 0) {
      if (++cur.r[i] < G.factors[i]) break;
      cur.r[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Character trivial_character(const FinAbGroup& G) {
  return Character{G, std::vector<long>(G.factors.size(), 0)};
}

Character char_add(const Character& a, const Character& b) {
  if (a.group != b.group) throw GroupMismatchError("char_add: different groups");
  Character c = a;
  for (std::size_t i = 0; i < c.exps.size(); ++i)
    c.exps[i] = (a.exps[i] + b.exps[i]) % a.group.factors[i];
  return c;
}

Character char_neg(const Character& a) {
  Character c = a;
  for (std::size_t i = 0; i < c.exps.size(); ++i)
    c.exps[i] = (a.group.factors[i] - a.exps[i]) % a.group.factors[i];
  return c;
}

std::vector<Character> all_characters(const FinAbGroup& G) {
  std::vector<Character> out;
  for (const GrpElt& e : all_elements(G)) out.push_back(Character{G, e.r});
  return out;
}

RootOfUnity character_value(const Character& chi, const GrpElt& a) {
  if (chi.exps.size() != a.r.size())
    throw GroupMismatchError("character_value: element does not match character's group");
  long L = 1;
  for (long m : chi.group.factors) L = std::lcm(L, m);
  long k = 0;
  for (std::size_t i = 0; i < a.r.size(); ++i) {
    long m = chi.group.factors[i];
    k = (k + ((chi.exps[i] * a.r[i]) % m) * (L / m)) % L;
  }
  return RootOfUnity(L, k);
}

Subgroup subgroup_from_generators(const FinAbGroup& G, const std::vector<GrpElt>& gens) {
  long N = long(G.factors.size());
  long r = long(gens.size());
  Subgroup S;
  S.ambient = G;
  S.gens = gens;
  for (const GrpElt& g : gens) S.gen_orders.push_back(element_order(G, g));

  // lattice spanned by the generators together with the relation lattice
  IMatrix W(N, r + N);
  for (long j = 0; j < r; ++j) {
    check_elt(G, gens[j], "subgroup_from_generators");
    for (long i = 0; i < N; ++i) W(i, j) = gens[j].r[i];
  }
  for (long i = 0; i < N; ++i) W(i, r + i) = G.factors[i];
  HnfResult h = hermite_normal_form(W);
  S.HL = IMatrix(N, N);
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) S.HL(i, j) = h.H(i, j);

  // C = HL^{-1} diag(m), integral because diag(m) Z^N is a sublattice
  IMatrix C(N, N);
  for (long col = 0; col < N; ++col) {
    std::vector<Int> x(N);
    for (long i = 0; i < N; ++i) {
      Int s = (i == col) ? Int(G.factors[i]) : Int(0);
      for (long j = 0; j < i; ++j) s -= S.HL(i, j) * x[j];
      if (S.HL(i, i) == 0 || s % S.HL(i, i) != 0)
        throw Error("subgroup_from_generators: relation lattice solve failed");
      x[i] = s / S.HL(i, i);
    }
    for (long i = 0; i < N; ++i) C(i, col) = x[i];
  }
  SnfResult snf = smith_normal_form(C);
  S.Uc = snf.U;
  for (long i = 0; i < N; ++i) {
    long d = long(snf.D(i, i));
    S.snf_diag.push_back(d);
    if (d > 1) {
      S.kept.push_back(i);
      S.intrinsic.factors.push_back(d);
    }
  }
  IMatrix Uinv = unimodular_inverse(S.Uc);
  for (long j : S.kept) {
    GrpElt b = group_zero(G);
    // ambient representative of the j-th SNF coordinate vector
    for (long i = 0; i < N; ++i) {
      Int y = 0;
      for (long k = 0; k < N; ++k) y += S.HL(i, k) * Uinv(k, j);
      long m = G.factors[i];
      b.r[i] = long(((y % m) + m) % m);
    }
    S.basis.push_back(b);
  }
  return S;
}

static std::optional<std::vector<Int>> solve_lower_tri(const IMatrix& HL, const GrpElt& y) {
  long N = HL.rows();
  std::vector<Int> x(N);
  for (long i = 0; i < N; ++i) {
    Int s = y.r[i];
    for (long j = 0; j < i; ++j) s -= HL(i, j) * x[j];
    if (HL(i, i) == 0) {
      if (s != 0) return std::nullopt;
      x[i] = 0;
      continue;
    }
    if (s % HL(i, i) != 0) return std::nullopt;
    x[i] = s / HL(i, i);
  }
  return x;
}

bool Subgroup::contains(const GrpElt& x) const {
  if (x.r.size() != ambient.factors.size()) return false;
  return solve_lower_tri(HL, x).has_value();
}

std::vector<long> Subgroup::coords(const GrpElt& x) const {
  auto sol = solve_lower_tri(HL, x);
  if (!sol) throw NotSubgroupError("Subgroup::coords: element not in subgroup");
  long N = long(ambient.factors.size());
  std::vector<long> out;
  for (long j : kept) {
    Int u = 0;
    for (long k = 0; k < N; ++k) u += Uc(j, k) * (*sol)[k];
    long d = snf_diag[j];
    out.push_back(long(((u % d) + d) % d));
  }
  return out;
}

GrpElt Subgroup::from_coords(const std::vector<long>& c) const {
  if (c.size() != basis.size()) throw GroupMismatchError("Subgroup::from_coords: bad length");
  GrpElt x = group_zero(ambient);
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < x.r.size(); ++i)
      x.r[i] = (x.r[i] + c[j] * basis[j].r[i]) % ambient.factors[i];
  return x;
}

std::vector<GrpElt> Subgroup::elements() const {
  std::vector<GrpElt> out;
  for (const GrpElt& c : all_elements(intrinsic)) out.push_back(from_coords(c.r));
  return out;
}

Character psi_restrict(const Character& chi, const Subgroup& S) {
  if (chi.group != S.ambient)
    throw NotSubgroupError("psi_restrict: subgroup does not live in the character's group");
  std::vector<long> exps;
  for (std::size_t j = 0; j < S.basis.size(); ++j) {
    long d = S.intrinsic.factors[j];
    RootOfUnity v = character_value(chi, S.basis[j]);
    if (d % v.order != 0)
      throw Error("psi_restrict: value order does not divide generator order");
    exps.push_back((v.exponent * (d / v.order)) % d);
  }
  return Character{S.intrinsic, exps};
}

}  // namespace gcover
