#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcover/intmat.hpp"
#include "gcover/roots.hpp"

namespace gcover {

/// Finite abelian group presented by invariant factors (m_1, ..., m_N);
/// elements are residue tuples.  The trivial group has an empty factor list.
struct FinAbGroup {
  std::vector<long> factors;

  long order() const {
    long o = 1;
    for (long m : factors) o *= m;
    return o;
  }
  std::size_t rank() const { return factors.size(); }
  bool operator==(const FinAbGroup& o) const { return factors == o.factors; }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

struct GrpElt {
  std::vector<long> r;

  bool operator==(const GrpElt& o) const { return r == o.r; }
  bool operator!=(const GrpElt& o) const { return !(*this == o); }
  bool operator<(const GrpElt& o) const { return r < o.r; }
  bool is_zero() const {
    for (long x : r)
      if (x != 0) return false;
    return true;
  }
  std::string str() const;
};

GrpElt group_zero(const FinAbGroup& G);
GrpElt group_add(const FinAbGroup& G, const GrpElt& a, const GrpElt& b);
GrpElt group_neg(const FinAbGroup& G, const GrpElt& a);
GrpElt group_sub(const FinAbGroup& G, const GrpElt& a, const GrpElt& b);
long element_order(const FinAbGroup& G, const GrpElt& a);
std::vector<GrpElt> all_elements(const FinAbGroup& G);

/// Character of G under the fixed pairing <c, a> = prod zeta_{m_i}^{c_i a_i}.
struct Character {
  FinAbGroup group;
  std::vector<long> exps;

  bool is_trivial() const {
    for (long c : exps)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const Character& o) const { return group == o.group && exps == o.exps; }
};

Character trivial_character(const FinAbGroup& G);
Character char_add(const Character& a, const Character& b);
Character char_neg(const Character& a);
std::vector<Character> all_characters(const FinAbGroup& G);

RootOfUnity character_value(const Character& chi, const GrpElt& a);

/// Subgroup generated by a list of elements, carrying intrinsic invariant
/// factor coordinates (via Smith normal form) together with the orders of the
/// generators it was built from.
struct Subgroup {
  FinAbGroup ambient;
  std::vector<GrpElt> gens;
  std::vector<long> gen_orders;

  FinAbGroup intrinsic;          // invariant factors > 1 (empty = trivial subgroup)
  std::vector<GrpElt> basis;     // independent elements, basis[j] has order intrinsic.factors[j]

  long order() const { return intrinsic.order(); }
  bool contains(const GrpElt& x) const;
  std::vector<long> coords(const GrpElt& x) const;  // intrinsic coordinates
  GrpElt from_coords(const std::vector<long>& c) const;
  std::vector<GrpElt> elements() const;

  // solve data: HL * x = lift(y) detects membership, Uc maps x to SNF coords
  IMatrix HL;
  IMatrix Uc;
  std::vector<long> snf_diag;     // all N invariant factors incl. 1's
  std::vector<long> kept;         // indices with diag > 1
};

Subgroup subgroup_from_generators(const FinAbGroup& G, const std::vector<GrpElt>& gens);

/// Restriction of a character of G to a subgroup, expressed in the subgroup's
/// intrinsic coordinates.  This is the epimorphism
/// Hom(G, C*) -> Hom(S, C*) induced by inclusion.
Character psi_restrict(const Character& chi, const Subgroup& S);

}  // namespace gcover
