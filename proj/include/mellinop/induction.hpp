#pragma once

#include <vector>

#include "mellinop/characters.hpp"
#include "mellinop/group.hpp"
#include "mellinop/group_algebra.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

/// A unitary representation of a subgroup P of G, one matrix per element of P.
struct SubgroupRep {
  GroupPtr group;
  std::vector<int> subgroup;  // sorted element indices of P
  std::vector<CMatrix> rep;   // aligned with subgroup

  Eigen::Index dim() const { return rep.empty() ? 0 : rep.front().rows(); }
  /// Representation matrix at an element of P.
  const CMatrix& at(int element) const;
  /// Closure, homomorphism, rep(e) = I and unitarity, each within tol.
  void validate(double tol = 1e-12) const;

  static SubgroupRep trivial(GroupPtr group, std::vector<int> subgroup);
  /// 1-dim character of the cyclic subgroup <generator>: g^k -> exp(2 pi i j k / m).
  static SubgroupRep cyclic_character(GroupPtr group, int generator, int j);
};

/// Induced representation on functions over G/P with values in the fiber.
/// Basis index = coset * fiber_dim + fiber component.
struct InducedRep {
  GroupPtr group;
  std::vector<int> subgroup;
  std::vector<int> transversal;  // coset representatives sigma(x)
  Eigen::Index fiber_dim = 0;
  Eigen::Index total_dim = 0;
  std::vector<CMatrix> matrices;       // one per group element
  std::vector<double> normalization;   // N(p) per subgroup element; 1 for finite groups

  int index() const { return static_cast<int>(transversal.size()); }
};

/// Coset representatives by first-occurrence scan in element order.
std::vector<int> coset_transversal(const FiniteGroup& g, const std::vector<int>& subgroup);

/// rho(g) maps coset x to gx; its block is rho_bar(p) where g sigma(x) = sigma(gx) p.
InducedRep induce(const SubgroupRep& sr);
/// Same, with a caller-supplied transversal (one representative per coset).
InducedRep induce(const SubgroupRep& sr, std::vector<int> transversal);

/// Traces of per-element matrices on the table's classes.
ClassFunction character_of(const std::vector<CMatrix>& matrices, const CharacterTable& t);
ClassFunction rep_character(const InducedRep& ir, const CharacterTable& t);
ClassFunction rep_character(const InducedRep& ir);

struct FrobeniusPair {
  Complex induced_side;     // <chi_Ind, chi_sigma>_G
  Complex restricted_side;  // <chi_rho_bar, Res chi_sigma>_P
  int multiplicity = 0;
};

/// Both sides of Frobenius reciprocity per irrep of G. Throws NumericalError
/// when a side is not an integer or the sides disagree.
std::vector<FrobeniusPair> frobenius_check(const SubgroupRep& sr, const InducedRep& ir, const CharacterTable& t);

/// A vector in the induced space viewed as a fiber vector per coset representative.
using CosetSection = std::vector<CVector>;

/// sum_x (psi1(x) | psi2(x)), antilinear in the first argument.
Complex coset_inner_product(const CosetSection& psi1, const CosetSection& psi2);

/// rho(g) psi.
CosetSection act(const InducedRep& ir, int g, const CosetSection& psi);

CVector flatten(const CosetSection& psi);
CosetSection unflatten(const CVector& v, Eigen::Index fiber_dim);

/// sum_g f(g) (x) rho(g): the integrated form at alpha = 1.
CMatrix mellin_rep(const GroupFunction<Complex>& f, const InducedRep& ir);

/// Nonzero isotypic projectors (dim sigma / |G|) sum_g conj(chi_sigma(g)) rho(g).
std::vector<CMatrix> isotypic_projectors(const InducedRep& ir, const CharacterTable& t);

/// max over isotypic projectors Pi (lifted to C^dim (x) V) of || (I - Pi) M Pi ||,
/// M = mellin_rep(f, ir).
double invariant_subspace_check(const InducedRep& ir, const GroupFunction<Complex>& f, const CharacterTable& t);
double invariant_subspace_check(const InducedRep& ir, const GroupFunction<Complex>& f);

}  // namespace mellinop
