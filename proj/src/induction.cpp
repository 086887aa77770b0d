#include "mellinop/induction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mellinop/errors.hpp"

namespace mellinop {
namespace {

int position_in(const std::vector<int>& sorted, int x) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return (it != sorted.end() && *it == x) ? static_cast<int>(it - sorted.begin()) : -1;
}

}  // namespace

const CMatrix& SubgroupRep::at(int element) const {
  const int i = position_in(subgroup, element);
  if (i < 0) throw InputError("subgroup rep: element is not in the subgroup");
  return rep[i];
}

void SubgroupRep::validate(double tol) const {
  if (!group) throw InputError("subgroup rep: null group");
  if (!std::is_sorted(subgroup.begin(), subgroup.end()) ||
      std::adjacent_find(subgroup.begin(), subgroup.end()) != subgroup.end())
    throw InputError("subgroup rep: subgroup indices must be sorted and unique");
  if (!is_subgroup(*group, subgroup)) throw InputError("subgroup rep: index set is not closed under product/inverse");
  if (rep.size() != subgroup.size()) throw InputError("subgroup rep: need one matrix per subgroup element");
  const Eigen::Index d = dim();
  if (d < 1) throw InputError("subgroup rep: empty fiber");
  for (const auto& m : rep)
    if (m.rows() != d || m.cols() != d || !m.allFinite())
      throw InputError("subgroup rep: matrices must be finite and of equal square size");
  const CMatrix id = CMatrix::Identity(d, d);
  if ((at(group->identity()) - id).cwiseAbs().maxCoeff() > tol) throw InputError("subgroup rep: rep(e) != I");
  for (const auto& m : rep)
    if ((m.adjoint() * m - id).cwiseAbs().maxCoeff() > tol) throw InputError("subgroup rep: matrix is not unitary");
  for (int a : subgroup)
    for (int b : subgroup)
      if ((at(a) * at(b) - at(group->multiply(a, b))).cwiseAbs().maxCoeff() > tol) {
        std::ostringstream msg;
        msg << "subgroup rep: not a homomorphism at (" << group->label(a) << ", " << group->label(b) << ")";
        throw InputError(msg.str());
      }
}

SubgroupRep SubgroupRep::trivial(GroupPtr group, std::vector<int> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  std::vector<CMatrix> rep(subgroup.size(), CMatrix::Identity(1, 1));
  return {std::move(group), std::move(subgroup), std::move(rep)};
}

SubgroupRep SubgroupRep::cyclic_character(GroupPtr group, int generator, int j) {
  const int m = element_order(*group, generator);
  std::vector<int> sub = generated_subgroup(*group, {generator});
  std::vector<CMatrix> rep(sub.size(), CMatrix::Identity(1, 1));
  int x = group->identity();
  for (int k = 0; k < m; ++k) {
    rep[position_in(sub, x)](0, 0) = std::polar(1.0, 2.0 * std::numbers::pi * j * k / m);
    x = group->multiply(x, generator);
  }
  return {std::move(group), std::move(sub), std::move(rep)};
}

std::vector<int> coset_transversal(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int p : subgroup) covered[g.multiply(x, p)] = 1;
  }
  return reps;
}

InducedRep induce(const SubgroupRep& sr) {
  sr.validate();
  return induce(sr, coset_transversal(*sr.group, sr.subgroup));
}

InducedRep induce(const SubgroupRep& sr, std::vector<int> transversal) {
  sr.validate();
  const FiniteGroup& g = *sr.group;
  const auto index = static_cast<int>(g.order() / static_cast<int>(sr.subgroup.size()));
  if (static_cast<int>(transversal.size()) != index) throw InputError("induce: transversal size differs from [G:P]");

  // coset id of every element
  std::vector<int> coset_of(g.order(), -1);
  for (int i = 0; i < index; ++i) {
    const int x = transversal[i];
    if (x < 0 || x >= g.order()) throw InputError("induce: transversal element out of range");
    for (int p : sr.subgroup) {
      const int y = g.multiply(x, p);
      if (coset_of[y] >= 0) throw InputError("induce: two representatives share a coset");
      coset_of[y] = i;
    }
  }

  InducedRep ir;
  ir.group = sr.group;
  ir.subgroup = sr.subgroup;
  ir.transversal = std::move(transversal);
  ir.fiber_dim = sr.dim();
  ir.total_dim = index * ir.fiber_dim;
  ir.normalization.assign(sr.subgroup.size(), 1.0);
  const Eigen::Index d = ir.fiber_dim;
  for (int el = 0; el < g.order(); ++el) {
    CMatrix m = CMatrix::Zero(ir.total_dim, ir.total_dim);
    for (int i = 0; i < index; ++i) {
      const int gx = g.multiply(el, ir.transversal[i]);
      const int j = coset_of[gx];
      // g sigma(x_i) = sigma(x_j) p
      const int p = g.multiply(g.inverse(ir.transversal[j]), gx);
      m.block(j * d, i * d, d, d) = ir.normalization[position_in(sr.subgroup, p)] * sr.at(p);
    }
    ir.matrices.push_back(std::move(m));
  }
  return ir;
}

ClassFunction character_of(const std::vector<CMatrix>& matrices, const CharacterTable& t) {
  if (static_cast<int>(matrices.size()) != t.order()) throw InputError("character: one matrix per element required");
  ClassFunction chi(t.classes.size());
  for (std::size_t c = 0; c < t.classes.size(); ++c) chi[c] = matrices[t.classes[c].front()].trace();
  return chi;
}

ClassFunction rep_character(const InducedRep& ir, const CharacterTable& t) { return character_of(ir.matrices, t); }

ClassFunction rep_character(const InducedRep& ir) {
  CharacterTable classes_only;
  classes_only.classes = conjugacy_classes(*ir.group);
  classes_only.class_of.assign(ir.group->order(), -1);
  for (std::size_t c = 0; c < classes_only.classes.size(); ++c)
    for (int x : classes_only.classes[c]) classes_only.class_of[x] = static_cast<int>(c);
  return character_of(ir.matrices, classes_only);
}

std::vector<FrobeniusPair> frobenius_check(const SubgroupRep& sr, const InducedRep& ir, const CharacterTable& t) {
  if (t.order() != ir.group->order()) throw InputError("frobenius_check: table belongs to a different group");
  const ClassFunction chi_ind = rep_character(ir, t);
  std::vector<FrobeniusPair> out;
  for (std::size_t s = 0; s < t.characters.size(); ++s) {
    FrobeniusPair fp;
    fp.induced_side = class_inner_product(t, chi_ind, t.characters[s]);
    Complex acc = 0.0;
    for (int p : sr.subgroup) acc += sr.at(p).trace() * std::conj(t.at(static_cast<int>(s), p));
    fp.restricted_side = acc / static_cast<double>(sr.subgroup.size());
    const double m = std::round(fp.induced_side.real());
    if (std::abs(fp.induced_side - m) > 1e-8 || std::abs(fp.restricted_side - m) > 1e-8) {
      std::ostringstream msg;
      msg << "frobenius_check: irrep " << s << " gives " << fp.induced_side << " vs " << fp.restricted_side;
      throw NumericalError(msg.str());
    }
    fp.multiplicity = static_cast<int>(m);
    out.push_back(fp);
  }
  return out;
}

Complex coset_inner_product(const CosetSection& psi1, const CosetSection& psi2) {
  if (psi1.size() != psi2.size()) throw InputError("coset_inner_product: sections over different transversals");
  Complex acc = 0.0;
  for (std::size_t x = 0; x < psi1.size(); ++x) {
    if (psi1[x].size() != psi2[x].size()) throw InputError("coset_inner_product: fiber dimensions differ");
    acc += psi1[x].dot(psi2[x]);
  }
  return acc;
}

CVector flatten(const CosetSection& psi) {
  Eigen::Index total = 0;
  for (const auto& v : psi) total += v.size();
  CVector out(total);
  Eigen::Index pos = 0;
  for (const auto& v : psi) {
    out.segment(pos, v.size()) = v;
    pos += v.size();
  }
  return out;
}

CosetSection unflatten(const CVector& v, Eigen::Index fiber_dim) {
  if (fiber_dim < 1 || v.size() % fiber_dim != 0) throw InputError("unflatten: length is not a multiple of the fiber");
  CosetSection out;
  for (Eigen::Index pos = 0; pos < v.size(); pos += fiber_dim) out.emplace_back(v.segment(pos, fiber_dim));
  return out;
}

CosetSection act(const InducedRep& ir, int g, const CosetSection& psi) {
  if (g < 0 || g >= ir.group->order()) throw InputError("act: element out of range");
  const CVector v = flatten(psi);
  if (v.size() != ir.total_dim) throw InputError("act: section does not match the induced space");
  return unflatten(ir.matrices[g] * v, ir.fiber_dim);
}

CMatrix mellin_rep(const GroupFunction<Complex>& f, const InducedRep& ir) {
  detail::require_same_group(*f.group(), *ir.group, "mellin_rep");
  const Eigen::Index n = f.dim() * ir.total_dim;
  CMatrix acc = CMatrix::Zero(n, n);
  for (int g = 0; g < ir.group->order(); ++g) acc += kronecker(f(g), ir.matrices[g]);
  return acc;
}

std::vector<CMatrix> isotypic_projectors(const InducedRep& ir, const CharacterTable& t) {
  if (t.order() != ir.group->order()) throw InputError("isotypic_projectors: table belongs to a different group");
  std::vector<CMatrix> out;
  for (std::size_t s = 0; s < t.characters.size(); ++s) {
    CMatrix p = CMatrix::Zero(ir.total_dim, ir.total_dim);
    for (int g = 0; g < ir.group->order(); ++g) p += std::conj(t.at(static_cast<int>(s), g)) * ir.matrices[g];
    p *= static_cast<double>(t.degrees[s]) / ir.group->order();
    if (p.norm() > 1e-8) out.push_back(std::move(p));
  }
  return out;
}

double invariant_subspace_check(const InducedRep& ir, const GroupFunction<Complex>& f, const CharacterTable& t) {
  const CMatrix m = mellin_rep(f, ir);
  const CMatrix id_f = CMatrix::Identity(f.dim(), f.dim());
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  double worst = 0.0;
  for (const CMatrix& p : isotypic_projectors(ir, t)) {
    const CMatrix lifted = kronecker(id_f, p);
    worst = std::max(worst, spectral_norm((id - lifted) * m * lifted));
  }
  return worst;
}

double invariant_subspace_check(const InducedRep& ir, const GroupFunction<Complex>& f) {
  return invariant_subspace_check(ir, f, character_table(*ir.group));
}

}  // namespace mellinop
