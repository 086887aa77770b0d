#pragma once

#include <vector>

#include "mellinop/group.hpp"
#include "mellinop/types.hpp"

namespace mellinop {

/// A class function is one value per conjugacy class.
using ClassFunction = std::vector<Complex>;

struct CharacterTable {
  std::vector<std::vector<int>> classes;  // conjugacy_classes() order
  std::vector<int> class_of;              // element -> class index
  std::vector<ClassFunction> characters;  // one per irrep; trivial first, then by degree
  std::vector<int> degrees;

  int order() const { return static_cast<int>(class_of.size()); }
  /// Character value at a group element.
  Complex at(int irrep, int element) const { return characters[irrep][class_of[element]]; }
};

/// Irreducible characters from the class-sum algebra: the normalized common
/// eigenvectors of the class multiplication matrices are the central
/// characters. Throws NumericalError if the result fails orthogonality.
CharacterTable character_table(const FiniteGroup& g);

/// <chi, psi>_G = (1/|G|) sum_g chi(g) conj(psi(g)), class functions on the table's classes.
Complex class_inner_product(const CharacterTable& t, const ClassFunction& chi, const ClassFunction& psi);

}  // namespace mellinop
