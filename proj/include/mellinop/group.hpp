#pragma once

#include <memory>
#include <string>
#include <vector>

namespace mellinop {

/// A finite group given by its Cayley table. Element 0 is the identity and
/// table[a][b] is the index of a*b. Haar measure is counting measure, so the
/// modular function is identically 1; it is stored per element anyway and
/// used literally by the involution.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity at 0, associativity).
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return 0; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverses_[a]; }
  double modular(int g) const { return modular_[g]; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<int>& inverses() const { return inverses_; }

  /// Structural equality: same order and the same Cayley table.
  bool same_as(const FiniteGroup& other) const { return table_ == other.table_; }

  /// Index of label, or -1.
  int find(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  std::vector<double> modular_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

using Permutation = std::vector<int>;

/// Z_n, elements g^k in order k = 0..n-1.
GroupPtr cyclic_group(int n);

/// Dihedral group of order 2n: r^k (k < n) then s r^k.
GroupPtr dihedral_group(int n);

/// Closure of the given permutations of {0..m-1}; elements sorted
/// lexicographically (identity first), labelled in cycle notation.
GroupPtr permutation_group(const std::vector<Permutation>& generators);

/// S_n from the generators (0 1) and (0 1 ... n-1).
GroupPtr symmetric_group(int n);

/// Lookup by name: "Z<n>", "D<n>", "S<n>".
GroupPtr builtin_group(const std::string& name);

/// Sorted indices of the subgroup generated by the given elements.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

/// True if the (sorted, unique) index set contains the identity and is closed
/// under products and inverses.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& subset);

/// Conjugacy classes ordered by their smallest element index; each class sorted.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

/// Order of the element g.
int element_order(const FiniteGroup& grp, int g);

}  // namespace mellinop
