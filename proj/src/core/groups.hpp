#pragma once

#include "core/atoms.hpp"

namespace focal {

// Finite group given by its full multiplication table over element indices.
// Elements built from permutation generators remember a generator word, which
// lets callers push generator data (e.g. representation matrices) to every
// element deterministically.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  // Closure of permutation generators (each a bijection of {0..m-1}) under
  // composition; aborts with SizeCapExceeded beyond `cap` elements.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, int cap = 10000);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // Word in generator indices evaluating to each element (identity: empty).
  const std::vector<std::vector<int>>& words() const { return words_; }
  int generator_count() const { return generator_count_; }

  std::vector<std::vector<int>> conjugacy_classes() const;

  // Extends images of the generators to all elements along the stored words.
  std::vector<Matrix> matrices_from_generator_images(const std::vector<Matrix>& images) const;

 private:
  FiniteGroup() = default;
  void finish_validation();

  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> words_;
  int identity_ = 0;
  int generator_count_ = 0;
};

// Group acting on an algebra by unital algebra automorphisms; one matrix per
// group element, validated to be invertible, to fix the unit, to respect
// products, and to satisfy the group law exactly.
struct ActionOnAlgebra {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Algebra> algebra;
  std::vector<Matrix> matrices;
};

ActionOnAlgebra make_action(std::shared_ptr<const FiniteGroup> group,
                            std::shared_ptr<const Algebra> algebra, std::vector<Matrix> matrices);

// Conjugation a -> g a g^-1 on End(V) = M_n, induced by representation
// matrices (one per element, invertible).  The representation itself may obey
// the group law only up to scalars; the induced action must obey it exactly.
ActionOnAlgebra conjugation_action(std::shared_ptr<const FiniteGroup> group,
                                   const std::vector<Matrix>& rep_matrices, FieldDescriptor field);

struct CharacterRow {
  std::string name;
  int degree = 1;
  std::vector<Scalar> values;  // one per group element
};

struct IsotypicDecomposition {
  std::vector<Subspace> components;  // aligned with the character list
  bool complete = false;             // components sum to the whole algebra
};

// Images of the projections (deg/|G|) sum_g chi(g^-1) action(g).
IsotypicDecomposition isotypic_components(const ActionOnAlgebra& action,
                                          const std::vector<CharacterRow>& characters);

// Dimension of the simultaneous fixed space, i.e. the multiplicity of the
// trivial character in the action.
int trivial_multiplicity(const ActionOnAlgebra& action);

// For every atom X: top*X == top == X*top, where top is the sum of all atoms.
struct OneSidedIdealCheck {
  bool holds = true;
  std::optional<int> witness_atom;
};
OneSidedIdealCheck one_sided_ideal_check(const AtomSystem& sys);

}  // namespace focal
