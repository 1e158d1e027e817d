#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace focal {

using AtomSet = std::set<int>;

struct Atom {
  std::string name;
  Subspace space;
};

// A finite family of atoms (independent subspaces of an algebra) together
// with the scalar-identity atom k*1.  verify_atom_system promotes this raw
// data into a hyperoperation table after checking the defining laws.
struct AtomSystem {
  std::shared_ptr<const Algebra> algebra;
  std::vector<Atom> atoms;
  std::optional<int> declared_identity;

  int atom_count() const { return static_cast<int>(atoms.size()); }
};

enum class TableSource { semiring, abstract_table };

// Hyperoperation table: entry(i,j) is the set of atoms contained in the
// product of atoms i and j.  Either computed from an AtomSystem or declared
// abstractly.  `identity` is absent for tables with no scalar-identity atom.
struct HyperTable {
  std::vector<std::string> atom_names;
  std::optional<int> identity;
  std::vector<std::vector<AtomSet>> entry;
  TableSource source = TableSource::abstract_table;

  int size() const { return static_cast<int>(atom_names.size()); }
  const AtomSet& at(int i, int j) const { return entry[i][j]; }
  bool is_entire(std::pair<int, int>* witness = nullptr) const;
};

// Validates names, shape, totality and the identity law, then returns the table.
HyperTable make_hyper_table(std::vector<std::string> names, std::optional<int> identity,
                            std::vector<std::vector<AtomSet>> entries, TableSource source);

// Index of the atom equal to span(1), or an error if none exists or the
// declared index does not match.
int resolve_identity_atom(const AtomSystem& sys);

// Checks: ambient dimensions, identity atom, independence (the atom sum is
// direct), and closure (every pairwise product is the sum of the atoms it
// contains).  Returns the induced hyperoperation table.
HyperTable verify_atom_system(const AtomSystem& sys);

// Sum of the named atoms as a subspace.
Subspace subspace_of(const AtomSystem& sys, const AtomSet& atoms);

// Atoms of the system contained in a given subspace.
AtomSet atoms_contained_in(const AtomSystem& sys, const Subspace& space);

// Top element: sum of all atoms.
Subspace top_subspace(const AtomSystem& sys);

std::string atom_set_names(const HyperTable& table, const AtomSet& s);

}  // namespace focal
