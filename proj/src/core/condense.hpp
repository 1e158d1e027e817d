#pragma once

#include <array>
#include <map>

#include "core/atoms.hpp"

namespace focal {

// Least family of atom sets containing every singleton and closed under the
// setwise product S*T = union of entry(x,y).  Each member carries a shortest
// sequence of atoms whose iterated product generates it.
struct ProductFamily {
  std::map<AtomSet, std::vector<int>> members;

  bool contains(const AtomSet& s) const { return members.count(s) != 0; }
};

AtomSet hyper_product(const HyperTable& table, const AtomSet& s, const AtomSet& t);

ProductFamily product_family(const HyperTable& table);

// Partition of the atoms; classes are ordered by smallest member, members sorted.
struct Partition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  int size() const { return static_cast<int>(classes.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition_from_union_find(std::vector<int> parent);

// Transitive closure of "appear together in a member of the product family".
Partition zeta_classes(const HyperTable& table, const ProductFamily& family);

// Same relation computed from parenthesized hyperproducts; defined for entire
// tables and always equal to zeta_classes on them.
Partition beta_classes(const HyperTable& table);

struct AssociativityCheck {
  bool associative = true;
  std::optional<std::array<int, 3>> witness;
};
AssociativityCheck check_associative(const HyperTable& table);

struct WeakReproducibilityCheck {
  bool holds = true;
  std::optional<int> failing_atom;
  // For atom X, a pair (Y, Z) with identity in (X*Y) and in (Z*X).
  std::vector<std::pair<int, int>> witnesses;
};
WeakReproducibilityCheck check_weak_reproducible(const HyperTable& table);

struct ReproducibilityCheck {
  bool holds = true;
  std::optional<int> failing_atom;
};
ReproducibilityCheck check_reproducible(const HyperTable& table);

struct StrongRegularityCheck {
  bool holds = true;
  // (x, x', w) with entries whose images land in different classes.
  std::optional<std::array<int, 3>> witness;
};
StrongRegularityCheck check_strong_regularity(const HyperTable& table, const Partition& partition);

// Quotient table on the partition classes.  `identity_class` absent means the
// quotient is only a semigroup (tables with no scalar-identity atom).
struct MonoidTable {
  int size = 0;
  std::optional<int> identity_class;
  std::vector<std::vector<int>> product;
  bool is_group = false;
  std::vector<int> inverse;  // per class, -1 when none

  friend bool operator==(const MonoidTable&, const MonoidTable&) = default;
};

MonoidTable condensation_monoid(const HyperTable& table, const Partition& partition);

// Class of the scalar-identity atom.
AtomSet focus_atoms(const HyperTable& table, const Partition& partition);

// Union of all family members containing z.
AtomSet reachable_from(const HyperTable& table, const ProductFamily& family, int z);

struct KappaClosure {
  AtomSet closure;
  int stabilized_at = 1;  // smallest n with kappa_n == kappa_{n+1}
};
KappaClosure kappa_closure(const HyperTable& table, const AtomSet& seed);

// One-stop analysis used by reports: flags, partition, quotient, focus.
struct CondensationReport {
  HyperTable table;
  bool entire = false;
  std::optional<bool> associative;
  std::optional<std::array<int, 3>> assoc_witness;
  bool weakly_reproducible = false;
  bool reproducible = false;
  Partition partition;
  std::optional<MonoidTable> monoid;
  std::optional<std::string> monoid_error;
  std::optional<AtomSet> focus;

  bool structurally_sound() const { return !monoid_error; }
};

CondensationReport condense(const HyperTable& table);

}  // namespace focal
