#pragma once

#include "core/condense.hpp"

namespace focal {

// Sum of the focus atoms together with the atom system it spans.  The space
// is always a unital subalgebra of the ambient algebra; construction verifies
// that and alarms otherwise.
struct FocalSubalgebra {
  Subspace space;
  AtomSystem restricted;
};

FocalSubalgebra focal_subalgebra(const AtomSystem& sys, const CondensationReport& report);

// Does |quotient| == 1 hold exactly when the focal subalgebra is the top
// element?  Returns the verdict plus both sides for reporting.
struct CorollaryMaxCheck {
  bool holds = false;
  bool quotient_trivial = false;
  bool focal_is_top = false;
};
CorollaryMaxCheck check_corollary_max(const AtomSystem& sys, const CondensationReport& report);

struct TowerLevel {
  AtomSystem system;
  HyperTable table;
  CondensationReport report;
  AtomSet focus;           // indices into this level's atoms
  Subspace focal_space;    // inside the original ambient algebra
  CorollaryMaxCheck corollary_max;
};

// Iterated restriction to the focal subalgebra.  Stops when the focus is the
// full atom set of the level (stabilization) or when max_depth levels were
// produced; max_depth <= 0 means no explicit bound.
struct Tower {
  std::vector<TowerLevel> levels;
  bool stabilized = false;
};

Tower focal_tower(const AtomSystem& sys, int max_depth = 0);

// Shortest atom sequence whose product realizes exactly the focus atom set,
// if the product family contains such a member.
std::optional<std::vector<int>> witness_product(const HyperTable& table, const AtomSet& focus);

}  // namespace focal
