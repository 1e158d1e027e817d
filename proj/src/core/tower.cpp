#include "core/tower.hpp"

#include "core/errors.hpp"

namespace focal {

FocalSubalgebra focal_subalgebra(const AtomSystem& sys, const CondensationReport& report) {
  if (!report.focus) fail(Errc::identity_missing, "report has no focus (table lacks an identity atom)");
  const AtomSet& focus = *report.focus;
  Subspace f = subspace_of(sys, focus);

  const Algebra& alg = *sys.algebra;
  if (!f.contains_vector(alg.one()))
    fail(Errc::not_subalgebra, "focal subspace does not contain the unit");
  if (!f.contains(alg.product_span(f, f)))
    fail(Errc::not_subalgebra, "focal subspace is not closed under multiplication");

  FocalSubalgebra out;
  out.space = f;
  out.restricted.algebra = sys.algebra;
  for (int i : focus) out.restricted.atoms.push_back(sys.atoms[i]);
  int e = resolve_identity_atom(sys);
  int pos = 0;
  for (int i : focus) {
    if (i == e) out.restricted.declared_identity = pos;
    ++pos;
  }
  if (!out.restricted.declared_identity)
    fail(Errc::internal, "identity atom fell outside its own focus");
  return out;
}

CorollaryMaxCheck check_corollary_max(const AtomSystem& sys, const CondensationReport& report) {
  CorollaryMaxCheck c;
  c.quotient_trivial = report.partition.size() == 1;
  c.focal_is_top = report.focus && subspace_of(sys, *report.focus) == top_subspace(sys);
  c.holds = c.quotient_trivial == c.focal_is_top;
  return c;
}

Tower focal_tower(const AtomSystem& sys, int max_depth) {
  Tower tower;
  AtomSystem current = sys;
  while (max_depth <= 0 || static_cast<int>(tower.levels.size()) < max_depth) {
    TowerLevel level;
    level.system = current;
    level.table = verify_atom_system(current);
    std::pair<int, int> hole;
    if (!level.table.is_entire(&hole))
      fail(Errc::table_not_entire, "tower level " + std::to_string(tower.levels.size() + 1) +
                                       ": product of '" + level.table.atom_names[hole.first] + "' and '" +
                                       level.table.atom_names[hole.second] + "' contains no atom");
    level.report = condense(level.table);
    if (level.report.monoid_error)
      fail(Errc::not_well_defined, *level.report.monoid_error);
    level.focus = *level.report.focus;
    FocalSubalgebra focal = focal_subalgebra(current, level.report);
    level.focal_space = focal.space;
    level.corollary_max = check_corollary_max(current, level.report);

    bool full_focus = static_cast<int>(level.focus.size()) == current.atom_count();
    tower.levels.push_back(std::move(level));
    if (full_focus) {
      tower.stabilized = true;
      break;
    }
    current = focal.restricted;
  }
  return tower;
}

std::optional<std::vector<int>> witness_product(const HyperTable& table, const AtomSet& focus) {
  ProductFamily fam = product_family(table);
  auto it = fam.members.find(focus);
  if (it == fam.members.end()) return std::nullopt;
  return it->second;
}

}  // namespace focal
