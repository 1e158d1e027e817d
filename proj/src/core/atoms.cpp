#include "core/atoms.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace focal {

bool HyperTable::is_entire(std::pair<int, int>* witness) const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (entry[i][j].empty()) {
        if (witness) *witness = {i, j};
        return false;
      }
  return true;
}

HyperTable make_hyper_table(std::vector<std::string> names, std::optional<int> identity,
                            std::vector<std::vector<AtomSet>> entries, TableSource source) {
  int n = static_cast<int>(names.size());
  if (n == 0) fail(Errc::invalid_document, "table needs at least one atom");
  for (int i = 0; i < n; ++i) {
    if (names[i].empty()) fail(Errc::invalid_document, "atom " + std::to_string(i) + " has an empty name");
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j]) fail(Errc::invalid_document, "duplicate atom name '" + names[i] + "'");
  }
  if (static_cast<int>(entries.size()) != n) fail(Errc::shape_mismatch, "table has wrong row count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      fail(Errc::shape_mismatch, "table row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j)
      for (int z : entries[i][j])
        if (z < 0 || z >= n)
          fail(Errc::index_out_of_range, "table entry (" + names[i] + "," + names[j] + ") is out of range");
  }
  if (identity) {
    int e = *identity;
    if (e < 0 || e >= n) fail(Errc::index_out_of_range, "identity index out of range");
    for (int j = 0; j < n; ++j) {
      if (entries[e][j] != AtomSet{j} || entries[j][e] != AtomSet{j})
        fail(Errc::invalid_document,
             "atom '" + names[e] + "' is declared as identity but does not act as one on '" + names[j] + "'");
    }
  }
  HyperTable t;
  t.atom_names = std::move(names);
  t.identity = identity;
  t.entry = std::move(entries);
  t.source = source;
  return t;
}

int resolve_identity_atom(const AtomSystem& sys) {
  Subspace unit = sys.algebra->unit_line();
  int found = -1;
  for (int i = 0; i < sys.atom_count(); ++i)
    if (sys.atoms[i].space == unit) {
      found = i;
      break;
    }
  if (sys.declared_identity) {
    int d = *sys.declared_identity;
    if (d < 0 || d >= sys.atom_count()) fail(Errc::index_out_of_range, "declared identity index out of range");
    if (sys.atoms[d].space != unit)
      fail(Errc::identity_missing,
           "declared identity atom '" + sys.atoms[d].name + "' is not the span of the algebra unit");
    return d;
  }
  if (found < 0)
    fail(Errc::identity_missing, "no atom equals the span of the algebra unit");
  return found;
}

HyperTable verify_atom_system(const AtomSystem& sys) {
  if (!sys.algebra) fail(Errc::internal, "atom system without algebra");
  const Algebra& alg = *sys.algebra;
  int n = sys.atom_count();
  if (n == 0) fail(Errc::invalid_document, "atom system needs at least one atom");

  for (int i = 0; i < n; ++i) {
    if (sys.atoms[i].space.ambient() != alg.dim())
      fail(Errc::dimension_mismatch, "atom '" + sys.atoms[i].name + "' does not live in the algebra");
    if (sys.atoms[i].space.is_zero())
      fail(Errc::not_independent, "atom '" + sys.atoms[i].name + "' is the zero subspace");
  }

  int identity = resolve_identity_atom(sys);

  // Independence: the running sum must grow by the full dimension of each atom.
  Subspace acc = Subspace::zero(alg.dim());
  int expected = 0;
  for (int i = 0; i < n; ++i) {
    acc = acc.sum(sys.atoms[i].space);
    expected += sys.atoms[i].space.dim();
    if (acc.dim() != expected) {
      std::ostringstream os;
      os << "atoms are not independent: adding '" << sys.atoms[i].name
         << "' to the span of the preceding atoms only reaches dimension " << acc.dim() << " instead of "
         << expected;
      fail(Errc::not_independent, os.str());
    }
  }

  // Closure: every pairwise product must be exactly the sum of the atoms below it.
  std::vector<std::vector<AtomSet>> entries(n, std::vector<AtomSet>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Subspace prod = alg.product_span(sys.atoms[i].space, sys.atoms[j].space);
      AtomSet below = atoms_contained_in(sys, prod);
      Subspace hull = subspace_of(sys, below);
      if (hull != prod) {
        std::ostringstream os;
        os << "product of '" << sys.atoms[i].name << "' and '" << sys.atoms[j].name
           << "' (dimension " << prod.dim() << ") is not a sum of atoms; the atoms it contains only span dimension "
           << hull.dim();
        fail(Errc::not_closed, os.str());
      }
      entries[i][j] = std::move(below);
    }

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& a : sys.atoms) names.push_back(a.name);
  return make_hyper_table(std::move(names), identity, std::move(entries), TableSource::semiring);
}

Subspace subspace_of(const AtomSystem& sys, const AtomSet& atoms) {
  Subspace acc = Subspace::zero(sys.algebra->dim());
  for (int i : atoms) {
    if (i < 0 || i >= sys.atom_count()) fail(Errc::index_out_of_range, "atom index out of range");
    acc = acc.sum(sys.atoms[i].space);
  }
  return acc;
}

AtomSet atoms_contained_in(const AtomSystem& sys, const Subspace& space) {
  AtomSet result;
  for (int i = 0; i < sys.atom_count(); ++i)
    if (space.contains(sys.atoms[i].space)) result.insert(i);
  return result;
}

Subspace top_subspace(const AtomSystem& sys) {
  AtomSet all;
  for (int i = 0; i < sys.atom_count(); ++i) all.insert(i);
  return subspace_of(sys, all);
}

std::string atom_set_names(const HyperTable& table, const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += table.atom_names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace focal
