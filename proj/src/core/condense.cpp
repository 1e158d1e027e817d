#include "core/condense.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace focal {

AtomSet hyper_product(const HyperTable& table, const AtomSet& s, const AtomSet& t) {
  AtomSet out;
  for (int x : s)
    for (int y : t) {
      const AtomSet& e = table.at(x, y);
      out.insert(e.begin(), e.end());
    }
  return out;
}

ProductFamily product_family(const HyperTable& table) {
  // Guards against adversarial abstract tables whose closed family would
  // approach the full power set.
  constexpr size_t kFamilyCap = 200000;
  ProductFamily fam;
  for (int i = 0; i < table.size(); ++i) fam.members[{i}] = {i};
  // Fixpoint with minimal-length witnesses; sizes here are tiny, so repeated
  // passes are cheaper to reason about than a priority queue.
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = fam.members;
    for (const auto& [s, ws] : snapshot)
      for (const auto& [t, wt] : snapshot) {
        AtomSet u = hyper_product(table, s, t);
        std::vector<int> w = ws;
        w.insert(w.end(), wt.begin(), wt.end());
        auto it = fam.members.find(u);
        if (it == fam.members.end() || w.size() < it->second.size()) {
          if (it == fam.members.end() && fam.members.size() >= kFamilyCap)
            fail(Errc::size_cap_exceeded,
                 "product family exceeded " + std::to_string(kFamilyCap) + " members");
          fam.members[u] = std::move(w);
          changed = true;
        }
      }
  }
  return fam;
}

Partition partition_from_union_find(std::vector<int> parent) {
  int n = static_cast<int>(parent.size());
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  Partition p;
  p.class_of.assign(n, -1);
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    int id = static_cast<int>(p.classes.size());
    for (int m : members) p.class_of[m] = id;
    p.classes.push_back(members);
  }
  return p;
}

Partition zeta_classes(const HyperTable& table, const ProductFamily& family) {
  int n = table.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [member, witness] : family.members) {
    if (member.empty()) continue;
    int first = find(*member.begin());
    for (int z : member) parent[find(z)] = first;
  }
  return partition_from_union_find(std::move(parent));
}

Partition beta_classes(const HyperTable& table) {
  std::pair<int, int> hole;
  if (!table.is_entire(&hole))
    fail(Errc::table_not_entire, "product of '" + table.atom_names[hole.first] + "' and '" +
                                     table.atom_names[hole.second] + "' contains no atom");
  return zeta_classes(table, product_family(table));
}

AssociativityCheck check_associative(const HyperTable& table) {
  std::pair<int, int> hole;
  if (!table.is_entire(&hole))
    fail(Errc::table_not_entire, "associativity needs an entire table; product of '" +
                                     table.atom_names[hole.first] + "' and '" + table.atom_names[hole.second] +
                                     "' is empty");
  int n = table.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        AtomSet lhs = hyper_product(table, table.at(i, j), {k});
        AtomSet rhs = hyper_product(table, {i}, table.at(j, k));
        if (lhs != rhs) return {false, {{i, j, k}}};
      }
  return {};
}

WeakReproducibilityCheck check_weak_reproducible(const HyperTable& table) {
  WeakReproducibilityCheck result;
  if (!table.is_entire() || !table.identity) {
    result.holds = false;
    return result;
  }
  int n = table.size(), e = *table.identity;
  for (int x = 0; x < n; ++x) {
    int right = -1, left = -1;
    for (int y = 0; y < n; ++y) {
      if (right < 0 && table.at(x, y).count(e)) right = y;
      if (left < 0 && table.at(y, x).count(e)) left = y;
    }
    if (right < 0 || left < 0) {
      result.holds = false;
      result.failing_atom = x;
      result.witnesses.clear();
      return result;
    }
    result.witnesses.emplace_back(right, left);
  }
  return result;
}

ReproducibilityCheck check_reproducible(const HyperTable& table) {
  if (!table.is_entire()) return {false, std::nullopt};
  int n = table.size();
  for (int x = 0; x < n; ++x) {
    AtomSet row, col;
    for (int y = 0; y < n; ++y) {
      row.insert(table.at(x, y).begin(), table.at(x, y).end());
      col.insert(table.at(y, x).begin(), table.at(y, x).end());
    }
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return {false, x};
  }
  return {};
}

StrongRegularityCheck check_strong_regularity(const HyperTable& table, const Partition& partition) {
  int n = table.size();
  auto image_class = [&](const AtomSet& s) {
    // -1: empty, -2: crosses classes, otherwise the single class hit.
    int c = -1;
    for (int z : s) {
      if (c == -1)
        c = partition.class_of[z];
      else if (c != partition.class_of[z])
        return -2;
    }
    return c;
  };
  for (const auto& cls : partition.classes)
    for (int x : cls)
      for (int x2 : cls)
        for (int w = 0; w < n; ++w) {
          int a = image_class(table.at(x, w));
          int b = image_class(table.at(x2, w));
          if (a == -2 || b == -2 || (a >= 0 && b >= 0 && a != b)) return {false, {{x, x2, w}}};
          a = image_class(table.at(w, x));
          b = image_class(table.at(w, x2));
          if (a == -2 || b == -2 || (a >= 0 && b >= 0 && a != b)) return {false, {{x, x2, w}}};
        }
  return {};
}

MonoidTable condensation_monoid(const HyperTable& table, const Partition& partition) {
  std::pair<int, int> hole;
  if (!table.is_entire(&hole))
    fail(Errc::table_not_entire, "condensation needs an entire table; product of '" +
                                     table.atom_names[hole.first] + "' and '" + table.atom_names[hole.second] +
                                     "' is empty");
  int k = partition.size();
  MonoidTable m;
  m.size = k;
  m.product.assign(k, std::vector<int>(k, -1));
  for (int ci = 0; ci < k; ++ci)
    for (int cj = 0; cj < k; ++cj) {
      int result = -1;
      for (int x : partition.classes[ci])
        for (int y : partition.classes[cj])
          for (int z : table.at(x, y)) {
            int cz = partition.class_of[z];
            if (result < 0) {
              result = cz;
            } else if (result != cz) {
              std::ostringstream os;
              os << "class product is not well defined: representatives of classes " << ci << " and " << cj
                 << " produce atoms in class " << result << " as well as class " << cz << " (witness atoms '"
                 << table.atom_names[x] << "', '" << table.atom_names[y] << "', '" << table.atom_names[z]
                 << "')";
              fail(Errc::not_well_defined, os.str());
            }
          }
      m.product[ci][cj] = result;
    }

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (m.product[m.product[a][b]][c] != m.product[a][m.product[b][c]]) {
          std::ostringstream os;
          os << "quotient product is not associative on classes (" << a << "," << b << "," << c << ")";
          fail(Errc::not_well_defined, os.str());
        }

  if (table.identity) {
    int e = partition.class_of[*table.identity];
    for (int a = 0; a < k; ++a)
      if (m.product[e][a] != a || m.product[a][e] != a)
        fail(Errc::not_well_defined, "identity class does not act as identity on class " + std::to_string(a));
    m.identity_class = e;
    m.inverse.assign(k, -1);
    bool group = true;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b)
        if (m.product[a][b] == e && m.product[b][a] == e) {
          m.inverse[a] = b;
          break;
        }
      if (m.inverse[a] < 0) group = false;
    }
    m.is_group = group;
  }
  return m;
}

AtomSet focus_atoms(const HyperTable& table, const Partition& partition) {
  if (!table.identity) fail(Errc::identity_missing, "table has no scalar-identity atom");
  const auto& cls = partition.classes[partition.class_of[*table.identity]];
  return AtomSet(cls.begin(), cls.end());
}

AtomSet reachable_from(const HyperTable& table, const ProductFamily& family, int z) {
  if (z < 0 || z >= table.size()) fail(Errc::index_out_of_range, "atom index out of range");
  AtomSet out;
  for (const auto& [member, witness] : family.members)
    if (member.count(z)) out.insert(member.begin(), member.end());
  return out;
}

KappaClosure kappa_closure(const HyperTable& table, const AtomSet& seed) {
  if (seed.empty()) fail(Errc::empty_seed, "kappa closure of an empty set");
  for (int z : seed)
    if (z < 0 || z >= table.size()) fail(Errc::index_out_of_range, "seed atom out of range");
  ProductFamily fam = product_family(table);
  AtomSet cur = seed;
  for (int step = 1; step <= table.size() + 1; ++step) {
    AtomSet next = cur;
    for (const auto& [member, witness] : fam.members) {
      bool touches = false;
      for (int z : member)
        if (cur.count(z)) {
          touches = true;
          break;
        }
      if (touches) next.insert(member.begin(), member.end());
    }
    if (next == cur) return {cur, step};
    cur = std::move(next);
  }
  fail(Errc::internal, "kappa closure failed to stabilize");
}

CondensationReport condense(const HyperTable& table) {
  CondensationReport rep;
  rep.table = table;
  rep.entire = table.is_entire();
  ProductFamily fam = product_family(table);
  rep.partition = zeta_classes(table, fam);
  if (rep.entire) {
    AssociativityCheck assoc = check_associative(table);
    rep.associative = assoc.associative;
    rep.assoc_witness = assoc.witness;
    rep.weakly_reproducible = check_weak_reproducible(table).holds;
    rep.reproducible = check_reproducible(table).holds;
    try {
      rep.monoid = condensation_monoid(table, rep.partition);
    } catch (const Error& e) {
      if (e.code() != Errc::not_well_defined) throw;
      rep.monoid_error = e.what();
    }
  }
  if (table.identity) rep.focus = focus_atoms(table, rep.partition);
  return rep;
}

}  // namespace focal
