#include <doctest.h>

#include <functional>

#include "core/corpus.hpp"
#include "core/errors.hpp"

using namespace focal;

namespace {

HyperTable s3_table() { return verify_atom_system(s3_standard_system().system); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("hyperproducts of sets") {
  HyperTable t = s3_table();
  CHECK(hyper_product(t, {2}, {2}) == AtomSet{0, 1});
  CHECK(hyper_product(t, {0, 1}, {2}) == AtomSet{2});
  CHECK(hyper_product(t, {0, 1}, {0, 1}) == AtomSet{0, 1});
}

TEST_CASE("the product family carries shortest witnesses") {
  HyperTable t = s3_table();
  ProductFamily fam = product_family(t);
  REQUIRE(fam.members.size() == 4);
  CHECK(fam.contains({0}));
  CHECK(fam.contains({1}));
  CHECK(fam.contains({2}));
  CHECK(fam.contains({0, 1}));
  CHECK(fam.members.at({0, 1}) == std::vector<int>{2, 2});
  CHECK(fam.members.at({2}) == std::vector<int>{2});
}

TEST_CASE("zeta classes on the corpus examples") {
  HyperTable t = s3_table();
  Partition p = zeta_classes(t, product_family(t));
  REQUIRE(p.size() == 2);
  CHECK(p.classes[0] == std::vector<int>{0, 1});
  CHECK(p.classes[1] == std::vector<int>{2});
  CHECK(p.class_of == std::vector<int>{0, 0, 1});

  CHECK(beta_classes(t) == p);

  HyperTable g = verify_atom_system(galois_biquadratic_system().system);
  Partition pg = zeta_classes(g, product_family(g));
  CHECK(pg.size() == 4);

  HyperTable t3 = verify_atom_system(quotient_t3_minus_1().system);
  Partition p3 = zeta_classes(t3, product_family(t3));
  CHECK(p3.size() == 1);
}

TEST_CASE("non-entire tables keep their atoms apart and refuse beta") {
  HyperTable t = verify_atom_system(quotient_t2().system);
  Partition p = zeta_classes(t, product_family(t));
  CHECK(p.size() == 2);
  CHECK(code_of([&] { beta_classes(t); }) == Errc::table_not_entire);
  CHECK(code_of([&] { check_associative(t); }) == Errc::table_not_entire);
  CHECK(code_of([&] { condensation_monoid(t, p); }) == Errc::table_not_entire);
}

TEST_CASE("associativity, reproducibility and their witnesses") {
  HyperTable t = s3_table();
  CHECK(check_associative(t).associative);
  CHECK(check_reproducible(t).holds);
  WeakReproducibilityCheck w = check_weak_reproducible(t);
  CHECK(w.holds);
  REQUIRE(w.witnesses.size() == 3);
  int e = *t.identity;
  for (int x = 0; x < t.size(); ++x) {
    auto [r, l] = w.witnesses[x];
    CHECK(t.at(x, r).count(e));
    CHECK(t.at(l, x).count(e));
  }

  HyperTable frag = a4_fragment_table();
  AssociativityCheck a = check_associative(frag);
  CHECK(!a.associative);
  REQUIRE(a.witness.has_value());
  auto [i, j, k] = *a.witness;
  CHECK(hyper_product(frag, frag.at(i, j), {k}) != hyper_product(frag, {i}, frag.at(j, k)));
  CHECK(!check_reproducible(frag).holds);
  CHECK(check_weak_reproducible(frag).holds);
}

TEST_CASE("strong regularity holds for zeta and fails for finer partitions") {
  HyperTable t = s3_table();
  Partition zeta = zeta_classes(t, product_family(t));
  CHECK(check_strong_regularity(t, zeta).holds);

  // The all-singletons partition is not strongly regular: V*V crosses it.
  Partition fine = partition_from_union_find({0, 1, 2});
  StrongRegularityCheck s = check_strong_regularity(t, fine);
  CHECK(!s.holds);
  REQUIRE(s.witness.has_value());
}

TEST_CASE("condensation monoids and groups") {
  HyperTable t = s3_table();
  CondensationReport r = condense(t);
  CHECK(r.entire);
  CHECK(r.associative == true);
  CHECK(r.weakly_reproducible);
  CHECK(r.reproducible);
  REQUIRE(r.monoid.has_value());
  CHECK(r.monoid->size == 2);
  CHECK(r.monoid->is_group);
  CHECK(r.monoid->identity_class == 0);
  CHECK(r.monoid->product == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(r.monoid->inverse == std::vector<int>{0, 1});
  CHECK(r.focus == AtomSet{0, 1});
  CHECK(r.structurally_sound());

  CondensationReport g = condense(verify_atom_system(galois_biquadratic_system().system));
  REQUIRE(g.monoid.has_value());
  CHECK(g.monoid->size == 4);
  CHECK(g.monoid->is_group);
  for (int a = 0; a < 4; ++a) CHECK(g.monoid->product[a][a] == *g.monoid->identity_class);
  CHECK(g.focus == AtomSet{0});
}

TEST_CASE("quotients over partitions finer than zeta are rejected as ill-defined") {
  // V*V = {C, sigma} crosses the singleton classes {C} and {sigma}, so the
  // quotient over the all-singletons partition has no single-valued product.
  HyperTable t = s3_table();
  Partition fine = partition_from_union_find({0, 1, 2});
  CHECK(code_of([&] { condensation_monoid(t, fine); }) == Errc::not_well_defined);

  // Over the zeta classes the quotient of an entire table is always sound:
  // any product x*w sits inside the family member class(x) * {w}.
  for (const auto& ps : all_prepared_systems()) {
    CAPTURE(ps.name);
    CondensationReport r = condense(verify_atom_system(ps.system));
    CHECK(!r.monoid_error.has_value());
    CHECK(r.structurally_sound());
  }
}

TEST_CASE("kappa closure matches the zeta classes and reports its step count") {
  HyperTable t = s3_table();
  KappaClosure k = kappa_closure(t, {2});
  CHECK(k.closure == AtomSet{2});
  CHECK(k.stabilized_at == 1);

  KappaClosure k0 = kappa_closure(t, {0});
  CHECK(k0.closure == AtomSet{0, 1});
  CHECK(k0.stabilized_at == 2);

  CHECK(code_of([&] { kappa_closure(t, {}); }) == Errc::empty_seed);
  CHECK(code_of([&] { kappa_closure(t, {9}); }) == Errc::index_out_of_range);
}

TEST_CASE("reachability unions the family members through an atom") {
  HyperTable t = s3_table();
  ProductFamily fam = product_family(t);
  CHECK(reachable_from(t, fam, 0) == AtomSet{0, 1});
  CHECK(reachable_from(t, fam, 2) == AtomSet{2});

  HyperTable frag = a4_fragment_table();
  ProductFamily ffam = product_family(frag);
  AtomSet all;
  for (int i = 0; i < frag.size(); ++i) all.insert(i);
  CHECK(reachable_from(frag, ffam, 0) == all);
}

TEST_CASE("the eleven atom fragment condenses to a single class") {
  HyperTable frag = a4_fragment_table();
  CondensationReport r = condense(frag);
  CHECK(r.entire);
  CHECK(r.associative == false);
  CHECK(r.partition.size() == 1);
  REQUIRE(r.monoid.has_value());
  CHECK(r.monoid->size == 1);
  CHECK(r.focus.has_value());
  CHECK(static_cast<int>(r.focus->size()) == frag.size());
}
