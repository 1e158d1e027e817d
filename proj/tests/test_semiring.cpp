#include <doctest.h>

#include <functional>

#include "core/corpus.hpp"
#include "core/errors.hpp"

using namespace focal;

namespace {

std::vector<Scalar> vec(const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar(x));
  return out;
}

AtomSystem m2_system(std::vector<Atom> atoms) {
  AtomSystem sys;
  sys.algebra = std::make_shared<const Algebra>(Algebra::matrix_algebra(2));
  sys.atoms = std::move(atoms);
  return sys;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("the isotypic S3 system verifies to the expected table") {
  PreparedSystem ps = s3_standard_system();
  HyperTable t = verify_atom_system(ps.system);
  REQUIRE(t.size() == 3);
  CHECK(t.atom_names == std::vector<std::string>{"C", "sigma", "V"});
  CHECK(t.identity == 0);
  CHECK(t.source == TableSource::semiring);
  CHECK(t.is_entire());

  CHECK(t.at(0, 0) == AtomSet{0});
  CHECK(t.at(1, 1) == AtomSet{0});      // sigma^2 = C
  CHECK(t.at(1, 2) == AtomSet{2});      // sigma V = V
  CHECK(t.at(2, 1) == AtomSet{2});
  CHECK(t.at(2, 2) == AtomSet{0, 1});   // V^2 = C + sigma

  CHECK(top_subspace(ps.system) == Subspace::full(4));
  CHECK(subspace_of(ps.system, {0, 1}).dim() == 2);
  CHECK(atoms_contained_in(ps.system, Subspace::full(4)) == AtomSet{0, 1, 2});
  CHECK(atom_set_names(t, {0, 2}) == "{C,V}");
}

TEST_CASE("dependent atoms are rejected") {
  Atom c{"C", Subspace::line(vec({1, 0, 0, 1}), 4)};
  Atom d{"D", Subspace::line(vec({2, 0, 0, 2}), 4)};
  AtomSystem sys = m2_system({c, d});
  CHECK(code_of([&] { verify_atom_system(sys); }) == Errc::not_independent);

  Atom zero{"Z", Subspace::zero(4)};
  CHECK(code_of([&] { verify_atom_system(m2_system({c, zero})); }) == Errc::not_independent);
}

TEST_CASE("the identity atom is required and must be the unit line") {
  Atom e01{"X", Subspace::line(vec({0, 1, 0, 0}), 4)};
  CHECK(code_of([&] { verify_atom_system(m2_system({e01})); }) == Errc::identity_missing);

  Atom c{"C", Subspace::line(vec({1, 0, 0, 1}), 4)};
  AtomSystem declared = m2_system({c, e01});
  declared.declared_identity = 1;
  CHECK(code_of([&] { verify_atom_system(declared); }) == Errc::identity_missing);

  declared.declared_identity = 7;
  CHECK(code_of([&] { verify_atom_system(declared); }) == Errc::index_out_of_range);
}

TEST_CASE("products that are not sums of atoms are rejected") {
  Atom c{"C", Subspace::line(vec({1, 0, 0, 1}), 4)};
  Atom a{"A", Subspace::line(vec({0, 1, 0, 0}), 4)};
  Atom b{"B", Subspace::line(vec({0, 0, 1, 0}), 4)};
  // A B = span(E00), which is not a sum of the three atoms.
  CHECK(code_of([&] { verify_atom_system(m2_system({c, a, b})); }) == Errc::not_closed);
}

TEST_CASE("closed systems may still have empty hyperproducts") {
  PreparedSystem ps = quotient_t2();
  HyperTable t = verify_atom_system(ps.system);
  CHECK(t.at(1, 1).empty());
  std::pair<int, int> hole;
  CHECK(!t.is_entire(&hole));
  CHECK(hole == std::pair<int, int>{1, 1});
}

TEST_CASE("abstract tables enforce the identity law") {
  std::vector<std::vector<AtomSet>> good = {{{0}, {1}}, {{1}, {0}}};
  CHECK_NOTHROW(make_hyper_table({"e", "x"}, 0, good, TableSource::abstract_table));

  std::vector<std::vector<AtomSet>> bad = {{{0}, {0}}, {{1}, {0}}};
  CHECK(code_of([&] {
          make_hyper_table({"e", "x"}, 0, bad, TableSource::abstract_table);
        }) == Errc::invalid_document);

  CHECK(code_of([&] {
          make_hyper_table({"e", "e"}, 0, good, TableSource::abstract_table);
        }) == Errc::invalid_document);

  std::vector<std::vector<AtomSet>> ragged = {{{0}, {1}}, {{1}}};
  CHECK(code_of([&] {
          make_hyper_table({"e", "x"}, 0, ragged, TableSource::abstract_table);
        }) == Errc::shape_mismatch);

  std::vector<std::vector<AtomSet>> out_of_range = {{{0}, {1}}, {{1}, {5}}};
  CHECK(code_of([&] {
          make_hyper_table({"e", "x"}, 0, out_of_range, TableSource::abstract_table);
        }) == Errc::index_out_of_range);
}

TEST_CASE("every prepared corpus system verifies") {
  for (const auto& ps : all_prepared_systems()) {
    CAPTURE(ps.name);
    HyperTable t = verify_atom_system(ps.system);
    CHECK(t.size() == ps.system.atom_count());
    CHECK(t.identity.has_value());
    // The identity atom is the unit line by construction.
    int e = *t.identity;
    CHECK(ps.system.atoms[e].space == ps.system.algebra->unit_line());
  }
}

TEST_CASE("trace zero systems square onto everything") {
  for (int n : {2, 3}) {
    PreparedSystem ps = trace_zero_system(n);
    HyperTable t = verify_atom_system(ps.system);
    REQUIRE(t.size() == 2);
    CHECK(t.at(1, 1) == AtomSet{0, 1});
    CHECK(top_subspace(ps.system) == Subspace::full(n * n));
  }
}
