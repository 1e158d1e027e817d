#include <doctest.h>

#include <algorithm>
#include <functional>

#include "core/corpus.hpp"
#include "core/errors.hpp"

using namespace focal;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

std::vector<int> class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const auto& c : g.conjugacy_classes()) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("permutation closure builds S3 with its full structure") {
  FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(g.order() == 6);
  CHECK(g.generator_count() == 2);
  for (int a = 0; a < 6; ++a) {
    CHECK(g.mul(a, g.inv(a)) == g.identity());
    CHECK(g.mul(g.identity(), a) == a);
  }
  CHECK(class_sizes(g) == std::vector<int>{1, 2, 3});
  CHECK(g.words()[g.identity()].empty());
}

TEST_CASE("group table validation rejects non-groups") {
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }) == Errc::not_a_group);
  CHECK(code_of([] { FiniteGroup::from_table({{0, 1}, {1, 2}}); }) == Errc::not_a_group);
  CHECK(code_of([] { FiniteGroup::from_permutations({{0, 0, 1}}); }) == Errc::not_a_group);
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
}

TEST_CASE("the size cap stops runaway closures") {
  // An 11-cycle generates Z11; capping at 10 must abort.
  std::vector<int> cycle(11);
  for (int i = 0; i < 11; ++i) cycle[i] = (i + 1) % 11;
  CHECK(code_of([&] { FiniteGroup::from_permutations({cycle}, 10); }) == Errc::size_cap_exceeded);
}

TEST_CASE("generator images extend to a representation") {
  FiniteGroup g = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  Matrix s(2, 2), c(2, 2);
  s.at(0, 0) = Scalar(-1);
  s.at(0, 1) = Scalar(1);
  s.at(1, 1) = Scalar(1);
  c.at(0, 1) = Scalar(-1);
  c.at(1, 0) = Scalar(1);
  c.at(1, 1) = Scalar(-1);
  std::vector<Matrix> rep = g.matrices_from_generator_images({s, c});
  REQUIRE(static_cast<int>(rep.size()) == g.order());
  CHECK(rep[g.identity()] == Matrix::identity(2));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) CHECK(rep[a] * rep[b] == rep[g.mul(a, b)]);
}

TEST_CASE("the A4 rotation representation is a faithful homomorphism") {
  auto [group, rep] = a4_rotation_representation();
  CHECK(group->order() == 12);
  CHECK(class_sizes(*group) == std::vector<int>{1, 3, 4, 4});
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) CHECK(rep[a] * rep[b] == rep[group->mul(a, b)]);
  // Faithful: distinct elements get distinct matrices.
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) CHECK(rep[a] != rep[b]);
}

TEST_CASE("actions are validated as unital algebra automorphisms") {
  auto group = std::make_shared<const FiniteGroup>(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  auto algebra = std::make_shared<const Algebra>(
      Algebra::poly_quotient({Scalar(-1), Scalar(0), Scalar(1)}));

  Matrix flip = Matrix::identity(2);
  flip.at(1, 1) = Scalar(-1);
  CHECK_NOTHROW(make_action(group, algebra, {Matrix::identity(2), flip}));

  // t -> 2t is invertible and fixes the unit but is not multiplicative.
  Matrix stretch = Matrix::identity(2);
  stretch.at(1, 1) = Scalar(2);
  CHECK(code_of([&] { make_action(group, algebra, {Matrix::identity(2), stretch}); }) ==
        Errc::not_an_action);

  Matrix singular(2, 2);
  CHECK(code_of([&] { make_action(group, algebra, {Matrix::identity(2), singular}); }) ==
        Errc::not_an_action);

  // Group law: pairing the flip with the wrong element breaks g*g = e.
  CHECK(code_of([&] { make_action(group, algebra, {flip, Matrix::identity(2)}); }) ==
        Errc::not_an_action);
}

TEST_CASE("conjugation turns a representation into an action on End(V)") {
  PreparedSystem ps = s3_standard_system();
  REQUIRE(ps.action.has_value());
  const ActionOnAlgebra& action = *ps.action;
  CHECK(action.group->order() == 6);
  CHECK(action.algebra->dim() == 4);

  // Every action matrix fixes the identity matrix of M2.
  for (const auto& m : action.matrices) CHECK(m.apply(action.algebra->one()) == action.algebra->one());
}

TEST_CASE("isotypic components recover the three atoms of the S3 system") {
  PreparedSystem ps = s3_standard_system();
  REQUIRE(ps.action.has_value());
  IsotypicDecomposition dec = isotypic_components(*ps.action, s3_characters());
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.complete);
  CHECK(dec.components[0] == ps.system.atoms[0].space);
  CHECK(dec.components[1] == ps.system.atoms[1].space);
  CHECK(dec.components[2] == ps.system.atoms[2].space);
  CHECK(dec.components[2].dim() == 2);

  // Each component is stable under every group element.
  for (const auto& comp : dec.components)
    for (const auto& m : ps.action->matrices)
      for (int i = 0; i < comp.dim(); ++i) CHECK(comp.contains_vector(m.apply(comp.basis().row(i))));
}

TEST_CASE("character shape errors are caught") {
  PreparedSystem ps = s3_standard_system();
  std::vector<CharacterRow> bad = s3_characters();
  bad[0].values.pop_back();
  CHECK(code_of([&] { isotypic_components(*ps.action, bad); }) == Errc::shape_mismatch);

  std::vector<CharacterRow> wrong_field = s3_characters();
  wrong_field[0].values[0] = Scalar::zeta(5);
  CHECK(code_of([&] { isotypic_components(*ps.action, wrong_field); }) == Errc::field_too_small);
}

TEST_CASE("trivial multiplicities of the corpus actions") {
  CHECK(trivial_multiplicity(*s3_standard_system().action) == 1);
  CHECK(trivial_multiplicity(*quotient_t2().action) == 1);
  CHECK(trivial_multiplicity(*quotient_t2_minus_1().action) == 1);
  CHECK(trivial_multiplicity(*quotient_t3_minus_1().action) == 2);
  CHECK(trivial_multiplicity(*galois_biquadratic_system().action) == 1);
}

TEST_CASE("one sided ideal check distinguishes the quotient examples") {
  CHECK(one_sided_ideal_check(s3_standard_system().system).holds);
  CHECK(one_sided_ideal_check(galois_biquadratic_system().system).holds);
  CHECK(one_sided_ideal_check(quotient_t2_minus_1().system).holds);

  OneSidedIdealCheck bad = one_sided_ideal_check(quotient_t2().system);
  CHECK(!bad.holds);
  CHECK(bad.witness_atom == 1);
}
