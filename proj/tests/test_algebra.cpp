#include <doctest.h>

#include "core/algebra.hpp"
#include "core/errors.hpp"

using namespace focal;

namespace {

std::vector<Scalar> vec(const std::vector<long>& v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Scalar(x));
  return out;
}

// Coordinates of E_ij inside M_n with the row-major basis.
std::vector<Scalar> unit_mat(int n, int i, int j) {
  std::vector<Scalar> e(size_t(n) * n, Scalar(0));
  e[size_t(i) * n + j] = Scalar(1);
  return e;
}

struct Rng {
  unsigned long long state = 0x1234567ull;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long long>(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("matrix algebra multiplies like matrices") {
  Algebra a = Algebra::matrix_algebra(2);
  CHECK(a.dim() == 4);
  CHECK(a.one() == vec({1, 0, 0, 1}));

  // E01 E10 = E00, E01 E11 = E01, E01 E01 = 0.
  CHECK(a.multiply(unit_mat(2, 0, 1), unit_mat(2, 1, 0)) == unit_mat(2, 0, 0));
  CHECK(a.multiply(unit_mat(2, 0, 1), unit_mat(2, 1, 1)) == unit_mat(2, 0, 1));
  CHECK(a.multiply(unit_mat(2, 0, 1), unit_mat(2, 0, 1)) == vec({0, 0, 0, 0}));

  // Random coordinate vectors agree with literal matrix multiplication.
  Rng rng;
  for (int round = 0; round < 20; ++round) {
    Matrix x(2, 2), y(2, 2);
    std::vector<Scalar> xc, yc;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        x.at(i, j) = Scalar(rng.next(-4, 4));
        y.at(i, j) = Scalar(rng.next(-4, 4));
        xc.push_back(x.at(i, j));
        yc.push_back(y.at(i, j));
      }
    Matrix xy = x * y;
    std::vector<Scalar> expected;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) expected.push_back(xy.at(i, j));
    CHECK(a.multiply(xc, yc) == expected);
  }
}

TEST_CASE("polynomial quotient rings") {
  // t^2 - 1: t * t = 1.
  Algebra a = Algebra::poly_quotient({Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(a.dim() == 2);
  CHECK(a.multiply(vec({0, 1}), vec({0, 1})) == vec({1, 0}));

  // t^2: the generator squares to zero.
  Algebra nil = Algebra::poly_quotient({Scalar(0), Scalar(0), Scalar(1)});
  CHECK(nil.multiply(vec({0, 1}), vec({0, 1})) == vec({0, 0}));

  // t^3 - 1: t^2 * t^2 = t.
  Algebra c3 = Algebra::poly_quotient({Scalar(-1), Scalar(0), Scalar(0), Scalar(1)});
  CHECK(c3.multiply(vec({0, 0, 1}), vec({0, 0, 1})) == vec({0, 1, 0}));

  CHECK_THROWS_AS(Algebra::poly_quotient({Scalar(0), Scalar(2)}), Error);
  CHECK_THROWS_AS(Algebra::poly_quotient({Scalar(1)}), Error);
}

TEST_CASE("structure constant validation") {
  // One-dimensional algebra with e*e = e: fine.
  CHECK_NOTHROW(Algebra::from_structure_constants(FieldDescriptor::rationals(), 1,
                                                   {{{Scalar(1)}}}, {Scalar(1)}));
  // e*e = 2e with unit e: the unit law fails.
  CHECK_THROWS_AS(Algebra::from_structure_constants(FieldDescriptor::rationals(), 1,
                                                     {{{Scalar(2)}}}, {Scalar(1)}),
                  Error);

  // Unital but non-associative: e1 e1 = e2, e1 e2 = e0, e2 e1 = 0, so
  // (e1 e1) e1 = 0 while e1 (e1 e1) = e0.
  std::vector<std::vector<std::vector<Scalar>>> c(
      3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, Scalar(0))));
  for (int i = 0; i < 3; ++i) {
    c[0][i][i] = Scalar(1);
    c[i][0][i] = Scalar(1);
  }
  c[0][0][0] = Scalar(1);
  c[1][1][2] = Scalar(1);
  c[1][2][0] = Scalar(1);
  CHECK_THROWS_AS(Algebra::from_structure_constants(FieldDescriptor::rationals(), 3, c, vec({1, 0, 0})),
                  Error);

  // Same tensor with e1 e2 = 0 instead is the associative ring k[t]/(t^3).
  c[1][2][0] = Scalar(0);
  CHECK_NOTHROW(Algebra::from_structure_constants(FieldDescriptor::rationals(), 3, c, vec({1, 0, 0})));
}

TEST_CASE("monoid tables and monoid algebras") {
  std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  MonoidCheck mc = check_monoid_table(z3);
  CHECK(mc.associative);
  CHECK(mc.identity == 0);

  Algebra a = Algebra::monoid_algebra(z3);
  CHECK(a.dim() == 3);
  std::vector<Scalar> e1 = vec({0, 1, 0}), e2 = vec({0, 0, 1});
  CHECK(a.multiply(e1, e1) == e2);
  CHECK(a.multiply(e1, e2) == vec({1, 0, 0}));

  std::vector<std::vector<int>> boolean = {{0, 1}, {1, 1}};
  CHECK(check_monoid_table(boolean).associative);
  CHECK(check_monoid_table(boolean).identity == 0);
  CHECK_NOTHROW(Algebra::monoid_algebra(boolean));

  // Left-zero semigroup: x*y = x is associative but admits no identity.
  std::vector<std::vector<int>> no_identity = {{0, 0}, {1, 1}};
  CHECK(check_monoid_table(no_identity).associative);
  CHECK(!check_monoid_table(no_identity).identity);
  CHECK_THROWS_AS(Algebra::monoid_algebra(no_identity), Error);

  std::vector<std::vector<int>> not_assoc = {{1, 0}, {0, 0}};
  CHECK(!check_monoid_table(not_assoc).associative);
  CHECK_THROWS_AS(Algebra::monoid_algebra(not_assoc), Error);

  CHECK_THROWS_AS(check_monoid_table({{0, 1}, {1}}), Error);
  CHECK_THROWS_AS(check_monoid_table({{0, 7}, {1, 0}}), Error);
}

TEST_CASE("product spans") {
  Algebra a = Algebra::matrix_algebra(2);
  Subspace full = Subspace::full(4);
  CHECK(a.product_span(full, full) == full);
  CHECK(a.product_span(a.unit_line(), full) == full);

  Subspace e01 = Subspace::line(unit_mat(2, 0, 1), 4);
  Subspace e10 = Subspace::line(unit_mat(2, 1, 0), 4);
  CHECK(a.product_span(e01, e01).is_zero());
  CHECK(a.product_span(e01, e10) == Subspace::line(unit_mat(2, 0, 0), 4));

  Algebra q = Algebra::poly_quotient({Scalar(-1), Scalar(0), Scalar(1)});
  Subspace t = Subspace::line(vec({0, 1}), 2);
  CHECK(q.product_span(t, t) == q.unit_line());
}

TEST_CASE("algebra over a cyclotomic field accepts matching scalars only") {
  FieldDescriptor f3 = FieldDescriptor::cyclotomic(3);
  Algebra a = Algebra::matrix_algebra(2, f3);
  Scalar z = Scalar::zeta(3);
  std::vector<Scalar> zi = {z, Scalar(0), Scalar(0), z};
  CHECK(a.multiply(zi, zi) == std::vector<Scalar>{z * z, Scalar(0), Scalar(0), z * z});

  CHECK_THROWS_AS(Algebra::poly_quotient({Scalar::zeta(4), Scalar(1)}, f3), Error);
}
