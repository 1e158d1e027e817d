#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "core/subspace.hpp"

namespace focal {

// Validation result for a finite multiplication table (values are element
// indices).  `identity` is set when a two-sided identity exists.
struct MonoidCheck {
  bool associative = true;
  std::optional<int> identity;
  std::optional<std::array<int, 3>> assoc_witness;
};
MonoidCheck check_monoid_table(const std::vector<std::vector<int>>& table);

// Finite-dimensional associative unital algebra over Q or Q(zeta_n), given by
// structure constants c[i][j][l] on a fixed basis: e_i e_j = sum_l c[i][j][l] e_l.
// Construction validates shape, the unit law, and associativity on all basis
// triples, so a constructed Algebra is always genuinely associative and unital.
class Algebra {
 public:
  static Algebra from_structure_constants(FieldDescriptor field, int dim,
                                          const std::vector<std::vector<std::vector<Scalar>>>& c,
                                          const std::vector<Scalar>& one);

  // Full matrix algebra M_n, basis the matrix units E_ij in row-major order.
  static Algebra matrix_algebra(int n, FieldDescriptor field = FieldDescriptor::rationals());

  // k[t]/(f) for monic f, basis 1, t, ..., t^(deg f - 1); coeffs constant first.
  static Algebra poly_quotient(const std::vector<Scalar>& monic_coeffs,
                               FieldDescriptor field = FieldDescriptor::rationals());

  // Monoid algebra kM, basis indexed by the elements of M.
  static Algebra monoid_algebra(const std::vector<std::vector<int>>& table,
                                FieldDescriptor field = FieldDescriptor::rationals());

  const FieldDescriptor& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<Scalar>& one() const { return one_; }
  const Scalar& c(int i, int j, int l) const { return c_[(size_t(i) * dim_ + j) * dim_ + l]; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  Subspace unit_line() const { return Subspace::line(one_, dim_); }

  // Span of all products uv with u in U, v in V.
  Subspace product_span(const Subspace& u, const Subspace& v) const;

 private:
  Algebra() = default;

  FieldDescriptor field_;
  int dim_ = 0;
  std::vector<Scalar> c_;
  std::vector<Scalar> one_;
};

}  // namespace focal
