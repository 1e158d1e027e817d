#include "core/algebra.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace focal {

namespace {

void check_scalar_field(const Scalar& s, const FieldDescriptor& field, const char* what) {
  if (s.order() != 1 && s.order() != field.order)
    fail(Errc::order_mismatch,
         std::string(what) + " has cyclotomic order " + std::to_string(s.order()) +
             " but the algebra field has order " + std::to_string(field.order));
}

}  // namespace

MonoidCheck check_monoid_table(const std::vector<std::vector<int>>& table) {
  MonoidCheck result;
  int n = static_cast<int>(table.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(Errc::shape_mismatch, "multiplication table is not square");
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(Errc::index_out_of_range, "table entry out of range at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
  }
  for (int i = 0; i < n && result.associative; ++i)
    for (int j = 0; j < n && result.associative; ++j)
      for (int k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          result.associative = false;
          result.assoc_witness = {{i, j, k}};
          break;
        }
      }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      result.identity = e;
      break;
    }
  }
  return result;
}

Algebra Algebra::from_structure_constants(FieldDescriptor field, int dim,
                                          const std::vector<std::vector<std::vector<Scalar>>>& c,
                                          const std::vector<Scalar>& one) {
  if (dim <= 0) fail(Errc::shape_mismatch, "algebra dimension must be positive");
  if (static_cast<int>(c.size()) != dim)
    fail(Errc::shape_mismatch, "structure tensor has wrong first extent");
  Algebra a;
  a.field_ = field;
  a.dim_ = dim;
  a.c_.assign(size_t(dim) * dim * dim, Scalar(0));
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(c[i].size()) != dim)
      fail(Errc::shape_mismatch, "structure tensor has wrong second extent at " + std::to_string(i));
    for (int j = 0; j < dim; ++j) {
      if (static_cast<int>(c[i][j].size()) != dim)
        fail(Errc::shape_mismatch,
             "structure tensor has wrong third extent at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (int l = 0; l < dim; ++l) {
        check_scalar_field(c[i][j][l], field, "structure constant");
        a.c_[(size_t(i) * dim + j) * dim + l] = c[i][j][l];
      }
    }
  }
  if (static_cast<int>(one.size()) != dim) fail(Errc::shape_mismatch, "unit vector has wrong length");
  for (const auto& s : one) check_scalar_field(s, field, "unit coordinate");
  a.one_ = one;

  std::vector<Scalar> basis_vec(dim, Scalar(0));
  for (int i = 0; i < dim; ++i) {
    basis_vec.assign(dim, Scalar(0));
    basis_vec[i] = Scalar(1);
    if (a.multiply(a.one_, basis_vec) != basis_vec || a.multiply(basis_vec, a.one_) != basis_vec)
      fail(Errc::unit_fails, "declared unit does not act as identity on basis element " + std::to_string(i));
  }

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int l = 0; l < dim; ++l) {
        // (e_i e_j) e_l vs e_i (e_j e_l), expanded through the tensor.
        std::vector<Scalar> lhs(dim, Scalar(0)), rhs(dim, Scalar(0));
        for (int m = 0; m < dim; ++m) {
          const Scalar& cij = a.c(i, j, m);
          if (!cij.is_zero())
            for (int p = 0; p < dim; ++p) lhs[p] += cij * a.c(m, l, p);
          const Scalar& cjl = a.c(j, l, m);
          if (!cjl.is_zero())
            for (int p = 0; p < dim; ++p) rhs[p] += a.c(i, m, p) * cjl;
        }
        if (lhs != rhs)
          fail(Errc::not_associative, "associativity fails on basis triple (" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(l) + ")");
      }
  return a;
}

Algebra Algebra::matrix_algebra(int n, FieldDescriptor field) {
  if (n <= 0) fail(Errc::shape_mismatch, "matrix algebra size must be positive");
  int d = n * n;
  Algebra a;
  a.field_ = field;
  a.dim_ = d;
  a.c_.assign(size_t(d) * d * d, Scalar(0));
  // E_ij E_kl = [j == k] E_il; basis index of E_ij is i*n + j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) a.c_[(size_t(i * n + j) * d + (k * n + l)) * d + (i * n + l)] = Scalar(1);
  a.one_.assign(d, Scalar(0));
  for (int i = 0; i < n; ++i) a.one_[i * n + i] = Scalar(1);
  return a;
}

Algebra Algebra::poly_quotient(const std::vector<Scalar>& monic_coeffs, FieldDescriptor field) {
  int m = static_cast<int>(monic_coeffs.size()) - 1;
  if (m < 1) fail(Errc::shape_mismatch, "quotient modulus must have degree at least 1");
  if (!monic_coeffs[m].is_one()) fail(Errc::not_monic, "quotient modulus is not monic");
  for (const auto& s : monic_coeffs) check_scalar_field(s, field, "modulus coefficient");

  // Powers t^k mod f for k = 0 .. 2m-2.
  std::vector<std::vector<Scalar>> rep(2 * m - 1, std::vector<Scalar>(m, Scalar(0)));
  for (int k = 0; k < m; ++k) rep[k][k] = Scalar(1);
  for (int k = m; k <= 2 * m - 2; ++k) {
    // t^k = t * t^(k-1); reduce the overflow of t^m via f.
    std::vector<Scalar> prev = rep[k - 1];
    std::vector<Scalar> cur(m, Scalar(0));
    for (int i = 0; i + 1 < m; ++i) cur[i + 1] = prev[i];
    const Scalar& top = prev[m - 1];
    if (!top.is_zero())
      for (int i = 0; i < m; ++i) cur[i] -= top * monic_coeffs[i];
    rep[k] = cur;
  }

  std::vector<std::vector<std::vector<Scalar>>> c(
      m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m, Scalar(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c[i][j] = rep[i + j];
  std::vector<Scalar> one(m, Scalar(0));
  one[0] = Scalar(1);
  return from_structure_constants(field, m, c, one);
}

Algebra Algebra::monoid_algebra(const std::vector<std::vector<int>>& table, FieldDescriptor field) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::shape_mismatch, "empty multiplication table");
  MonoidCheck check = check_monoid_table(table);
  if (!check.associative) {
    auto [i, j, k] = *check.assoc_witness;
    fail(Errc::not_a_monoid, "table is not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
  }
  if (!check.identity) fail(Errc::not_a_monoid, "table has no two-sided identity");
  std::vector<std::vector<std::vector<Scalar>>> c(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j][table[i][j]] = Scalar(1);
  std::vector<Scalar> one(n, Scalar(0));
  one[*check.identity] = Scalar(1);
  return from_structure_constants(field, n, c, one);
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(Errc::dimension_mismatch, "algebra multiply with wrong coordinate length");
  std::vector<Scalar> z(dim_, Scalar(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (int l = 0; l < dim_; ++l) {
        const Scalar& cl = c(i, j, l);
        if (!cl.is_zero()) z[l] += f * cl;
      }
    }
  }
  return z;
}

Subspace Algebra::product_span(const Subspace& u, const Subspace& v) const {
  if (u.ambient() != dim_ || v.ambient() != dim_)
    fail(Errc::dimension_mismatch, "product of subspaces outside this algebra");
  std::vector<std::vector<Scalar>> products;
  products.reserve(size_t(u.dim()) * v.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) products.push_back(multiply(u.basis().row(i), v.basis().row(j)));
  return Subspace::span(products, dim_);
}

}  // namespace focal
