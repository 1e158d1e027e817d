#include "core/subspace.hpp"

#include "core/errors.hpp"

namespace focal {

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::span(const Matrix& vectors_as_rows, int ambient) {
  if (vectors_as_rows.cols() != ambient && vectors_as_rows.rows() > 0)
    fail(Errc::dimension_mismatch, "spanning vectors do not live in the ambient space");
  Matrix m = vectors_as_rows;
  if (m.rows() == 0) return zero(ambient);
  std::vector<int> pivots = m.rref();
  Matrix basis(static_cast<int>(pivots.size()), ambient);
  for (size_t i = 0; i < pivots.size(); ++i) basis.set_row(static_cast<int>(i), m.row(static_cast<int>(i)));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = basis;
  return s;
}

Subspace Subspace::span(const std::vector<std::vector<Scalar>>& vectors, int ambient) {
  Matrix m(static_cast<int>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient)
      fail(Errc::dimension_mismatch, "spanning vector has wrong length");
    m.set_row(static_cast<int>(i), vectors[i]);
  }
  return span(m, ambient);
}

Subspace Subspace::line(const std::vector<Scalar>& v, int ambient) {
  return span(std::vector<std::vector<Scalar>>{v}, ambient);
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) fail(Errc::dimension_mismatch, "sum of subspaces of different ambient spaces");
  Matrix stacked(dim() + o.dim(), ambient_);
  for (int i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
  for (int i = 0; i < o.dim(); ++i) stacked.set_row(dim() + i, o.basis_.row(i));
  return span(stacked, ambient_);
}

// Zassenhaus: row reduce [U|U; V|0]; rows whose left half vanished carry a
// basis of the intersection in their right half.
Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    fail(Errc::dimension_mismatch, "intersection of subspaces of different ambient spaces");
  int p = dim(), q = o.dim();
  Matrix work(p + q, 2 * ambient_);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < ambient_; ++j) {
      work.at(i, j) = basis_.at(i, j);
      work.at(i, ambient_ + j) = basis_.at(i, j);
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < ambient_; ++j) work.at(p + i, j) = o.basis_.at(i, j);
  work.rref();
  std::vector<std::vector<Scalar>> inter_rows;
  for (int i = 0; i < work.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < ambient_ && left_zero; ++j)
      if (!work.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    std::vector<Scalar> right(ambient_);
    bool nonzero = false;
    for (int j = 0; j < ambient_; ++j) {
      right[j] = work.at(i, ambient_ + j);
      if (!right[j].is_zero()) nonzero = true;
    }
    if (nonzero) inter_rows.push_back(std::move(right));
  }
  return span(inter_rows, ambient_);
}

bool Subspace::contains_vector(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    fail(Errc::dimension_mismatch, "membership test with wrong vector length");
  std::vector<Scalar> rem = v;
  for (int i = 0; i < dim(); ++i) {
    int pivot = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;
    Scalar f = rem[pivot];
    if (f.is_zero()) continue;
    for (int j = pivot; j < ambient_; ++j) rem[j] -= f * basis_.at(i, j);
  }
  for (const auto& x : rem)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  if (ambient_ != o.ambient_) fail(Errc::dimension_mismatch, "containment test across ambient spaces");
  for (int i = 0; i < o.dim(); ++i)
    if (!contains_vector(o.basis_.row(i))) return false;
  return true;
}

}  // namespace focal
