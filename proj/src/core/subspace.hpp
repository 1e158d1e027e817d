#pragma once

#include <vector>

#include "core/matrix.hpp"

namespace focal {

// Subspace of k^d held in its unique canonical form: the reduced row echelon
// basis with zero rows dropped.  Two subspaces are equal iff their canonical
// bases are identical, which makes subspaces usable as ordered map keys.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(const Matrix& vectors_as_rows, int ambient);
  static Subspace span(const std::vector<std::vector<Scalar>>& vectors, int ambient);
  static Subspace line(const std::vector<Scalar>& v, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const Subspace& o) const;
  bool contains_vector(const std::vector<Scalar>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    return a.basis_ < b.basis_;
  }

 private:
  int ambient_;
  Matrix basis_;
};

}  // namespace focal
