#pragma once

#include <optional>
#include <vector>

#include "core/scalar.hpp"

namespace focal {

// Dense matrix over exact scalars.  Row reduction is plain Gauss-Jordan;
// all sizes in this engine are small, so exactness wins over cleverness.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b);

  bool is_zero() const;

  // Reduce in place to reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;

  // Rows of the result form a basis of {x : (*this) * x = 0}.
  Matrix kernel() const;

  std::optional<Matrix> try_inverse() const;

  std::vector<Scalar> row(int r) const;
  void set_row(int r, const std::vector<Scalar>& v);

  // (*this) * v with v as a column vector.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

}  // namespace focal
