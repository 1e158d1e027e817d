#include "core/matrix.hpp"

#include "core/errors.hpp"

namespace focal {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::dimension_mismatch, "matrix difference shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.e_ < b.e_;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r)
      if (!at(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    Scalar inv = at(row, col).inverse();
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      Scalar f = at(r, col);
      for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

Matrix Matrix::kernel() const {
  Matrix red = *this;
  std::vector<int> pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(static_cast<int>(free_cols.size()), cols_);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(static_cast<int>(k), f) = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      basis.at(static_cast<int>(k), pivots[i]) = -red.at(static_cast<int>(i), f);
  }
  return basis;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (rows_ != cols_) fail(Errc::shape_mismatch, "inverse of a non-square matrix");
  if (rows_ == 0) return Matrix(0, 0);
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar(1);
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<Scalar> Matrix::row(int r) const {
  std::vector<Scalar> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void Matrix::set_row(int r, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != cols_) fail(Errc::dimension_mismatch, "row length mismatch");
  for (int j = 0; j < cols_; ++j) at(r, j) = v[j];
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  std::vector<Scalar> out(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

}  // namespace focal
