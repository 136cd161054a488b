#pragma once

#include <cstddef>
#include <vector>

#include "eo/gf.hpp"

namespace eo {

/// Row-major dense matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& F, std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Elem> row(std::size_t r) const;
  std::vector<Elem> column(std::size_t c) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
std::vector<Elem> apply(const Field& F, const Matrix& a, const std::vector<Elem>& v);
Matrix transpose(const Matrix& a);
Matrix scale(const Field& F, const Matrix& a, Elem s);
/// Entrywise p-th root.
Matrix pth_root(const Field& F, const Matrix& a);
/// Rows of a followed by rows of b.
Matrix stack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form with zero rows dropped; canonical for the row
/// space.
Matrix rref(const Field& F, Matrix a);
std::size_t rank(const Field& F, const Matrix& a);
/// Rows form a basis (in RREF) of {x : a x = 0}.
Matrix nullspace(const Field& F, const Matrix& a);

}  // namespace eo
