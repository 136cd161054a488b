#include "eo/matrix.hpp"

#include <stdexcept>

namespace eo {

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Elem> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (auto e : data_)
    if (e.code != 0) return false;
  return true;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x.code == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) = F.add(out.at(i, j), F.mul(x, b.at(k, j)));
    }
  return out;
}

std::vector<Elem> apply(const Field& F, const Matrix& a, const std::vector<Elem>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Elem> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = F.add(out[i], F.mul(a.at(i, j), v[j]));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix scale(const Field& F, const Matrix& a, Elem s) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = F.mul(a.at(i, j), s);
  return out;
}

Matrix pth_root(const Field& F, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = F.pth_root(a.at(i, j));
  return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("stacking matrices of different width");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Matrix rref(const Field& F, Matrix a) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a.at(pivot, col).code == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(lead_row, j));
    const Elem inv = F.inv(a.at(lead_row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(lead_row, j) = F.mul(a.at(lead_row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row) continue;
      const Elem c = a.at(i, col);
      if (c.code == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(lead_row, j)));
    }
    ++lead_row;
  }
  Matrix out(lead_row, a.cols());
  for (std::size_t i = 0; i < lead_row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  return out;
}

std::size_t rank(const Field& F, const Matrix& a) { return rref(F, a).rows(); }

Matrix nullspace(const Field& F, const Matrix& a) {
  const Matrix r = rref(F, a);
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (r.at(i, c).code == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n);
    v[free] = F.one();
    for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = F.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return rref(F, Matrix::from_rows(basis, n));
}

}  // namespace eo
