#pragma once

// Dense matrices over an exact field with row reduction, rank and kernel.

#include <cstddef>
#include <vector>

#include "error.hpp"

namespace wcit {

template <class F>
class Matrix {
public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const F& field() const noexcept { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// The listed columns, in order.
  Matrix columns(const std::vector<std::size_t>& which) const {
    Matrix r(field_, rows_, which.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < which.size(); ++j) r(i, j) = (*this)(i, which[j]);
    return r;
  }

  /// [A | B]
  static Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DomainError("hconcat: row count mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m(piv, col).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(row, j));
    auto inv = m(row, col).inverse();
    for (std::size_t j = col; j < C; ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < C; ++j)
      if (!m(row, j).is_zero()) nz.push_back(j);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      auto factor = m(i, col);
      for (auto j : nz) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return row_reduce(m.transpose()).rank();
  return row_reduce(m).rank();
}

/// Basis of {v : m v = 0}, as the columns of the returned matrix.
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
  const std::size_t C = m.cols();
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < C; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<F> basis(m.field(), C, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = m.field().one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(r, free[k]);
  }
  return basis;
}

} // namespace wcit
