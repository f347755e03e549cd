#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quivernc/arith.hpp"

namespace quivernc {

/// Dense row-major matrix of exact scalars. Arithmetic is always performed
/// relative to an explicit Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const noexcept { return data_; }
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Rational& s, const Matrix& a);

/// Horizontal and vertical concatenation. Empty operands are allowed when the
/// shared dimension agrees.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
RowEchelon rref(const Field& f, const Matrix& a);
std::size_t rank(const Field& f, const Matrix& a);

/// Columns form a basis of {x : a x = 0}.
Matrix nullspace(const Field& f, const Matrix& a);
/// Rows form a basis of {y : y a = 0}.
Matrix left_nullspace(const Field& f, const Matrix& a);
/// Columns form a basis of the column space of a.
Matrix column_space(const Field& f, const Matrix& a);
Matrix inverse(const Field& f, const Matrix& a);

}  // namespace quivernc
