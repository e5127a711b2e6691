#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "greenbiset/scalar.hpp"

namespace gb {

/// Dense matrix of exact scalars over one field, with optional row and column
/// labels (basis labels of the spaces it maps between).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  static Matrix identity(std::size_t n, const Field& f);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field& f);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // M v
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  void set_row_labels(std::vector<std::string> labels);
  void set_col_labels(std::vector<std::string> labels);

  /// Throws FieldError when some entry is not of the matrix field.
  void check_field() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::rationals();
  std::vector<Scalar> data_;
  std::vector<std::string> row_labels_, col_labels_;
};

}  // namespace gb
