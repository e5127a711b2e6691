#include "greenbiset/matrix.hpp"

#include <set>

#include "greenbiset/error.hpp"

namespace gb {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, const Field& f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const Field& f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InvalidArgument("dimension mismatch in matrix-vector product");
  Vec out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("dimension mismatch in matrix product");
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  m.row_labels_ = a.row_labels_;
  m.col_labels_ = b.col_labels_;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r))) return false;
  return true;
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) throw InvalidArgument("label count does not match dimension");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw InvalidArgument("matrix labels must be unique");
}

}  // namespace

void Matrix::set_row_labels(std::vector<std::string> labels) {
  check_labels(labels, rows_);
  row_labels_ = std::move(labels);
}

void Matrix::set_col_labels(std::vector<std::string> labels) {
  check_labels(labels, cols_);
  col_labels_ = std::move(labels);
}

void Matrix::check_field() const {
  for (const auto& s : data_) {
    const Field f = s.field();
    if (f == field_) continue;
    if (field_.kind == Field::Kind::Cyclotomic && f.kind == Field::Kind::Rational) continue;
    throw FieldError("mixed fields in matrix: " + f.name() + " entry in a " + field_.name() + " matrix");
  }
}

}  // namespace gb
