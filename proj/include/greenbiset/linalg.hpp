#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "greenbiset/matrix.hpp"

namespace gb {

/// Reduced row echelon form computed with deterministic pivoting: columns are
/// scanned left to right and the first row (in row order) with a nonzero
/// entry becomes the pivot row.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of M x = b with free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

/// Basis of {x : M x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Kernel of a square symmetric Gram matrix. Throws InvalidArgument when not
/// square.
std::vector<Vec> radical_of_symmetric_form(const Matrix& m);

/// Throws DomainError when singular.
Matrix inverse(const Matrix& m);

/// Outcome of the LDL^T test. When the form is not positive definite the
/// witness is a nonzero rational vector x with x^T M x = witness_value <= 0.
struct DefinitenessResult {
  bool positive_definite = false;
  std::vector<Rational> pivots;  // D of LDL^T, up to the first failure
  std::optional<std::vector<Rational>> witness;
  Rational witness_value;
};

/// Symmetric elimination without row exchanges. Requires a square symmetric
/// matrix with rational entries; throws InvalidArgument otherwise.
DefinitenessResult is_positive_definite(const Matrix& m);

/// x^T M y over the rationals.
Rational bilinear_value(const Matrix& m, const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace gb
