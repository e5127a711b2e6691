#include "greenbiset/linalg.hpp"

#include "greenbiset/error.hpp"

namespace gb {

Echelon row_reduce(const Matrix& input) {
  input.check_field();
  Echelon out{input, {}};
  Matrix& m = out.rref;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(r, k));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InvalidArgument("dimension mismatch in solve_linear");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.rref(i, m.cols());
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> radical_of_symmetric_form(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("radical of a non-square matrix");
  return kernel_basis(m);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

namespace {

std::vector<std::vector<Rational>> rational_entries(const Matrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      try {
        a[r][c] = m(r, c).to_rational();
      } catch (const FieldError&) {
        throw InvalidArgument("positive-definiteness requires rational entries");
      }
    }
  return a;
}

}  // namespace

Rational bilinear_value(const Matrix& m, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s(0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += x[r] * m(r, c).to_rational() * y[c];
  return s;
}

DefinitenessResult is_positive_definite(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("positive-definiteness of a non-square matrix");
  if (!m.is_symmetric()) throw InvalidArgument("positive-definiteness of a non-symmetric matrix");
  const std::size_t n = m.rows();
  auto s = rational_entries(m);  // Schur complement, updated in place
  std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n, Rational(0)));
  DefinitenessResult result;

  // x = L_k^{-T} (0, y): back substitution through the first k columns of L
  auto lift = [&](std::size_t k, std::vector<Rational> y) {
    for (std::size_t i = k; i-- > 0;) {
      Rational acc(0);
      for (std::size_t j = i + 1; j < n; ++j) acc += l[j][i] * y[j];
      y[i] = -acc;
    }
    return y;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = s[k][k];
    result.pivots.push_back(d);
    if (sgn(d) <= 0) {
      std::vector<Rational> y(n, Rational(0));
      std::size_t partner = n;
      if (sgn(d) == 0)
        for (std::size_t j = k + 1; j < n; ++j)
          if (sgn(s[k][j]) != 0) {
            partner = j;
            break;
          }
      if (partner == n) {
        y[k] = 1;
      } else {
        // (t e_k + e_j)^T S (t e_k + e_j) = S_jj + 2 t S_kj = -1
        y[k] = -(s[partner][partner] + 1) / (2 * s[k][partner]);
        y[partner] = 1;
      }
      result.witness = lift(k, std::move(y));
      result.witness_value = bilinear_value(m, *result.witness, *result.witness);
      return result;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      l[i][k] = s[i][k] / d;
      l[i][i] = 1;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) s[i][j] -= l[i][k] * s[k][j];
  }
  result.positive_definite = true;
  return result;
}

}  // namespace gb
