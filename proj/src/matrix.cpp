#include "blk/matrix.hpp"

#include <sstream>

#include "blk/error.hpp"

namespace blk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Matrix::set_column(std::size_t j, std::span<const Rational> v) {
  if (v.size() != rows_) fail(ErrorKind::InvariantViolation, "set_column: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvariantViolation, "matrix add: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvariantViolation, "matrix sub: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Vector operator*(const Matrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols_) fail(ErrorKind::InvariantViolation, "matrix-vector: shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

namespace {

void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(k, j) != 0) c(i, j) += aik * b(k, j);
  }
}

void check_product_shape(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::InvariantViolation, "matrix product: shape mismatch");
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix c(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (n * static_cast<long>(b.cols()) > 256)
  for (long i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

Matrix power(const Matrix& a, int k) {
  Matrix r = Matrix::identity(a.rows());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Echelon rref(Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> kernel(const Matrix& a) {
  auto e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> left_kernel(const Matrix& a) { return kernel(a.transpose()); }

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.square()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::vector<Vector> independent_subset(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<Vector> chosen;
  for (const auto& v : vectors) {
    auto trial = chosen;
    trial.push_back(v);
    if (rank(Matrix::from_columns(trial, dim)) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

bool is_nilpotent(const Matrix& a) { return power(a, static_cast<int>(a.rows())).is_zero(); }

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

}  // namespace blk
