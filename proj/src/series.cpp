#include "blk/series.hpp"

#include <algorithm>

#include "blk/error.hpp"

namespace blk {

SeriesVector SeriesVector::unit(std::size_t dim, std::size_t index, int s_power, int precision) {
  SeriesVector v(dim, precision);
  if (s_power < precision) v.at(s_power, index) = 1;
  return v;
}

bool SeriesVector::is_zero() const {
  for (const auto& c : coeffs_)
    for (const auto& x : c)
      if (x != 0) return false;
  return true;
}

std::optional<ModuleTerm> SeriesVector::lead() const {
  for (int k = 0; k < precision(); ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      if (coeffs_[k][i] != 0) return ModuleTerm{k, static_cast<int>(i)};
  return std::nullopt;
}

void SeriesVector::axpy(const Rational& c, int shift, const SeriesVector& v) {
  if (c == 0) return;
  if (v.dim_ != dim_) fail(ErrorKind::InvariantViolation, "axpy: dimension mismatch");
  const int top = std::min(precision(), v.precision() + shift);
  for (int k = std::max(shift, 0); k < top; ++k) {
    const Vector& src = v.coeffs_[k - shift];
    Vector& dst = coeffs_[k];
    for (std::size_t i = 0; i < dim_; ++i)
      if (src[i] != 0) dst[i] += c * src[i];
  }
}

SeriesVector& SeriesVector::operator*=(const Rational& c) {
  for (auto& v : coeffs_)
    for (auto& x : v) x *= c;
  return *this;
}

SeriesVector SeriesVector::truncated(int precision) const {
  SeriesVector r(dim_, precision);
  for (int k = 0; k < std::min(precision, this->precision()); ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

SeriesMatrix SeriesMatrix::identity(std::size_t n, int precision) {
  return constant(Matrix::identity(n), precision);
}

SeriesMatrix SeriesMatrix::constant(const Matrix& m, int precision) {
  SeriesMatrix r(m.rows(), m.cols(), precision);
  if (precision > 0) r.coeffs_[0] = m;
  return r;
}

SeriesMatrix SeriesMatrix::from_columns(const std::vector<SeriesVector>& cols, std::size_t rows, int precision) {
  SeriesMatrix r(rows, cols.size(), precision);
  for (std::size_t j = 0; j < cols.size(); ++j) r.set_column(j, cols[j].truncated(precision));
  return r;
}

Matrix SeriesMatrix::coeff_or_zero(int k) const {
  if (k >= 0 && k < precision()) return coeffs_[k];
  return Matrix(rows_, cols_);
}

SeriesVector SeriesMatrix::column(std::size_t j) const {
  SeriesVector v(rows_, precision());
  for (int k = 0; k < precision(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) v.at(k, i) = coeffs_[k](i, j);
  return v;
}

std::vector<SeriesVector> SeriesMatrix::columns() const {
  std::vector<SeriesVector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void SeriesMatrix::set_column(std::size_t j, const SeriesVector& v) {
  for (int k = 0; k < precision(); ++k)
    for (std::size_t i = 0; i < rows_; ++i)
      coeffs_[k](i, j) = k < v.precision() ? v.at(k, i) : Rational(0);
}

SeriesMatrix SeriesMatrix::truncated(int precision) const {
  SeriesMatrix r(rows_, cols_, precision);
  for (int k = 0; k < std::min(precision, this->precision()); ++k) r.coeffs_[k] = coeffs_[k];
  return r;
}

SeriesMatrix SeriesMatrix::shifted(int k) const {
  SeriesMatrix r(rows_, cols_, precision() + k);
  for (int i = 0; i < precision(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

SeriesMatrix SeriesMatrix::s2_derivative() const {
  // s^2 d/ds s^k = k s^(k+1); known to the same precision.
  SeriesMatrix r(rows_, cols_, precision());
  for (int k = 1; k + 1 < precision(); ++k) r.coeffs_[k + 1] = coeffs_[k] * Rational(k);
  return r;
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix r(cols_, rows_, precision());
  for (int k = 0; k < precision(); ++k) r.coeffs_[k] = coeffs_[k].transpose();
  return r;
}

bool SeriesMatrix::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Matrix& m) { return m.is_zero(); });
}

int SeriesMatrix::valuation() const {
  for (int k = 0; k < precision(); ++k)
    if (!coeffs_[k].is_zero()) return k;
  return precision();
}

SeriesMatrix& SeriesMatrix::operator+=(const SeriesMatrix& o) {
  const int p = std::min(precision(), o.precision());
  coeffs_.resize(p);
  for (int k = 0; k < p; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator-=(const SeriesMatrix& o) {
  const int p = std::min(precision(), o.precision());
  coeffs_.resize(p);
  for (int k = 0; k < p; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

SeriesMatrix& SeriesMatrix::operator*=(const Rational& c) {
  for (auto& m : coeffs_) m *= c;
  return *this;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) { return multiply(a, b); }

namespace {

Matrix product_coefficient(const SeriesMatrix& a, const SeriesMatrix& b, int k) {
  Matrix acc(a.rows(), b.cols());
  for (int i = 0; i <= k; ++i) {
    const Matrix& ai = a.coeff(i);
    const Matrix& bj = b.coeff(k - i);
    if (ai.is_zero() || bj.is_zero()) continue;
    acc += multiply_serial(ai, bj);
  }
  return acc;
}

void check_shapes(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::InvariantViolation, "series product: shape mismatch");
}

}  // namespace

SeriesMatrix multiply_serial(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_shapes(a, b);
  const int p = std::min(a.precision(), b.precision());
  SeriesMatrix c(a.rows(), b.cols(), p);
  for (int k = 0; k < p; ++k) c.coeff(k) = product_coefficient(a, b, k);
  return c;
}

SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b) {
  check_shapes(a, b);
  const int p = std::min(a.precision(), b.precision());
  SeriesMatrix c(a.rows(), b.cols(), p);
#pragma omp parallel for schedule(dynamic) if (p > 2 && a.rows() * b.cols() > 16)
  for (int k = 0; k < p; ++k) c.coeff(k) = product_coefficient(a, b, k);
  return c;
}

SeriesMatrix apply_t(const SeriesMatrix& a, const SeriesMatrix& m) {
  return multiply(a, m) + m.s2_derivative();
}

SeriesMatrix conjugate_constant(const SeriesMatrix& a, const Matrix& t, const Matrix& t_inv) {
  SeriesMatrix r(a.rows(), a.cols(), a.precision());
  for (int k = 0; k < a.precision(); ++k) r.coeff(k) = t_inv * a.coeff(k) * t;
  return r;
}

SeriesMatrix inverse_unit(const SeriesMatrix& u) {
  const int p = u.precision();
  auto u0_inv = inverse(u.coeff(0));
  if (!u0_inv) fail(ErrorKind::RankDeficient, "inverse_unit: constant term is singular");
  SeriesMatrix v(u.cols(), u.rows(), p);
  if (p == 0) return v;
  v.coeff(0) = *u0_inv;
  // u v = 1: v_k = -u0^-1 sum_{i>=1} u_i v_{k-i}.
  for (int k = 1; k < p; ++k) {
    Matrix acc(u.rows(), u.rows());
    for (int i = 1; i <= k; ++i)
      if (!u.coeff(i).is_zero()) acc += u.coeff(i) * v.coeff(k - i);
    v.coeff(k) = (*u0_inv * acc) * Rational(-1);
  }
  return v;
}

}  // namespace blk
