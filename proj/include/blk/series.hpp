#pragma once

#include <optional>
#include <vector>

#include "blk/matrix.hpp"
#include "blk/poly.hpp"

namespace blk {

// Element of Q[[s]]^dim known modulo s^precision: coeffs[k] is the
// coefficient vector of s^k.
class SeriesVector {
public:
  SeriesVector() = default;
  SeriesVector(std::size_t dim, int precision) : dim_(dim), coeffs_(precision, Vector(dim)) {}
  static SeriesVector unit(std::size_t dim, std::size_t index, int s_power, int precision);

  std::size_t dim() const { return dim_; }
  int precision() const { return static_cast<int>(coeffs_.size()); }

  Rational& at(int k, std::size_t i) { return coeffs_[k][i]; }
  const Rational& at(int k, std::size_t i) const { return coeffs_[k][i]; }
  const Vector& coeff(int k) const { return coeffs_[k]; }
  Vector& coeff(int k) { return coeffs_[k]; }

  bool is_zero() const;
  // Leading term in the (<_s, >_mu) order: lowest s-power, then lowest index.
  std::optional<ModuleTerm> lead() const;

  // this += c * s^shift * v, truncated to this precision.
  void axpy(const Rational& c, int shift, const SeriesVector& v);
  SeriesVector& operator*=(const Rational& c);
  SeriesVector truncated(int precision) const;  // may also extend with zeros

  friend bool operator==(const SeriesVector&, const SeriesVector&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Vector> coeffs_;
};

// Matrix over Q[[s]] known modulo s^precision: coeffs[k] is the s^k
// coefficient matrix.
class SeriesMatrix {
public:
  SeriesMatrix() = default;
  SeriesMatrix(std::size_t rows, std::size_t cols, int precision)
      : rows_(rows), cols_(cols), coeffs_(precision, Matrix(rows, cols)) {}
  static SeriesMatrix identity(std::size_t n, int precision);
  static SeriesMatrix constant(const Matrix& m, int precision);
  static SeriesMatrix from_columns(const std::vector<SeriesVector>& cols, std::size_t rows, int precision);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int precision() const { return static_cast<int>(coeffs_.size()); }

  Matrix& coeff(int k) { return coeffs_[k]; }
  const Matrix& coeff(int k) const { return coeffs_[k]; }
  // Zero matrix beyond the stored coefficients.
  Matrix coeff_or_zero(int k) const;

  SeriesVector column(std::size_t j) const;
  std::vector<SeriesVector> columns() const;
  void set_column(std::size_t j, const SeriesVector& v);

  SeriesMatrix truncated(int precision) const;
  SeriesMatrix shifted(int k) const;   // s^k * this, precision + k
  SeriesMatrix s2_derivative() const;  // s^2 d/ds
  SeriesMatrix transpose() const;
  bool is_zero() const;
  int valuation() const;  // lowest s-power with a nonzero coefficient; precision if zero

  SeriesMatrix& operator+=(const SeriesMatrix& o);
  SeriesMatrix& operator-=(const SeriesMatrix& o);
  SeriesMatrix& operator*=(const Rational& c);
  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Matrix> coeffs_;
};

// Truncated Cauchy product; precision is the smaller of the two. The parallel
// kernel distributes output s-degrees over threads.
SeriesMatrix multiply(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix multiply_serial(const SeriesMatrix& a, const SeriesMatrix& b);

// (A + s^2 d/ds) applied to M: the action of t on coordinate columns.
SeriesMatrix apply_t(const SeriesMatrix& a, const SeriesMatrix& m);

// Gauge transform T^-1 (A + s^2 d/ds) T for an invertible constant T.
SeriesMatrix conjugate_constant(const SeriesMatrix& a, const Matrix& t, const Matrix& t_inv);

// Inverse of a series matrix with invertible constant term.
SeriesMatrix inverse_unit(const SeriesMatrix& u);

}  // namespace blk
