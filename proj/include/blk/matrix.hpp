#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blk/rational.hpp"

namespace blk {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);
  static Matrix diagonal(std::initializer_list<Rational> diag) { return diagonal(std::span<const Rational>(diag.begin(), diag.size())); }
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const Rational> v);
  std::vector<Vector> columns() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_diagonal() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Rational> v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Parallel product (OpenMP over output rows) and the serial reference it is
// tested against.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_serial(const Matrix& a, const Matrix& b);

Matrix power(const Matrix& a, int k);

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivots are taken in column order, first nonzero
// row from the top.
Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);

// Basis of {v : a v = 0}, one vector per free column, in RREF convention.
std::vector<Vector> kernel(const Matrix& a);

// Basis of {w : w^T a = 0}, as row vectors.
std::vector<Vector> left_kernel(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);
// Some solution x of a x = b, or nullopt.
std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b);

// Columns of `vectors` forming a maximal independent subset, greedy in order.
std::vector<Vector> independent_subset(const std::vector<Vector>& vectors, std::size_t dim);

bool is_nilpotent(const Matrix& a);

}  // namespace blk
