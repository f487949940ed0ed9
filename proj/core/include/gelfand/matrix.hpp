#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand {

/// Dense matrix over F_q. Vectors are n x 1 (or 1 x n) matrices.
///
/// Every matrix carries its field; binary operations on matrices over
/// different fields throw DomainError rather than coerce.
class Matrix {
 public:
  Matrix(FieldRef field, int rows, int cols);
  Matrix(FieldRef field, int rows, int cols, std::vector<Scalar> entries);

  static Matrix identity(FieldRef field, int n);
  static Matrix column(FieldRef field, std::span<const Scalar> coords);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FieldRef& field() const { return field_; }
  std::span<const Scalar> entries() const { return entries_; }

  Scalar operator()(int r, int c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(int r, int c) { return entries_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldRef field_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(Scalar s, const Matrix& a);

Matrix transpose(const Matrix& a);
Scalar det(const Matrix& a);
int rank(const Matrix& a);
/// Throws SingularMatrix when a is not invertible.
Matrix inverse(const Matrix& a);
bool is_symmetric(const Matrix& a);

/// Inner product of two vectors (either orientation) under the dot form.
Scalar dot(const Matrix& x, const Matrix& y);

/// Injective byte encoding (rows, cols, entry indices); stable across runs.
std::vector<std::uint8_t> canonical_bytes(const Matrix& a);

/// Matrix literal: rows separated by ';', entries by ',', scalars as indices,
/// e.g. "1,2;0,1".
std::string to_literal(const Matrix& a);
Matrix parse_matrix(std::string_view literal, FieldRef field);
/// Comma-separated scalars as a column vector.
Matrix parse_vector(std::string_view literal, FieldRef field);

// Short aliases.
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix mat_transpose(const Matrix& a) { return transpose(a); }
inline Scalar mat_det(const Matrix& a) { return det(a); }
inline int mat_rank(const Matrix& a) { return rank(a); }
inline Matrix mat_inverse(const Matrix& a) { return inverse(a); }

}  // namespace gelfand
