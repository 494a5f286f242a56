#pragma once

#include "gradalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

/// Dense exact matrix; every entry carries the matrix's field tag.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Throws InputError on ragged rows or entries from a different field.
  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Checked write; rejects a scalar from another field.
  void set(std::size_t r, std::size_t c, const Scalar& s);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of F^n, stored as a reduced row echelon basis without zero rows,
/// so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient_dim);  // zero subspace

  static Subspace span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(Field f, std::size_t ambient_dim);

  Field field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis_matrix() const { return basis_; }
  std::vector<Vector> basis() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Coordinates of v in basis(); nullopt when v is outside the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its component along the pivot coordinates (canonical coset rep).
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Solution space of m * x = 0.
Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, const Vector& v);

/// Some x with m * x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace gradalg
