#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gradalg {

/// Arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> diagonal;
  IntMatrix left;   // unimodular, rows x rows
  IntMatrix right;  // unimodular, cols x cols
};

/// left * m * right is diagonal with the entries of `diagonal` followed by
/// zeros. Pivot = entry of smallest nonzero absolute value, ties broken by
/// lowest row, then lowest column.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace gradalg
