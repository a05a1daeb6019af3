#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace nabt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& factor);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  /// min(rows, cols) entries, non-negative, each dividing the next.
  std::vector<BigInt> diagonal;
  /// Unimodular transforms with left * M * right == diag(diagonal).
  IntMatrix left;
  IntMatrix right;
};

/// Smith normal form with transforms. Pivots on the entry of least
/// absolute value.
SmithForm smith_normal_form(const IntMatrix& m);

/// Diagonal of the Smith normal form only; skips the transform bookkeeping
/// for large boundary matrices.
std::vector<BigInt> smith_diagonal(IntMatrix m);

/// Rebuilds the diagonal matrix of the given shape.
IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diagonal);

/// Recomputes left * m * right and compares with the diagonal; also checks
/// the divisibility chain and that both transforms have determinant +-1.
bool verify_smith_form(const IntMatrix& m, const SmithForm& s);

BigInt determinant(IntMatrix m);

}  // namespace nabt
