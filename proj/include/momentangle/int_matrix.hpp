#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "momentangle/integer.hpp"

namespace momentangle {

/// Row-major dense matrix; the working storage of the elimination kernels.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n, const T& zero, const T& one) {
    DenseMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Sparse integer matrix in compressed-column form. Columns hold
/// (row, value) pairs sorted by row with no explicit zeros.
class IntMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;
  using Column = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// Dense literal, e.g. from_rows({{2, 4}, {6, 8}}).
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_dense(const DenseMatrix<Integer>& dense);
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] const Column& column(std::size_t j) const { return columns_[j]; }

  /// Replaces column j; entries are sorted, merged and zeros dropped.
  void set_column(std::size_t j, Column entries);
  void add_to(std::size_t r, std::size_t c, const Integer& value);

  [[nodiscard]] Integer at(std::size_t r, std::size_t c) const;
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

  [[nodiscard]] IntVector apply(const IntVector& x) const;
  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntMatrix scaled(const Integer& factor) const;
  /// Entries reduced into the canonical range of the coefficient ring.
  [[nodiscard]] IntMatrix reduced(const CoefficientRing& ring) const;
  [[nodiscard]] DenseMatrix<Integer> to_dense() const;
  /// Submatrix on the given row and column index lists (in that order).
  [[nodiscard]] DenseMatrix<Integer> dense_block(const std::vector<std::size_t>& row_ids,
                                                 const std::vector<std::size_t>& col_ids) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace momentangle
