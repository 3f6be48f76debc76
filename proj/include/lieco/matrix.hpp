#ifndef LIECO_MATRIX_HPP
#define LIECO_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lieco/rational.hpp"

namespace lieco {

/// Dense matrix of exact rationals. Dimensions are fixed at construction;
/// entries are mutable until the matrix is handed to a Subspace.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  /// Convenience for literal test data: integer entries.
  static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Unique reduced row echelon form; row space preserved.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

/// a stacked on top of b (must have equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

Rational dot(const Vec& a, const Vec& b);

/// v1^T * form * v2.
Rational bilinear(const Vec& v1, const Matrix& form, const Vec& v2);

bool is_zero_vec(const Vec& v);

}  // namespace lieco

#endif
