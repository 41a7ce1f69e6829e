#ifndef LPA_MATRIX_HPP_
#define LPA_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpa/poly.hpp"

namespace lpa {

// Dense exact matrix. Any dimension may be zero; the 0x0 matrix is the
// identity of its size and counts as invertible.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix scaled(const Scalar& c) const;

  // Concatenation; all blocks must share the field.
  static Matrix hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& blocks);
  static Matrix vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& blocks);
  static Matrix block_diag(const Field& f, const std::vector<Matrix>& blocks);

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  std::size_t rank() const;
  // Basis of the right kernel {x : m x = 0}, each vector of length cols().
  std::vector<std::vector<Scalar>> right_kernel() const;
  // nullopt when the matrix is not square or not invertible.
  std::optional<Matrix> inverse() const;
  bool is_invertible() const;
  Scalar det() const;  // square only

  // Characteristic polynomial det(xI - m), monic of degree rows(). Square only.
  Poly char_poly() const;
  // det(I - x m): the reversal of the characteristic polynomial. Constant
  // term 1; degree equals rows() exactly when the matrix is invertible.
  Poly reversed_char_poly() const;

  std::string to_string() const;

 private:
  Scalar& entry(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& entry(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;  // row-major
};

// f(m) for square m.
Matrix evaluate_poly(const Poly& f, const Matrix& m);

}  // namespace lpa

#endif  // LPA_MATRIX_HPP_
