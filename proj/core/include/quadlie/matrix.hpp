#ifndef QUADLIE_MATRIX_HPP
#define QUADLIE_MATRIX_HPP

#include "quadlie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadlie {

/// Dense rational matrix. A matrix M represents the linear map sending basis
/// vector b_j to sum_i M(i,j) b_i, so vectors are columns and composition is
/// the usual product.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& entries);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Places the blocks along the diagonal, zero elsewhere.
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c);
  const Rational& operator()(std::size_t r, std::size_t c) const;

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix transposed() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rational trace() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& m, const Vec& v);
  friend Matrix operator*(const Rational& c, Matrix m);

  /// Row-major flattening; the canonical coordinates used for spaces of
  /// matrices (derivation spaces and friends).
  Vec vectorized() const { return data_; }
  static Matrix from_vectorized(const Vec& flat, std::size_t rows, std::size_t cols);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;  // row-major
};

/// Reduced row-echelon form and rank, by exact Gauss-Jordan elimination.
std::pair<Matrix, std::size_t> rref(Matrix m);

std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Inverse of a square invertible matrix; throws std::invalid_argument if
/// singular or not square.
Matrix inverse(const Matrix& m);

/// One exact solution x of m x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace quadlie

#endif
