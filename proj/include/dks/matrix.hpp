#pragma once

#include "dks/rational.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dks {

// Dense matrix over exact rationals. Row-major; 0x0, 0xn and nx0 shapes are
// all legal (empty products behave as the usual conventions dictate,
// e.g. det of the 0x0 matrix is 1).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  /// Square matrix with the given diagonal.
  static Matrix diagonal(const std::vector<Rat>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& c) const;
  Matrix operator-() const { return *this * Rat(-1); }

  Matrix transpose() const;
  Matrix block(int row0, int col0, int nrows, int ncols) const;
  void set_block(int row0, int col0, const Matrix& m);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  Rat trace() const;

  /// Trace-free part: m - (tr m / n) I. Square input required.
  Matrix traceless() const;

  int rank() const;
  Rat det() const;
  /// Fails on singular or non-square input.
  Matrix inverse() const;

  /// Basis of the null space as matrix columns. Deterministic: columns of
  /// the reduced echelon form are scanned left to right; each free column j
  /// yields the vector with 1 in slot j and -R(i,j) in the pivot slots.
  Matrix kernel_basis() const;

  /// Columns are horizontally concatenated.
  static Matrix hstack(const std::vector<Matrix>& ms);
  static Matrix vstack(const std::vector<Matrix>& ms);

  /// Flattens column-by-column into a single column vector.
  Matrix vectorize() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Solves a x = b exactly (b may have several columns). Returns nullopt when
/// the system is inconsistent; free variables are set to zero, so the result
/// is deterministic and unique whenever a has full column rank.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

} // namespace dks
