#pragma once

#include <initializer_list>
#include <vector>

#include "hyperhom/rational.hpp"
#include "hyperhom/ring.hpp"

namespace hyperhom {

// Dense matrix with exact rational entries.  All algorithms in the library
// stay in exact arithmetic; there is no floating point anywhere downstream.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  Matrix transposed() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const = default;

  Matrix column(int c) const;
  Matrix columns(const std::vector<int>& which) const;
  Matrix rows_selected(const std::vector<int>& which) const;
  bool is_zero() const;
  bool is_integral() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

  // Appends the columns of o (row counts must agree).
  static Matrix hconcat(const Matrix& a, const Matrix& b);
  static Matrix vconcat(const Matrix& a, const Matrix& b);

  // Entry-wise reduction into the ring's canonical representatives.
  Matrix reduced(const Coefficients& coeff) const;

  std::string to_string() const;  // debugging aid

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace hyperhom
