#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "greenscan/rational.hpp"

namespace greenscan {

/// Dense exact rational matrix, row-major. Subspaces are passed around as
/// matrices whose columns form a basis.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;

  Matrix operator*(const Matrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  /// Lexicographic order on (rows, cols, entries); used for canonical sorting.
  bool operator<(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);

/// Rank over F_p when every denominator is invertible mod p, otherwise nullopt.
/// Never exceeds the rational rank.
std::optional<std::size_t> rank_mod_p(const Matrix& m, unsigned long p);

/// Rank with a modular shortcut: when the mod-p rank already equals
/// min(rows, cols) it is exact, otherwise falls back to rational elimination.
std::size_t fast_rank(const Matrix& m);

/// Basis of {x : m x = 0} as columns.
Matrix nullspace(const Matrix& m);

/// Canonical basis of the column space: columns of the transposed RREF.
/// Two matrices span the same space iff their canonical bases are equal.
Matrix column_space(const Matrix& m);

/// Columns of the identity completing `subspace` (canonical) to the ambient space.
Matrix complement_basis(const Matrix& subspace);

bool span_contains(const Matrix& basis, const Matrix& vectors);

/// Some X with a X = b, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Rational determinant(Matrix m);

/// Sum of two subspaces (canonical).
Matrix subspace_sum(const Matrix& u, const Matrix& v);
/// Intersection of two subspaces given as column bases (canonical).
Matrix subspace_intersection(const Matrix& u, const Matrix& v);

}  // namespace greenscan
