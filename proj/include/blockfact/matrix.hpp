#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "blockfact/rational.hpp"

namespace blockfact {

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparsify(const Vec& v);
Vec densify(const SparseVec& v, int dim);
void add_scaled(Vec& target, const Rational& scale, const SparseVec& v);
void add_scaled(Vec& target, const Rational& scale, const Vec& v);

/// Dense row-major matrix of exact rationals. Zero rows/columns are legal
/// (maps to or from the zero space).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[std::size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);
  void set_col(int c, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;  // skips zero entries
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Matrix& rhs) const = default;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> entries_;
};

/// Row-sparse matrix, used for module action operators whose dense form
/// would be mostly zeros (tensor-power actions in particular).
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const Matrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& row(int r) const { return data_[r]; }

  void set(int r, int c, const Rational& v);  // build-time; keeps rows sorted
  Matrix to_dense() const;

  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  Vec apply(const Vec& v) const;

  /// Kronecker product: (a ⊗ b)[(i,k),(j,l)] = a[i][j] * b[k][l] with
  /// row-major index flattening.
  static SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

  std::size_t nonzero_count() const;
  bool is_identity() const;
  bool operator==(const SparseMatrix& rhs) const = default;

 private:
  int rows_, cols_;
  std::vector<SparseVec> data_;
};

Matrix operator*(const Matrix& dense, const SparseMatrix& sparse);
Matrix operator*(const SparseMatrix& sparse, const Matrix& dense);

}  // namespace blockfact
