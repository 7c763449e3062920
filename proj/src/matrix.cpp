#include "blockfact/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockfact {

SparseVec sparsify(const Vec& v) {
  SparseVec out;
  for (int i = 0; i < int(v.size()); ++i)
    if (!blockfact::is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

Vec densify(const SparseVec& v, int dim) {
  Vec out(dim);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

void add_scaled(Vec& target, const Rational& scale, const SparseVec& v) {
  if (blockfact::is_zero(scale)) return;
  for (const auto& [i, x] : v) target[i] += scale * x;
}

void add_scaled(Vec& target, const Rational& scale, const Vec& v) {
  if (blockfact::is_zero(scale)) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!blockfact::is_zero(v[i])) target[i] += scale * v[i];
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::col(int c) const {
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::set_row(int r, const Vec& v) {
  for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(int c, const Vec& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (blockfact::is_zero(a)) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs.at(k, j);
        if (!blockfact::is_zero(b)) out.at(i, j) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Rational& a = at(r, c);
      if (!blockfact::is_zero(a) && !blockfact::is_zero(v[c])) out[r] += a * v[c];
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!blockfact::is_zero(e)) return false;
  return true;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!blockfact::is_zero(m.at(r, c))) out.data_[r].emplace_back(c, m.at(r, c));
  return out;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == c) {
    if (blockfact::is_zero(v)) row.erase(it);
    else it->second = v;
  } else if (!blockfact::is_zero(v)) {
    row.insert(it, {c, v});
  }
}

Matrix SparseMatrix::to_dense() const {
  Matrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.at(r, c) = v;
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("sparse product shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  Vec acc(rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    for (const auto& [k, a] : data_[r]) add_scaled(acc, a, rhs.data_[k]);
    out.data_[r] = sparsify(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("sparse sum shape mismatch");
  SparseMatrix out(rows_, cols_);
  Vec acc(cols_);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    add_scaled(acc, Rational(1), data_[r]);
    add_scaled(acc, Rational(1), rhs.data_[r]);
    out.data_[r] = sparsify(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("sparse difference shape mismatch");
  SparseMatrix out(rows_, cols_);
  Vec acc(cols_);
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), Rational(0));
    add_scaled(acc, Rational(1), data_[r]);
    add_scaled(acc, Rational(-1), rhs.data_[r]);
    out.data_[r] = sparsify(acc);
  }
  return out;
}

Vec SparseMatrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("sparse apply shape mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, a] : data_[r])
      if (!blockfact::is_zero(v[c])) out[r] += a * v[c];
  return out;
}

SparseMatrix SparseMatrix::kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (const auto& [j, av] : a.data_[i])
      for (int k = 0; k < b.rows_; ++k) {
        auto& row = out.data_[i * b.rows_ + k];
        for (const auto& [l, bv] : b.data_[k]) row.emplace_back(j * b.cols_ + l, av * bv);
      }
  for (auto& row : out.data_)
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::size_t SparseMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    if (data_[r].size() != 1 || data_[r][0].first != r || data_[r][0].second != 1) return false;
  return true;
}

Matrix operator*(const Matrix& dense, const SparseMatrix& sparse) {
  if (dense.cols() != sparse.rows()) throw std::invalid_argument("mixed product shape mismatch");
  Matrix out(dense.rows(), sparse.cols());
  for (int i = 0; i < dense.rows(); ++i)
    for (int k = 0; k < dense.cols(); ++k) {
      const Rational& a = dense.at(i, k);
      if (blockfact::is_zero(a)) continue;
      for (const auto& [j, b] : sparse.row(k)) out.at(i, j) += a * b;
    }
  return out;
}

Matrix operator*(const SparseMatrix& sparse, const Matrix& dense) {
  if (sparse.cols() != dense.rows()) throw std::invalid_argument("mixed product shape mismatch");
  Matrix out(sparse.rows(), dense.cols());
  for (int i = 0; i < sparse.rows(); ++i)
    for (const auto& [k, a] : sparse.row(i))
      for (int j = 0; j < dense.cols(); ++j) {
        const Rational& b = dense.at(k, j);
        if (!blockfact::is_zero(b)) out.at(i, j) += a * b;
      }
  return out;
}

}  // namespace blockfact
