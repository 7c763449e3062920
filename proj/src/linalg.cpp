#include "blockfact/linalg.hpp"

#include <stdexcept>

namespace blockfact {

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& a = res.mat;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a.at(i, c))) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
    Rational inv = a.at(r, c);
    if (inv != 1)
      for (int j = c; j < cols; ++j)
        if (!is_zero(a.at(r, j))) a.at(r, j) /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a.at(i, c);
      if (is_zero(f)) continue;
      for (int j = c; j < cols; ++j) {
        const Rational& p = a.at(r, j);
        if (!is_zero(p)) a.at(i, j) -= f * p;
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(int ambient_dim, const Matrix& spanning_rows) : ambient_(ambient_dim) {
  if (spanning_rows.cols() != ambient_dim && spanning_rows.rows() != 0)
    throw std::invalid_argument("subspace spanning rows have wrong width");
  RrefResult r = rref(spanning_rows);
  basis_ = Matrix(r.rank, ambient_dim);
  for (int i = 0; i < r.rank; ++i)
    for (int c = 0; c < ambient_dim; ++c) basis_.at(i, c) = r.mat.at(i, c);
  pivots_ = std::move(r.pivots);
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("vector has wrong ambient dimension");
  Vec rem = v;
  Vec coords(dim());
  for (int i = 0; i < dim(); ++i) {
    const Rational c = rem[pivots_[i]];
    if (is_zero(c)) continue;
    coords[i] = c;
    for (int j = 0; j < ambient_; ++j) {
      const Rational& b = basis_.at(i, j);
      if (!is_zero(b)) rem[j] -= c * b;
    }
  }
  for (const auto& x : rem)
    if (!is_zero(x)) return std::nullopt;
  return coords;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const int cols = m.cols();
  // One generator per free column: identity at the free column, minus the
  // echelon column above each pivot. Canonicalized by the Subspace ctor.
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int c = 0; c < cols; ++c) {
      if (p < r.pivots.size() && r.pivots[p] == c) ++p;
      else free_cols.push_back(c);
    }
  }
  Matrix gen(int(free_cols.size()), cols);
  for (int g = 0; g < int(free_cols.size()); ++g) {
    const int f = free_cols[g];
    gen.at(g, f) = 1;
    for (int i = 0; i < r.rank; ++i) gen.at(g, r.pivots[i]) = -r.mat.at(i, f);
  }
  return Subspace(cols, gen);
}

Subspace image(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

Cokernel cokernel(const Matrix& m) {
  const int n = m.rows();  // codomain dimension
  RrefResult r = rref(m.transpose());
  Cokernel out;
  std::vector<int> free_cols;
  {
    std::size_t p = 0;
    for (int c = 0; c < n; ++c) {
      if (p < r.pivots.size() && r.pivots[p] == c) ++p;
      else free_cols.push_back(c);
    }
  }
  out.quotient_dim = int(free_cols.size());
  out.complement = free_cols;
  out.projection = Matrix(out.quotient_dim, n);
  for (int t = 0; t < out.quotient_dim; ++t) {
    const int f = free_cols[t];
    out.projection.at(t, f) = 1;
    for (int i = 0; i < r.rank; ++i) out.projection.at(t, r.pivots[i]) = -r.mat.at(i, f);
  }
  return out;
}

std::optional<Matrix> try_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank != n || (!r.pivots.empty() && r.pivots.back() >= n)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::invalid_argument("matrix is singular");
  return *inv;
}

bool RowReducer::insert(Vec v) {
  if (int(v.size()) != cols_) throw std::invalid_argument("row has wrong width");
  Vec hist;
  if (with_history_) {
    hist.assign(inserted_ + 1, Rational(0));
    hist[inserted_] = 1;
  }
  ++inserted_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[lead_[i]];
    if (is_zero(f)) continue;
    for (int j = lead_[i]; j < cols_; ++j) {
      const Rational& p = rows_[i][j];
      if (!is_zero(p)) v[j] -= f * p;
    }
    if (with_history_) {
      history_[i].resize(inserted_, Rational(0));
      add_scaled(hist, -f, history_[i]);
    }
  }
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (!is_zero(v[j])) { lead = j; break; }
  if (lead < 0) {
    if (with_history_) {
      // v = sum over previously inserted rows; flip sign of the trailing 1.
      dependency_.assign(hist.begin(), hist.end() - 1);
      for (auto& c : dependency_) c = -c;
    }
    return false;
  }
  const Rational inv = v[lead];
  if (inv != 1) {
    for (int j = lead; j < cols_; ++j)
      if (!is_zero(v[j])) v[j] /= inv;
    if (with_history_)
      for (auto& c : hist) c /= inv;
  }
  rows_.push_back(std::move(v));
  lead_.push_back(lead);
  if (with_history_) history_.push_back(std::move(hist));
  return true;
}

Matrix RowReducer::to_rref() const {
  Matrix m(int(rows_.size()), cols_);
  for (int i = 0; i < int(rows_.size()); ++i) m.set_row(i, rows_[i]);
  return rref(m).mat;
}

}  // namespace blockfact
