#include "blockfact/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "blockfact/errors.hpp"

namespace blockfact {

struct Algebra::Impl {
  std::vector<std::string> labels;
  Vec unit;
  Table table;
  Vec traces;  // tr(L_{b_i})
};

namespace {

// x * b_j for a sparse-coefficient x given as (i, coeff) pairs.
void accumulate_left(const Algebra::Table& table, const SparseVec& x, int j, Vec& out) {
  for (const auto& [i, xi] : x) add_scaled(out, xi, table[i][j]);
}

void check_shapes(const std::vector<std::string>& labels, const Vec& unit, const Algebra::Table& table) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("algebra must have positive dimension");
  if (unit.size() != n) throw InputError("unit vector length does not match dimension");
  if (table.size() != n) throw InputError("structure constant table has wrong shape");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("structure constant table has wrong shape");
    for (const auto& entry : row)
      for (const auto& [k, v] : entry) {
        if (k < 0 || k >= int(n)) throw InputError("structure constant index out of range");
        if (is_zero(v)) throw InputError("structure constant table stores an explicit zero");
      }
  }
}

}  // namespace

Algebra Algebra::create(std::vector<std::string> labels, Vec unit, Table table) {
  Algebra a = create_unverified(std::move(labels), std::move(unit), std::move(table));
  a.verify();
  return a;
}

Algebra Algebra::create_unverified(std::vector<std::string> labels, Vec unit, Table table) {
  check_shapes(labels, unit, table);
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(labels);
  impl->unit = std::move(unit);
  impl->table = std::move(table);
  const int n = int(impl->labels.size());
  impl->traces.assign(n, Rational(0));
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, v] : impl->table[m][j])
        if (k == j) impl->traces[m] += v;
  return Algebra(std::move(impl));
}

void Algebra::verify() const {
  const int n = dim();
  const Table& t = impl_->table;
  const SparseVec unit_sparse = sparsify(impl_->unit);
  for (int i = 0; i < n; ++i) {
    Vec left(n), right(n);
    accumulate_left(t, unit_sparse, i, left);
    for (const auto& [j, uj] : unit_sparse) add_scaled(right, uj, t[i][j]);
    for (int k = 0; k < n; ++k) {
      if (left[k] != Rational(k == i ? 1 : 0) || right[k] != Rational(k == i ? 1 : 0))
        throw InputError("unit law fails at basis element " + impl_->labels[i]);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec& ij = t[i][j];
      for (int k = 0; k < n; ++k) {
        Vec lhs(n), rhs(n);
        accumulate_left(t, ij, k, lhs);  // (b_i b_j) b_k
        for (const auto& [m, v] : t[j][k]) add_scaled(rhs, v, t[i][m]);  // b_i (b_j b_k)
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "associativity fails at triple (" << impl_->labels[i] << ", " << impl_->labels[j]
              << ", " << impl_->labels[k] << ")";
          throw InputError(msg.str());
        }
      }
    }
}

int Algebra::dim() const { return int(impl_->labels.size()); }
const std::vector<std::string>& Algebra::labels() const { return impl_->labels; }
const Vec& Algebra::unit() const { return impl_->unit; }
const Algebra::Table& Algebra::table() const { return impl_->table; }
const SparseVec& Algebra::product(int i, int j) const { return impl_->table[i][j]; }
const Rational& Algebra::basis_trace(int i) const { return impl_->traces[i]; }

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const int n = dim();
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      add_scaled(out, xy, impl_->table[i][j]);
    }
  }
  return out;
}

SparseMatrix Algebra::left_matrix(const Vec& x) const {
  const int n = dim();
  const SparseVec xs = sparsify(x);
  SparseMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    accumulate_left(impl_->table, xs, j, col);
    for (int k = 0; k < n; ++k)
      if (!is_zero(col[k])) m.set(k, j, col[k]);
  }
  return m;
}

SparseMatrix Algebra::right_matrix(const Vec& x) const {
  const int n = dim();
  const SparseVec xs = sparsify(x);
  SparseMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    for (const auto& [i, xi] : xs) add_scaled(col, xi, impl_->table[j][i]);
    for (int k = 0; k < n; ++k)
      if (!is_zero(col[k])) m.set(k, j, col[k]);
  }
  return m;
}

Vec Algebra::basis_vec(int i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

bool Algebra::same(const Algebra& a, const Algebra& b) { return a.impl_ == b.impl_; }

Element::Element(Algebra parent_, Vec coeffs_) : parent(std::move(parent_)), coeffs(std::move(coeffs_)) {
  if (int(coeffs.size()) != parent.dim())
    throw InputError("element coefficient vector has wrong length");
}

Element multiply(const Element& x, const Element& y) {
  if (!Algebra::same(x.parent, y.parent)) throw InputError("elements have different parent algebras");
  return Element(x.parent, x.parent.multiply(x.coeffs, y.coeffs));
}

Element unit_element(const Algebra& a) { return Element(a, a.unit()); }

Element basis_element(const Algebra& a, int i) { return Element(a, a.basis_vec(i)); }

Subspace center(const Algebra& a) {
  const int n = a.dim();
  // Constraints on z: for all i, m: sum_k z_k (c[k][i][m] - c[i][k][m]) = 0.
  RowReducer reducer(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> rows(n, Vec(n));
    for (int k = 0; k < n; ++k) {
      for (const auto& [m, v] : a.product(k, i)) rows[m][k] += v;
      for (const auto& [m, v] : a.product(i, k)) rows[m][k] -= v;
    }
    for (auto& row : rows) reducer.insert(std::move(row));
  }
  return kernel(reducer.to_rref());
}

Subspace radical(const Algebra& a) {
  const int n = a.dim();
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (const auto& [m, v] : a.product(i, j)) acc += v * a.basis_trace(m);
      gram.at(i, j) = acc;
    }
  return kernel(gram);
}

bool is_semisimple(const Algebra& a) { return radical(a).dim() == 0; }

Poly minimal_polynomial(const Algebra& a, const Vec& x) {
  const int n = a.dim();
  const SparseMatrix rx = a.right_matrix(x);
  RowReducer reducer(n, /*with_history=*/true);
  Vec power = a.unit();
  for (int deg = 0; deg <= n; ++deg) {
    if (!reducer.insert(power)) {
      // power = sum_{i<deg} dep[i] * x^i, so the minimal polynomial is
      // t^deg - sum dep[i] t^i.
      Vec coeffs(deg + 1);
      const Vec& dep = reducer.dependency();
      for (int i = 0; i < deg; ++i) coeffs[i] = -dep[i];
      coeffs[deg] = 1;
      return Poly(std::move(coeffs));
    }
    power = rx.apply(power);
  }
  throw std::logic_error("minimal polynomial search exceeded the dimension bound");
}

Vec eval_poly(const Algebra& a, const Poly& p, const Vec& x) {
  const int n = a.dim();
  Vec acc(n);
  if (p.is_zero()) return acc;
  const SparseMatrix rx = a.right_matrix(x);
  Vec power = a.unit();
  for (int i = 0; i <= p.degree(); ++i) {
    add_scaled(acc, p.coeff(i), power);
    if (i < p.degree()) power = rx.apply(power);
  }
  return acc;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  const int n = a.dim();
  if (ideal.ambient_dim() != n) throw InputError("ideal lives in the wrong ambient space");
  Cokernel ck = cokernel(ideal.basis().transpose());
  const int q = ck.quotient_dim;
  // Representatives: unit vectors at the complement coordinates.
  Matrix section(n, q);
  for (int t = 0; t < q; ++t) section.at(ck.complement[t], t) = 1;
  Algebra::Table table(q, std::vector<SparseVec>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = sparsify(ck.projection.apply(a.multiply(section.col(i), section.col(j))));
  std::vector<std::string> labels(q);
  for (int t = 0; t < q; ++t) labels[t] = "q" + std::to_string(t);
  QuotientAlgebra out{Algebra::create(std::move(labels), ck.projection.apply(a.unit()), std::move(table)),
                      ck.projection, section};
  return out;
}

}  // namespace blockfact
