#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blockfact/linalg.hpp"
#include "blockfact/matrix.hpp"
#include "blockfact/polynomial.hpp"

namespace blockfact {

/// A finite-dimensional unital associative algebra over Q, presented by
/// structure constants: table[i][j] holds the coefficients of b_i * b_j in
/// the basis. Immutable after construction; cheap to copy (shared state).
class Algebra {
 public:
  using Table = std::vector<std::vector<SparseVec>>;

  /// Checked construction: verifies the unit law on all basis elements and
  /// associativity on all basis triples, naming the first offender.
  /// Throws InputError on violation.
  static Algebra create(std::vector<std::string> labels, Vec unit, Table table);

  /// Unchecked construction, for callers that obtain the table by an
  /// operation that preserves the laws exactly (e.g. a change of basis of an
  /// already-verified table). verify() can re-run the full check at any time.
  static Algebra create_unverified(std::vector<std::string> labels, Vec unit, Table table);

  void verify() const;

  int dim() const;
  const std::vector<std::string>& labels() const;
  const Vec& unit() const;
  const Table& table() const;
  const SparseVec& product(int i, int j) const;

  /// tr(L_{b_i}) for the left regular representation.
  const Rational& basis_trace(int i) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  SparseMatrix left_matrix(const Vec& x) const;   // column j holds x * b_j
  SparseMatrix right_matrix(const Vec& x) const;  // column j holds b_j * x

  Vec basis_vec(int i) const;

  /// Identity of shared state; Elements require identical parents.
  static bool same(const Algebra& a, const Algebra& b);

 private:
  struct Impl;
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Element {
  Element(Algebra parent, Vec coeffs);
  Algebra parent;
  Vec coeffs;
};

/// Bilinear extension of the structure constants. Throws InputError if the
/// parents differ.
Element multiply(const Element& x, const Element& y);
Element unit_element(const Algebra& a);
Element basis_element(const Algebra& a, int i);

/// The subspace {z : z b_i = b_i z for all i}.
Subspace center(const Algebra& a);

/// Jacobson radical, computed as the kernel of the trace form
/// B(x, y) = tr(L_{xy}) of the left regular representation (valid in
/// characteristic zero).
Subspace radical(const Algebra& a);

bool is_semisimple(const Algebra& a);

/// Minimal polynomial of an element, monic; found by iterating powers until
/// the first linear dependence.
Poly minimal_polynomial(const Algebra& a, const Vec& x);

/// Evaluate p at an element of the algebra.
Vec eval_poly(const Algebra& a, const Poly& p, const Vec& x);

struct QuotientAlgebra {
  Algebra algebra;
  Matrix projection;  // quotient coordinates of an ambient vector
  Matrix section;     // representative in the ambient algebra
};

/// Quotient by a two-sided ideal. The caller is responsible for the ideal
/// property; the construction check of the quotient still runs.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

}  // namespace blockfact
