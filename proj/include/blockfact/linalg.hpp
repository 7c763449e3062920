#pragma once

#include <optional>
#include <vector>

#include "blockfact/matrix.hpp"

namespace blockfact {

struct RrefResult {
  Matrix mat;               // reduced row-echelon form
  int rank = 0;             // number of nonzero rows
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

/// Reduced row-echelon form over the rationals. The result is the canonical
/// representative of the row space: leading entries 1, pivot columns cleared,
/// pivot columns strictly increasing, zero rows trailing.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// A linear subspace of Q^ambient, held by its unique reduced row-echelon
/// basis. Two Subspace values are equal iff they are the same subspace.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  /// Canonicalizes the given spanning rows (they need not be independent).
  Subspace(int ambient_dim, const Matrix& spanning_rows);

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  /// Coordinates of v in the echelon basis; nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  int ambient_;
  Matrix basis_;  // RREF, no zero rows
  std::vector<int> pivots_;
};

/// Null space of m acting on column vectors, canonical representative.
Subspace kernel(const Matrix& m);

/// Column space of m, canonical representative.
Subspace image(const Matrix& m);

struct Cokernel {
  int quotient_dim = 0;
  /// Projects codomain coordinates onto the complement coordinates (the
  /// non-pivot columns of the image's echelon basis): projection * m = 0.
  Matrix projection;
  /// The codomain coordinates chosen as the complement basis, ascending.
  std::vector<int> complement;
};

/// Quotient of the codomain of m by the image of m.
Cokernel cokernel(const Matrix& m);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& m);

/// Throwing variant of try_inverse (std::invalid_argument on singular input).
Matrix inverse(const Matrix& m);

/// Incremental echelon accumulator: absorb rows one at a time, tracking rank.
/// Optionally keeps a history matrix expressing each stored row in terms of
/// the inserted rows (used to extract linear dependencies).
class RowReducer {
 public:
  explicit RowReducer(int cols, bool with_history = false)
      : cols_(cols), with_history_(with_history) {}

  /// Reduces v against the stored rows. If a nonzero remainder survives it is
  /// stored and true is returned; if v was dependent, false is returned and
  /// (with history) `dependency` receives coefficients c with
  /// sum_i c[i] * inserted_row[i] = v, indexed by insertion order.
  bool insert(Vec v);

  int rank() const { return int(rows_.size()); }
  int inserted() const { return inserted_; }
  const Vec& dependency() const { return dependency_; }

  /// The rows accumulated so far, fully reduced to RREF.
  Matrix to_rref() const;

 private:
  int cols_;
  bool with_history_;
  int inserted_ = 0;
  std::vector<Vec> rows_;      // echelon rows, leading coefficient 1
  std::vector<int> lead_;      // leading column per row
  std::vector<Vec> history_;   // row_i = sum_j history_[i][j] * input_j
  Vec dependency_;
};

}  // namespace blockfact
