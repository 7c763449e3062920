#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blockfact/algebra.hpp"

namespace blockfact {

struct SearchOptions {
  std::uint64_t seed = 0;
  int attempts = 64;  // seeded random candidates per split search
};

enum class SplitStatus {
  ProvenIndecomposable,     // center of the block mod its radical is 1-dim
  NoSplitFoundUnderPolicy,  // scan exhausted without a proof either way
};

std::string to_string(SplitStatus s);

/// The unique decomposition of an algebra into indecomposable two-sided
/// ideal blocks, presented by its primitive central idempotents. Uniqueness
/// is a theorem; completeness of the splitting is policy-bounded and
/// reported per block in `statuses`.
struct BlockDecomposition {
  Algebra parent;
  std::vector<Element> idempotents;   // central, orthogonal, summing to 1
  std::vector<Algebra> blocks;        // block i = idempotents[i] * parent
  std::vector<Matrix> inclusions;     // block coordinates -> parent coordinates
  std::vector<SplitStatus> statuses;  // per block

  int block_count() const { return int(blocks.size()); }
  std::vector<int> dimension_multiset() const;  // sorted ascending

  /// Re-checks every decomposition invariant from scratch: centrality,
  /// orthogonality, idempotency, summing to the unit, dimension additivity,
  /// and that each inclusion embeds its block multiplicatively.
  /// Throws VerifyFailure on violation.
  void verify() const;
};

/// Finds the primitive central idempotents obtainable over Q: candidates from
/// the center (basis vectors, pairwise sums, then seeded random small-integer
/// combinations) are split through the rational linear factors of their
/// squarefree minimal polynomials, via a Bezout identity; blocks recurse
/// until no candidate splits.
BlockDecomposition central_idempotents(const Algebra& a, const SearchOptions& opts = {});

/// A two-sided ideal e*a for a central idempotent e, as a standalone algebra
/// with unit e. Also used with corner products e*a*e for non-central e.
struct Subalgebra {
  Algebra algebra;
  Matrix inclusion;  // sub coordinates -> parent coordinates
  Subspace span;
};

Subalgebra ideal_subalgebra(const Algebra& a, const Vec& central_idempotent);
Subalgebra corner_subalgebra(const Algebra& a, const Vec& idempotent);

/// Explicit identification of a block with a full matrix algebra M_n(Q).
struct MatrixAlgebraIso {
  int n = 0;
  Element idempotent;               // primitive (rank one) idempotent
  std::vector<Element> matrix_units;  // E_{ij}, row-major; a basis
  Matrix to_matrix;                 // algebra coords -> E_{ij} coords
  Matrix from_matrix;               // inverse
};

struct NotSplitReport {
  std::string obstruction;
  int center_dim = 0;
  int corner_dim = 0;  // smallest corner reached (> 1 for division algebras)
};

using WedderburnResult = std::variant<MatrixAlgebraIso, NotSplitReport>;

/// For a semisimple single block: an explicit isomorphism with M_n(Q) when
/// one exists over the rationals, found by searching for a rank-one
/// idempotent through minimal polynomials of corner elements; otherwise a
/// report naming the obstruction. Throws InputError if the input is not
/// semisimple or visibly decomposes.
WedderburnResult wedderburn_split(const Algebra& block, const SearchOptions& opts = {});

/// Scans the whole algebra (basis, pairwise sums, seeded small-integer
/// combinations) for a nontrivial idempotent, not necessarily central.
std::optional<Vec> find_splitting_idempotent(const Algebra& a, const SearchOptions& opts = {});

}  // namespace blockfact
