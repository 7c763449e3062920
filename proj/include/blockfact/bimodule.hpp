#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blockfact/algebra.hpp"
#include "blockfact/blocks.hpp"

namespace blockfact {

/// Left module over an Algebra: one action operator per basis element,
/// satisfying L_1 = id and L_{ab} = L_a L_b (checked on construction).
class LeftModule {
 public:
  LeftModule(Algebra algebra, std::vector<SparseMatrix> action);
  const Algebra& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const SparseMatrix& action(int basis_index) const { return action_[basis_index]; }
  SparseMatrix act(const Vec& x) const;  // action of an arbitrary element
  bool operator==(const LeftModule& rhs) const;

 private:
  Algebra algebra_;
  int dim_;
  std::vector<SparseMatrix> action_;
};

/// Right module: R_1 = id and R_{ab} = R_b R_a (checked on construction).
class RightModule {
 public:
  RightModule(Algebra algebra, std::vector<SparseMatrix> action);
  const Algebra& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const SparseMatrix& action(int basis_index) const { return action_[basis_index]; }
  SparseMatrix act(const Vec& x) const;
  bool operator==(const RightModule& rhs) const;

 private:
  Algebra algebra_;
  int dim_;
  std::vector<SparseMatrix> action_;
};

/// Two-sided module: commuting left and right actions (all axioms checked on
/// construction). Immutable; cheap to copy.
class Bimodule {
 public:
  /// Empty handle; usable only as a target for assignment.
  Bimodule() = default;
  Bimodule(Algebra algebra, std::vector<SparseMatrix> left, std::vector<SparseMatrix> right);

  const Algebra& algebra() const { return impl_->algebra; }
  int dim() const { return impl_->dim; }
  const SparseMatrix& left(int basis_index) const { return impl_->left[basis_index]; }
  const SparseMatrix& right(int basis_index) const { return impl_->right[basis_index]; }
  SparseMatrix left_act(const Vec& x) const;
  SparseMatrix right_act(const Vec& x) const;

  LeftModule as_left_module() const;
  RightModule as_right_module() const;

  bool operator==(const Bimodule& rhs) const;

 private:
  struct Impl {
    Algebra algebra;
    int dim;
    std::vector<SparseMatrix> left, right;
  };
  std::shared_ptr<const Impl> impl_;
};

/// The algebra acting on itself by multiplication on both sides.
Bimodule regular_bimodule(const Algebra& a);

/// X (x) Y with the left action on the X factor and the right action on the
/// Y factor; basis (i, j) flattened row-major. Throws InputError if the
/// parent algebras differ.
Bimodule tensor(const LeftModule& x, const RightModule& y);

Bimodule direct_sum(const std::vector<Bimodule>& parts);

/// A linear map intertwining both actions (checked on construction).
struct BimoduleMorphism {
  BimoduleMorphism(Bimodule source, Bimodule target, Matrix map);
  Bimodule source;
  Bimodule target;
  Matrix map;  // target.dim x source.dim
};

/// Witness that a bimodule is a finite direct sum of tensor products of a
/// left module and a right module.
struct FactorizationCertificate {
  std::vector<std::pair<LeftModule, RightModule>> summands;
  BimoduleMorphism iso;  // from direct_sum(tensor(X_i, Y_i)) onto the certified bimodule

  /// Exact bijectivity re-check (the intertwining is checked by the
  /// morphism's own constructor).
  void verify() const;
};

struct FactorizationRefusal {
  enum class Reason {
    NonSemisimple,  // no certificate exists over any field
    NonSplitBlock,  // a certificate exists over an extension, not over Q
  };
  Reason reason;
  int block_index;
  std::string detail;
};

using FactorizeResult = std::variant<FactorizationCertificate, FactorizationRefusal>;

/// Writes the regular bimodule as a sum of column (x) row modules, one per
/// block, when every block is semisimple and splits as a matrix algebra over
/// Q; refuses otherwise, naming the first offending block. `dec` must be a
/// decomposition of `a`.
FactorizeResult factorize_semisimple(const Algebra& a, const BlockDecomposition& dec,
                                     const SearchOptions& opts = {});

/// Basis of the space of bimodule endomorphisms of e. Solves the
/// intertwining linear system; for the regular bimodule this is the classical
/// identification with the center acting by right multiplication.
std::vector<Matrix> bimodule_endomorphisms(const Bimodule& e);

enum class Indecomposability { ProvenYes, ProvenNo, Unknown };

struct IndecomposabilityResult {
  Indecomposability verdict;
  std::optional<Matrix> splitting_idempotent;  // present for ProvenNo
  int endo_dim = 0;
  int endo_radical_dim = 0;
  std::string note;
};

std::string to_string(Indecomposability v);

/// Three-valued indecomposability: searches the endomorphism algebra for
/// nontrivial idempotents with the same minimal-polynomial policy as the
/// central scan; ProvenYes exactly when the endomorphism algebra is local.
IndecomposabilityResult is_indecomposable(const Bimodule& e, const SearchOptions& opts = {});

}  // namespace blockfact
