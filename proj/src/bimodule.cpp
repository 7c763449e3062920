#include "blockfact/bimodule.hpp"

#include <sstream>

#include "blockfact/errors.hpp"

namespace blockfact {

namespace {

SparseMatrix linear_combination(const SparseVec& coeffs, const std::vector<SparseMatrix>& mats,
                                int rows, int cols) {
  SparseMatrix acc(rows, cols);
  for (const auto& [k, v] : coeffs) {
    SparseMatrix scaled(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, x] : mats[k].row(r)) scaled.set(r, c, v * x);
    acc = acc + scaled;
  }
  return acc;
}

SparseMatrix act_combination(const Vec& x, const std::vector<SparseMatrix>& mats, int dim) {
  return linear_combination(sparsify(x), mats, dim, dim);
}

void check_square_actions(const Algebra& a, const std::vector<SparseMatrix>& action, int dim,
                          const char* side) {
  if (int(action.size()) != a.dim())
    throw InputError(std::string(side) + " action list length does not match the algebra dimension");
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim)
      throw InputError(std::string(side) + " action matrices have inconsistent shape");
}

void check_left_axioms(const Algebra& a, const std::vector<SparseMatrix>& action, int dim) {
  if (!act_combination(a.unit(), action, dim).is_identity())
    throw InputError("left action of the unit is not the identity");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (linear_combination(a.product(i, j), action, dim, dim) != action[i] * action[j])
        throw InputError("left action is not multiplicative at basis pair (" + a.labels()[i] +
                         ", " + a.labels()[j] + ")");
}

void check_right_axioms(const Algebra& a, const std::vector<SparseMatrix>& action, int dim) {
  if (!act_combination(a.unit(), action, dim).is_identity())
    throw InputError("right action of the unit is not the identity");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (linear_combination(a.product(i, j), action, dim, dim) != action[j] * action[i])
        throw InputError("right action is not multiplicative at basis pair (" + a.labels()[i] +
                         ", " + a.labels()[j] + ")");
}

}  // namespace

LeftModule::LeftModule(Algebra algebra, std::vector<SparseMatrix> action)
    : algebra_(std::move(algebra)),
      dim_(action.empty() ? 0 : action.front().rows()),
      action_(std::move(action)) {
  check_square_actions(algebra_, action_, dim_, "left");
  check_left_axioms(algebra_, action_, dim_);
}

SparseMatrix LeftModule::act(const Vec& x) const { return act_combination(x, action_, dim_); }

bool LeftModule::operator==(const LeftModule& rhs) const {
  return Algebra::same(algebra_, rhs.algebra_) && dim_ == rhs.dim_ && action_ == rhs.action_;
}

RightModule::RightModule(Algebra algebra, std::vector<SparseMatrix> action)
    : algebra_(std::move(algebra)),
      dim_(action.empty() ? 0 : action.front().rows()),
      action_(std::move(action)) {
  check_square_actions(algebra_, action_, dim_, "right");
  check_right_axioms(algebra_, action_, dim_);
}

SparseMatrix RightModule::act(const Vec& x) const { return act_combination(x, action_, dim_); }

bool RightModule::operator==(const RightModule& rhs) const {
  return Algebra::same(algebra_, rhs.algebra_) && dim_ == rhs.dim_ && action_ == rhs.action_;
}

Bimodule::Bimodule(Algebra algebra, std::vector<SparseMatrix> left, std::vector<SparseMatrix> right) {
  const int dim = left.empty() ? 0 : left.front().rows();
  check_square_actions(algebra, left, dim, "left");
  check_square_actions(algebra, right, dim, "right");
  check_left_axioms(algebra, left, dim);
  check_right_axioms(algebra, right, dim);
  for (int i = 0; i < algebra.dim(); ++i)
    for (int j = 0; j < algebra.dim(); ++j)
      if (left[i] * right[j] != right[j] * left[i])
        throw InputError("left and right actions do not commute at basis pair (" +
                         algebra.labels()[i] + ", " + algebra.labels()[j] + ")");
  impl_ = std::make_shared<Impl>(Impl{std::move(algebra), dim, std::move(left), std::move(right)});
}

SparseMatrix Bimodule::left_act(const Vec& x) const { return act_combination(x, impl_->left, impl_->dim); }
SparseMatrix Bimodule::right_act(const Vec& x) const { return act_combination(x, impl_->right, impl_->dim); }

LeftModule Bimodule::as_left_module() const { return LeftModule(impl_->algebra, impl_->left); }
RightModule Bimodule::as_right_module() const { return RightModule(impl_->algebra, impl_->right); }

bool Bimodule::operator==(const Bimodule& rhs) const {
  if (impl_ == rhs.impl_) return true;
  return Algebra::same(impl_->algebra, rhs.impl_->algebra) && impl_->dim == rhs.impl_->dim &&
         impl_->left == rhs.impl_->left && impl_->right == rhs.impl_->right;
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<SparseMatrix> left(a.dim()), right(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    left[i] = a.left_matrix(a.basis_vec(i));
    right[i] = a.right_matrix(a.basis_vec(i));
  }
  return Bimodule(a, std::move(left), std::move(right));
}

Bimodule tensor(const LeftModule& x, const RightModule& y) {
  if (!Algebra::same(x.algebra(), y.algebra()))
    throw InputError("tensor factors have different parent algebras");
  const Algebra& a = x.algebra();
  const SparseMatrix idx = SparseMatrix::identity(x.dim());
  const SparseMatrix idy = SparseMatrix::identity(y.dim());
  std::vector<SparseMatrix> left(a.dim()), right(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    left[i] = SparseMatrix::kronecker(x.action(i), idy);
    right[i] = SparseMatrix::kronecker(idx, y.action(i));
  }
  return Bimodule(a, std::move(left), std::move(right));
}

Bimodule direct_sum(const std::vector<Bimodule>& parts) {
  if (parts.empty()) throw InputError("direct sum needs at least one part");
  const Algebra& a = parts.front().algebra();
  int total = 0;
  for (const auto& p : parts) {
    if (!Algebra::same(a, p.algebra())) throw InputError("direct sum parts have different algebras");
    total += p.dim();
  }
  std::vector<SparseMatrix> left(a.dim(), SparseMatrix(total, total));
  std::vector<SparseMatrix> right(a.dim(), SparseMatrix(total, total));
  for (int i = 0; i < a.dim(); ++i) {
    int offset = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dim(); ++r) {
        for (const auto& [c, v] : p.left(i).row(r)) left[i].set(offset + r, offset + c, v);
        for (const auto& [c, v] : p.right(i).row(r)) right[i].set(offset + r, offset + c, v);
      }
      offset += p.dim();
    }
  }
  return Bimodule(a, std::move(left), std::move(right));
}

BimoduleMorphism::BimoduleMorphism(Bimodule source_, Bimodule target_, Matrix map_)
    : source(std::move(source_)), target(std::move(target_)), map(std::move(map_)) {
  if (!Algebra::same(source.algebra(), target.algebra()))
    throw InputError("bimodule morphism endpoints have different algebras");
  if (map.rows() != target.dim() || map.cols() != source.dim())
    throw InputError("bimodule morphism matrix has the wrong shape");
  const Algebra& a = source.algebra();
  for (int i = 0; i < a.dim(); ++i) {
    if (map * source.left(i) != target.left(i) * map)
      throw InputError("map does not intertwine the left action of " + a.labels()[i]);
    if (map * source.right(i) != target.right(i) * map)
      throw InputError("map does not intertwine the right action of " + a.labels()[i]);
  }
}

void FactorizationCertificate::verify() const {
  if (iso.map.rows() != iso.map.cols() || iso.map.rows() != iso.target.dim())
    throw VerifyFailure("certificate isomorphism is not square");
  if (rank(iso.map) != iso.map.rows())
    throw VerifyFailure("certificate isomorphism is not bijective");
  int total = 0;
  for (const auto& [x, y] : summands) total += x.dim() * y.dim();
  if (total != iso.source.dim())
    throw VerifyFailure("certificate summand dimensions do not match the domain");
}

FactorizeResult factorize_semisimple(const Algebra& a, const BlockDecomposition& dec,
                                     const SearchOptions& opts) {
  if (!Algebra::same(a, dec.parent))
    throw InputError("decomposition belongs to a different algebra");
  // Non-semisimplicity anywhere rules out every certificate, so it is
  // scanned for first; a non-split simple block only blocks it over Q.
  for (int i = 0; i < dec.block_count(); ++i) {
    if (radical(dec.blocks[i]).dim() != 0) {
      std::ostringstream msg;
      msg << "block " << i << " (dim " << dec.blocks[i].dim()
          << ") is not semisimple; no factorization certificate exists over any field";
      return FactorizationRefusal{FactorizationRefusal::Reason::NonSemisimple, i, msg.str()};
    }
  }
  std::vector<MatrixAlgebraIso> isos;
  for (int i = 0; i < dec.block_count(); ++i) {
    const Algebra& block = dec.blocks[i];
    WedderburnResult w = wedderburn_split(block, {opts.seed + std::uint64_t(i), opts.attempts});
    if (auto* report = std::get_if<NotSplitReport>(&w)) {
      std::ostringstream msg;
      msg << "block " << i << " (dim " << block.dim() << ") does not split over Q: "
          << report->obstruction << "; a certificate exists over an extension field";
      return FactorizationRefusal{FactorizationRefusal::Reason::NonSplitBlock, i, msg.str()};
    }
    isos.push_back(std::move(std::get<MatrixAlgebraIso>(w)));
  }

  std::vector<std::pair<LeftModule, RightModule>> summands;
  std::vector<Bimodule> tensors;
  Matrix iso_map(a.dim(), a.dim());
  int col_offset = 0;
  for (int i = 0; i < dec.block_count(); ++i) {
    const MatrixAlgebraIso& w = isos[i];
    const int n = w.n;
    const Subspace span(a.dim(), dec.inclusions[i].transpose());
    // phi(block component of b_s), one n x n matrix per parent basis element.
    std::vector<SparseMatrix> lact(a.dim()), ract(a.dim());
    for (int s = 0; s < a.dim(); ++s) {
      const auto coords = span.coordinates(
          a.multiply(dec.idempotents[i].coeffs, a.basis_vec(s)));
      if (!coords) throw std::logic_error("block component escaped the block span");
      const Vec phi = w.to_matrix.apply(*coords);
      SparseMatrix m(n, n), mt(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          const Rational& v = phi[r * n + c];
          if (!is_zero(v)) { m.set(r, c, v); mt.set(c, r, v); }
        }
      lact[s] = std::move(m);
      ract[s] = std::move(mt);
    }
    LeftModule x(a, std::move(lact));
    RightModule y(a, std::move(ract));
    tensors.push_back(tensor(x, y));
    summands.emplace_back(std::move(x), std::move(y));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Vec unit_in_parent = dec.inclusions[i].apply(w.matrix_units[k * n + l].coeffs);
        iso_map.set_col(col_offset + k * n + l, unit_in_parent);
      }
    col_offset += n * n;
  }
  FactorizationCertificate cert{std::move(summands),
                                BimoduleMorphism(direct_sum(tensors), regular_bimodule(a),
                                                 std::move(iso_map))};
  cert.verify();
  return cert;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v(std::size_t(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v[std::size_t(r) * m.cols() + c] = m.at(r, c);
  return v;
}

Matrix unflatten(const Vec& v, int n) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = v[std::size_t(r) * n + c];
  return m;
}

bool is_regular(const Bimodule& e) {
  const Algebra& a = e.algebra();
  if (e.dim() != a.dim()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (e.left(i) != a.left_matrix(a.basis_vec(i))) return false;
    if (e.right(i) != a.right_matrix(a.basis_vec(i))) return false;
  }
  return true;
}

}  // namespace

std::vector<Matrix> bimodule_endomorphisms(const Bimodule& e) {
  const Algebra& a = e.algebra();
  const int m = e.dim();
  if (is_regular(e)) {
    // Endomorphisms of the regular bimodule are right multiplications by
    // central elements: commuting with all left multiplications forces
    // M = R_{M(1)}, and commuting with right ones makes M(1) central.
    std::vector<Matrix> out;
    const Subspace z = center(a);
    out.reserve(z.dim());
    for (int i = 0; i < z.dim(); ++i) out.push_back(a.right_matrix(z.basis_row(i)).to_dense());
    return out;
  }
  // Generic path: kernel of the full intertwining system on vec(M).
  RowReducer reducer(m * m);
  auto add_commutant_rows = [&](const SparseMatrix& op) {
    const Matrix dense = op.to_dense();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        // (M op - op M)[i][j] = sum_k M[i][k] op[k][j] - op[i][k] M[k][j]
        Vec row(std::size_t(m) * m);
        for (int k = 0; k < m; ++k) {
          if (!is_zero(dense.at(k, j))) row[std::size_t(i) * m + k] += dense.at(k, j);
          if (!is_zero(dense.at(i, k))) row[std::size_t(k) * m + j] -= dense.at(i, k);
        }
        reducer.insert(std::move(row));
      }
  };
  for (int s = 0; s < a.dim(); ++s) {
    add_commutant_rows(e.left(s));
    add_commutant_rows(e.right(s));
  }
  const Subspace sol = kernel(reducer.to_rref());
  std::vector<Matrix> out;
  out.reserve(sol.dim());
  for (int i = 0; i < sol.dim(); ++i) out.push_back(unflatten(sol.basis_row(i), m));
  return out;
}

std::string to_string(Indecomposability v) {
  switch (v) {
    case Indecomposability::ProvenYes: return "proven yes";
    case Indecomposability::ProvenNo: return "proven no";
    case Indecomposability::Unknown: return "unknown";
  }
  return "?";
}

IndecomposabilityResult is_indecomposable(const Bimodule& e, const SearchOptions& opts) {
  const int m = e.dim();
  const std::vector<Matrix> endos = bimodule_endomorphisms(e);
  const int k = int(endos.size());
  // The endomorphism space as an abstract algebra, with the identity as unit.
  Matrix rows(k, m * m);
  for (int i = 0; i < k; ++i) rows.set_row(i, flatten(endos[i]));
  const Subspace span(m * m, rows);
  std::vector<Matrix> basis_mats;
  for (int i = 0; i < k; ++i) basis_mats.push_back(unflatten(span.basis_row(i), m));
  Algebra::Table table(k, std::vector<SparseVec>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto coords = span.coordinates(flatten(basis_mats[i] * basis_mats[j]));
      if (!coords) throw std::logic_error("endomorphism space is not closed under composition");
      table[i][j] = sparsify(*coords);
    }
  auto unit_coords = span.coordinates(flatten(Matrix::identity(m)));
  if (!unit_coords) throw std::logic_error("identity is not an endomorphism");
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = "f" + std::to_string(i);
  const Algebra endo_alg =
      Algebra::create_unverified(std::move(labels), *unit_coords, std::move(table));

  IndecomposabilityResult res{Indecomposability::Unknown, std::nullopt, k, 0, ""};
  if (auto split = find_splitting_idempotent(endo_alg, opts)) {
    Matrix idem(m, m);
    for (int i = 0; i < k; ++i) {
      if (is_zero((*split)[i])) continue;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) idem.at(r, c) += (*split)[i] * basis_mats[i].at(r, c);
    }
    if (idem * idem != idem) throw std::logic_error("splitting endomorphism is not idempotent");
    res.verdict = Indecomposability::ProvenNo;
    res.splitting_idempotent = std::move(idem);
    res.note = "a nontrivial idempotent endomorphism splits the bimodule";
    return res;
  }
  res.endo_radical_dim = radical(endo_alg).dim();
  if (k - res.endo_radical_dim == 1) {
    res.verdict = Indecomposability::ProvenYes;
    res.note = "endomorphism algebra is local (one-dimensional modulo its radical)";
  } else {
    res.verdict = Indecomposability::Unknown;
    res.note = "no splitting idempotent found under the policy, and the endomorphism algebra is "
               "not local";
  }
  return res;
}

}  // namespace blockfact
