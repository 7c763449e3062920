#include "blockfact/complex.hpp"

#include <algorithm>
#include <sstream>

#include "blockfact/errors.hpp"
#include "blockfact/zoo.hpp"

namespace blockfact {

struct ChainComplex::Impl {
  std::vector<Bimodule> terms;
  std::vector<BimoduleMorphism> differentials;
  Bimodule target;
  BimoduleMorphism augmentation;
  std::vector<std::string> notes;

  Impl(std::vector<Bimodule> terms_, std::vector<BimoduleMorphism> diffs_, Bimodule target_,
       BimoduleMorphism aug_, std::vector<std::string> notes_)
      : terms(std::move(terms_)),
        differentials(std::move(diffs_)),
        target(std::move(target_)),
        augmentation(std::move(aug_)),
        notes(std::move(notes_)) {}
};

ChainComplex::ChainComplex(std::vector<Bimodule> terms, std::vector<Matrix> differentials,
                           Bimodule target, Matrix augmentation, std::vector<std::string> notes) {
  if (terms.empty()) throw InputError("a chain complex needs at least one term");
  if (int(differentials.size()) + 1 != int(terms.size()))
    throw InputError("a complex with n terms needs n-1 differentials");
  std::vector<BimoduleMorphism> ds;
  ds.reserve(differentials.size());
  for (std::size_t i = 0; i < differentials.size(); ++i)
    ds.emplace_back(terms[i], terms[i + 1], std::move(differentials[i]));
  BimoduleMorphism aug(terms.back(), target, std::move(augmentation));
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (!(ds[i + 1].map * ds[i].map).is_zero())
      throw InputError("consecutive differentials at positions " + std::to_string(i) + "," +
                       std::to_string(i + 1) + " do not compose to zero");
  if (!ds.empty() && !(aug.map * ds.back().map).is_zero())
    throw InputError("the augmentation does not kill the last differential");
  impl_ = std::make_shared<Impl>(std::move(terms), std::move(ds), std::move(target), std::move(aug),
                                 std::move(notes));
}

int ChainComplex::term_count() const { return int(impl_->terms.size()); }
const Bimodule& ChainComplex::term(int i) const { return impl_->terms[i]; }
const BimoduleMorphism& ChainComplex::differential(int i) const { return impl_->differentials[i]; }
const BimoduleMorphism& ChainComplex::augmentation() const { return impl_->augmentation; }
const Bimodule& ChainComplex::target() const { return impl_->target; }
const std::vector<std::string>& ChainComplex::notes() const { return impl_->notes; }

bool ExactnessCertificate::all_exact() const {
  for (const auto& p : positions)
    if (!p.exact) return false;
  return true;
}

ExactnessCertificate verify_exactness(const ChainComplex& c) {
  ExactnessCertificate cert;
  cert.notes = c.notes();
  const int L = c.term_count();
  {
    const Subspace im = image(c.augmentation().map);
    cert.positions.push_back(
        {0, c.target().dim(), im.dim(), c.target().dim(), im.dim() == c.target().dim()});
  }
  for (int p = 1; p <= L - 1; ++p) {
    const int j = L - p;  // term index whose incoming map is differential j-1
    const Matrix& outgoing = (j == L - 1) ? c.augmentation().map : c.differential(j).map;
    const Subspace ker = kernel(outgoing);
    const Subspace im = image(c.differential(j - 1).map);
    cert.positions.push_back({p, c.term(j).dim(), im.dim(), ker.dim(), ker == im});
  }
  return cert;
}

namespace {

// ----- shared builders -------------------------------------------------

// Left/right multiplication operators of a block algebra, pulled back to the
// parent algebra through the block component of each parent basis element.
struct BlockAction {
  Algebra parent;
  Algebra block;
  std::vector<Vec> component;  // block coordinates of e * b_s, per parent basis s
  std::vector<SparseMatrix> left, right;
};

BlockAction block_action(const Algebra& parent, const Algebra& block, const Matrix& inclusion,
                         const Vec& idempotent) {
  BlockAction act{parent, block, {}, {}, {}};
  const Subspace span(parent.dim(), inclusion.transpose());
  act.component.reserve(parent.dim());
  for (int s = 0; s < parent.dim(); ++s) {
    auto coords = span.coordinates(parent.multiply(idempotent, parent.basis_vec(s)));
    if (!coords) throw std::logic_error("block component escaped the block span");
    act.component.push_back(std::move(*coords));
  }
  act.left.reserve(parent.dim());
  act.right.reserve(parent.dim());
  for (int s = 0; s < parent.dim(); ++s) {
    act.left.push_back(block.left_matrix(act.component[s]));
    act.right.push_back(block.right_matrix(act.component[s]));
  }
  return act;
}

BlockAction self_action(const Algebra& a) {
  return block_action(a, a, Matrix::identity(a.dim()), a.unit());
}

// Change of basis of a block action: new operators C^-1 M C.
BlockAction rebase(const BlockAction& act, const Matrix& c) {
  BlockAction out{act.parent, act.block, act.component, {}, {}};
  const Matrix cinv = inverse(c);
  const SparseMatrix cs = SparseMatrix::from_dense(c);
  const SparseMatrix cinvs = SparseMatrix::from_dense(cinv);
  for (std::size_t s = 0; s < act.left.size(); ++s) {
    out.left.push_back(cinvs * act.left[s] * cs);
    out.right.push_back(cinvs * act.right[s] * cs);
  }
  return out;
}

Bimodule action_bimodule(const BlockAction& act) {
  return Bimodule(act.parent, act.left, act.right);
}

struct TensorTerm {
  LeftModule x;
  RightModule y;
  Bimodule term;
};

// B^(x)m as a bimodule over the parent, certified by construction as
// (B^(x)(m-1) as left module) (x) (B as right module).
TensorTerm bar_term(const BlockAction& act, int m) {
  const int q = act.block.dim();
  int left_dim = 1;
  for (int i = 0; i + 1 < m; ++i) left_dim *= q;
  const SparseMatrix mid = SparseMatrix::identity(left_dim / q);
  std::vector<SparseMatrix> lact(act.parent.dim()), ract(act.parent.dim());
  for (int s = 0; s < act.parent.dim(); ++s) {
    lact[s] = m == 2 ? act.left[s] : SparseMatrix::kronecker(act.left[s], mid);
    ract[s] = act.right[s];
  }
  LeftModule x(act.parent, std::move(lact));
  RightModule y(act.parent, std::move(ract));
  Bimodule t = tensor(x, y);
  return {std::move(x), std::move(y), std::move(t)};
}

// delta_m : B^(x)(m+1) -> B^(x)m, the alternating sum of adjacent merges.
Matrix bar_differential(const Algebra& block, int m) {
  const int q = block.dim();
  int rows = 1, cols = 1;
  for (int i = 0; i < m; ++i) rows *= q;
  cols = rows * q;
  Matrix d(rows, cols);
  std::vector<int> digits(m + 1);
  for (int c = 0; c < cols; ++c) {
    int rem = c;
    for (int t = m; t >= 0; --t) { digits[t] = rem % q; rem /= q; }
    for (int t = 0; t < m; ++t) {
      const int sign = t % 2 == 0 ? 1 : -1;
      for (const auto& [k, v] : block.product(digits[t], digits[t + 1])) {
        int row = 0;
        for (int u = 0; u < t; ++u) row = row * q + digits[u];
        row = row * q + k;
        for (int u = t + 2; u <= m; ++u) row = row * q + digits[u];
        d.at(row, c) += sign * v;
      }
    }
  }
  return d;
}

void check_size_cap(int dim, int depth, long long size_cap) {
  Integer need = 1;
  for (int i = 0; i < depth + 1; ++i) need *= dim;
  if (need > size_cap) {
    std::ostringstream msg;
    msg << "size cap exceeded: depth " << depth << " over a dimension-" << dim
        << " algebra needs a term of dimension " << need.str() << ", the cap is " << size_cap;
    throw InputError(msg.str());
  }
}

struct BlockResolution {
  BlockResolutionSummary summary;
  std::vector<TensorTerm> terms;   // terms[0] deepest, terms.back() feeds the augmentation
  std::vector<Matrix> differentials;
  Bimodule target;                 // the block as a parent-bimodule, local coordinates
  Matrix augmentation;
  Matrix basis_change;             // block coordinates <- local coordinates
  std::vector<std::string> notes;
};

BlockResolution bar_resolution(const BlockAction& act, int block_index, int depth,
                               long long size_cap) {
  check_size_cap(act.block.dim(), depth, size_cap);
  if (depth < 1) throw InputError("resolution depth must be at least 1");
  BlockResolution out;
  out.summary = {block_index, BlockResolutionSummary::Kind::Bar, act.block.dim(), depth, 0};
  for (int d = depth; d >= 1; --d) out.terms.push_back(bar_term(act, d + 1));
  for (int d = depth; d >= 2; --d) out.differentials.push_back(bar_differential(act.block, d));
  out.target = action_bimodule(act);
  out.augmentation = bar_differential(act.block, 1);
  out.basis_change = Matrix::identity(act.block.dim());
  return out;
}

// The three periodic maps in the {1, eps} basis of the tensor square
// (ordered 1(x)1, 1(x)eps, eps(x)1, eps(x)eps).
Matrix periodic_f() {
  Matrix f(4, 4);
  f.at(1, 0) = -1; f.at(2, 0) = 1;   // 1(x)1 -> eps(x)1 - 1(x)eps
  f.at(3, 1) = 1;                    // 1(x)eps -> eps(x)eps
  f.at(3, 2) = -1;                   // eps(x)1 -> -eps(x)eps
  return f;
}

Matrix periodic_g() {
  Matrix g(4, 4);
  g.at(1, 0) = 1; g.at(2, 0) = 1;
  g.at(3, 1) = 1;
  g.at(3, 2) = 1;
  return g;
}

Matrix periodic_m() {
  Matrix m(2, 4);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  return m;
}

const char* kOrientationNote =
    "periodic resolution oriented with f adjacent to m: the composites m.f, f.g and g.f all "
    "vanish exactly under the standard outer action, while m.g does not";

BlockResolution periodic_resolution(const BlockAction& raw, int block_index, int length) {
  if (length < 1) throw InputError("resolution length must be at least 1");
  // Normalize the block basis to {unit, eps}: eps spans the radical, scaled
  // so its first nonzero coordinate is 1.
  const Subspace rad = radical(raw.block);
  if (raw.block.dim() != 2 || rad.dim() != 1)
    throw std::logic_error("periodic resolution requires a dual-number block");
  const Vec eps = rad.basis_row(0);
  Matrix c(2, 2);
  c.set_col(0, raw.block.unit());
  c.set_col(1, eps);
  const BlockAction act = rebase(raw, c);

  BlockResolution out;
  out.summary = {block_index, BlockResolutionSummary::Kind::Periodic, 2, length, 0};
  out.basis_change = c;
  out.notes.push_back(kOrientationNote);

  // I+ as one-sided modules over the parent, in the {1, eps} basis.
  LeftModule x(act.parent, act.left);
  RightModule y(act.parent, act.right);
  const Matrix f = periodic_f(), g = periodic_g();
  for (int d = length; d >= 1; --d) out.terms.push_back({x, y, tensor(x, y)});
  // The map into the term at distance d is f for odd d, g for even d.
  for (int d = length; d >= 2; --d) out.differentials.push_back(d % 2 == 0 ? f : g);
  out.target = action_bimodule(act);
  out.augmentation = periodic_m();
  return out;
}

BlockResolution wedderburn_resolution(const BlockAction& act, const MatrixAlgebraIso& iso,
                                      int block_index) {
  const int n = iso.n;
  BlockResolution out;
  out.summary = {block_index, BlockResolutionSummary::Kind::Wedderburn, act.block.dim(), 0, n};
  out.basis_change = Matrix::identity(act.block.dim());
  // Column and row modules through the matrix presentation of the block
  // component: X gets phi(pi(b_s)), Y its transpose.
  std::vector<SparseMatrix> lact(act.parent.dim()), ract(act.parent.dim());
  for (int s = 0; s < act.parent.dim(); ++s) {
    const Vec phi = iso.to_matrix.apply(act.component[s]);
    SparseMatrix m(n, n), mt(n, n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        const Rational& v = phi[std::size_t(r) * n + col];
        if (!is_zero(v)) { m.set(r, col, v); mt.set(col, r, v); }
      }
    lact[s] = std::move(m);
    ract[s] = std::move(mt);
  }
  LeftModule x(act.parent, std::move(lact));
  RightModule y(act.parent, std::move(ract));
  Bimodule t = tensor(x, y);
  out.terms.push_back({std::move(x), std::move(y), std::move(t)});
  out.target = action_bimodule(act);
  out.augmentation = iso.from_matrix;  // basis (k,l) -> matrix unit E_kl
  return out;
}

}  // namespace

ChainComplex bar_complex(const Algebra& a, int depth, long long size_cap) {
  BlockResolution r = bar_resolution(self_action(a), 0, depth, size_cap);
  std::vector<Bimodule> terms;
  for (auto& t : r.terms) terms.push_back(std::move(t.term));
  return ChainComplex(std::move(terms), std::move(r.differentials), regular_bimodule(a),
                      std::move(r.augmentation));
}

ChainComplex dual_numbers_resolution(int length) {
  const Algebra a = zoo::dual_numbers();
  BlockResolution r = periodic_resolution(self_action(a), 0, length);
  std::vector<Bimodule> terms;
  for (auto& t : r.terms) terms.push_back(std::move(t.term));
  // In the {1, eps} basis the block coincides with the regular bimodule.
  return ChainComplex(std::move(terms), std::move(r.differentials), r.target,
                      std::move(r.augmentation), r.notes);
}

std::string to_string(BlockResolutionSummary::Kind k) {
  switch (k) {
    case BlockResolutionSummary::Kind::Wedderburn: return "wedderburn";
    case BlockResolutionSummary::Kind::Periodic: return "periodic";
    case BlockResolutionSummary::Kind::Bar: return "bar";
  }
  return "?";
}

FactorizationResolution factorization_resolution(const Algebra& a, const BlockDecomposition& dec,
                                                 int depth, long long size_cap,
                                                 const SearchOptions& opts) {
  if (!Algebra::same(a, dec.parent))
    throw InputError("decomposition belongs to a different algebra");
  if (depth < 1) throw InputError("resolution depth must be at least 1");

  std::vector<BlockResolution> parts;
  for (int i = 0; i < dec.block_count(); ++i) {
    const Algebra& block = dec.blocks[i];
    BlockAction act = block_action(a, block, dec.inclusions[i], dec.idempotents[i].coeffs);
    const int rad_dim = radical(block).dim();
    if (rad_dim == 0) {
      bool resolved = false;
      try {
        WedderburnResult w = wedderburn_split(block, {opts.seed + std::uint64_t(i), opts.attempts});
        if (auto* iso = std::get_if<MatrixAlgebraIso>(&w)) {
          parts.push_back(wedderburn_resolution(act, *iso, i));
          resolved = true;
        }
      } catch (const InputError&) {
        // A split the earlier scan missed; fall through to the bar complex.
      }
      if (resolved) continue;
    } else if (block.dim() == 2 && center(block).dim() == 2 && rad_dim == 1) {
      parts.push_back(periodic_resolution(act, i, depth));
      continue;
    }
    parts.push_back(bar_resolution(act, i, depth, size_cap));
  }

  int max_len = 0;
  for (const auto& p : parts) max_len = std::max(max_len, int(p.terms.size()));

  FactorizationResolution out;
  std::vector<Bimodule> terms;
  std::vector<Matrix> diffs;
  // Assemble right-aligned: distance d from the augmentation, deepest first.
  for (int d = max_len; d >= 1; --d) {
    std::vector<std::pair<LeftModule, RightModule>> summands;
    std::vector<Bimodule> tensors;
    for (const auto& p : parts) {
      const int len = int(p.terms.size());
      if (len < d) continue;
      const TensorTerm& t = p.terms[len - d];
      summands.emplace_back(t.x, t.y);
      tensors.push_back(t.term);
    }
    Bimodule sum = direct_sum(tensors);
    FactorizationCertificate cert{std::move(summands),
                                  BimoduleMorphism(sum, sum, Matrix::identity(sum.dim()))};
    cert.verify();
    terms.push_back(sum);
    out.term_certificates.push_back(std::move(cert));
  }
  for (int d = max_len; d >= 2; --d) {
    int rows = 0, cols = 0;
    for (const auto& p : parts) {
      const int len = int(p.terms.size());
      if (len >= d - 1) rows += p.terms[len - (d - 1)].term.dim();
      if (len >= d) cols += p.terms[len - d].term.dim();
    }
    Matrix m(rows, cols);
    int r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      const int len = int(p.terms.size());
      if (len < d - 1) continue;
      const int rdim = p.terms[len - (d - 1)].term.dim();
      if (len >= d) {
        const Matrix& block = p.differentials[len - d];  // maps distance d -> d-1
        for (int r = 0; r < block.rows(); ++r)
          for (int c = 0; c < block.cols(); ++c)
            if (!is_zero(block.at(r, c))) m.at(r0 + r, c0 + c) = block.at(r, c);
        c0 += block.cols();
      }
      r0 += rdim;
    }
    diffs.push_back(std::move(m));
  }
  // Augmentation: block-diagonal local augmentations followed by the
  // assembly isomorphism onto the regular bimodule.
  int aug_cols = 0, target_cols = 0;
  for (const auto& p : parts) {
    aug_cols += p.terms.back().term.dim();
    target_cols += p.target.dim();
  }
  Matrix aug_block(target_cols, aug_cols);
  Matrix assembly(a.dim(), target_cols);
  {
    int r0 = 0, c0 = 0, u0 = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& p = parts[i];
      for (int r = 0; r < p.augmentation.rows(); ++r)
        for (int c = 0; c < p.augmentation.cols(); ++c)
          if (!is_zero(p.augmentation.at(r, c))) aug_block.at(r0 + r, c0 + c) = p.augmentation.at(r, c);
      const Matrix cols = dec.inclusions[p.summary.block_index] * p.basis_change;
      for (int r = 0; r < cols.rows(); ++r)
        for (int c = 0; c < cols.cols(); ++c)
          if (!is_zero(cols.at(r, c))) assembly.at(r, u0 + c) = cols.at(r, c);
      r0 += p.augmentation.rows();
      c0 += p.augmentation.cols();
      u0 += p.target.dim();
    }
  }
  std::vector<std::string> notes;
  for (const auto& p : parts)
    for (const auto& n : p.notes)
      if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  out.complex = ChainComplex(std::move(terms), std::move(diffs), regular_bimodule(a),
                             assembly * aug_block, std::move(notes));
  for (const auto& p : parts) out.blocks.push_back(p.summary);
  return out;
}

CokernelPresentation presentation_cokernel(const ChainComplex& res,
                                           const std::vector<Matrix>& functor_matrices) {
  const int L = res.term_count();
  if (int(functor_matrices.size()) != L)
    throw InputError("one functor matrix per term is required");
  for (int i = 0; i < L; ++i)
    if (functor_matrices[i].cols() != res.term(i).dim())
      throw InputError("functor matrix " + std::to_string(i) + " has the wrong width");
  // Commuting squares over the two final differentials: the realization must
  // induce well-defined maps, i.e. ker F_src inside ker (F_tgt . d).
  for (int k = L - 2; k >= 0 && k >= L - 3; --k) {
    const Matrix& fsrc = functor_matrices[k];
    const Matrix composed = functor_matrices[k + 1] * res.differential(k).map;
    Matrix stacked(fsrc.rows() + composed.rows(), fsrc.cols());
    for (int r = 0; r < fsrc.rows(); ++r) stacked.set_row(r, fsrc.row(r));
    for (int r = 0; r < composed.rows(); ++r) stacked.set_row(fsrc.rows() + r, composed.row(r));
    if (rank(stacked) != rank(fsrc))
      throw InputError("functor matrices do not commute over differential " + std::to_string(k));
  }
  const Matrix& f0 = functor_matrices.back();
  CokernelPresentation out;
  if (L == 1) {
    out.quotient_dim = f0.rows();
    out.projection = Matrix::identity(f0.rows());
    return out;
  }
  Cokernel ck = cokernel(f0 * res.differential(L - 2).map);
  out.quotient_dim = ck.quotient_dim;
  out.projection = std::move(ck.projection);
  return out;
}

}  // namespace blockfact
