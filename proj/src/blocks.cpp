#include "blockfact/blocks.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "blockfact/errors.hpp"
#include "blockfact/prng.hpp"

namespace blockfact {

std::string to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::ProvenIndecomposable: return "proven indecomposable";
    case SplitStatus::NoSplitFoundUnderPolicy: return "no split found under policy";
  }
  return "?";
}

namespace {

Vec subtract(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Subalgebra span_subalgebra(const Algebra& a, const std::vector<Vec>& spanning, const Vec& unit) {
  const int n = a.dim();
  Matrix rows(int(spanning.size()), n);
  for (int i = 0; i < int(spanning.size()); ++i) rows.set_row(i, spanning[i]);
  Subspace span(n, rows);
  const int q = span.dim();
  Algebra::Table table(q, std::vector<SparseVec>(q));
  for (int i = 0; i < q; ++i) {
    const Vec bi = span.basis_row(i);
    for (int j = 0; j < q; ++j) {
      auto coords = span.coordinates(a.multiply(bi, span.basis_row(j)));
      if (!coords) throw std::logic_error("subalgebra span is not closed under multiplication");
      table[i][j] = sparsify(*coords);
    }
  }
  auto unit_coords = span.coordinates(unit);
  if (!unit_coords) throw std::logic_error("subalgebra unit lies outside its span");
  std::vector<std::string> labels(q);
  for (int t = 0; t < q; ++t) labels[t] = "s" + std::to_string(t);
  // Closure and associativity are inherited exactly from the parent product,
  // so the full table check is not repeated here.
  Algebra sub = Algebra::create_unverified(std::move(labels), *unit_coords, std::move(table));
  return Subalgebra{std::move(sub), span.basis().transpose(), span};
}

}  // namespace

Subalgebra ideal_subalgebra(const Algebra& a, const Vec& e) {
  std::vector<Vec> rows(a.dim());
  for (int i = 0; i < a.dim(); ++i) rows[i] = a.multiply(e, a.basis_vec(i));
  return span_subalgebra(a, rows, e);
}

Subalgebra corner_subalgebra(const Algebra& a, const Vec& e) {
  std::vector<Vec> rows(a.dim());
  for (int i = 0; i < a.dim(); ++i) rows[i] = a.multiply(e, a.multiply(a.basis_vec(i), e));
  return span_subalgebra(a, rows, e);
}

namespace {

// Splits z's minimal polynomial at a rational root: f = (t - root)^mult
// carries the full multiplicity so that f * (p/f) = p and the Bezout
// combination evaluates to an exact idempotent (no lifting step needed).
std::optional<Vec> idempotent_from_candidate(const Algebra& a, const Vec& z) {
  const Poly p = minimal_polynomial(a, z);
  const Poly sq = squarefree_part(p);
  if (sq.degree() < 2) return std::nullopt;
  const std::vector<Rational> roots = rational_roots(sq);
  if (roots.empty()) return std::nullopt;
  const Poly lin = Poly::linear_root(roots.front());
  Poly f = Poly::constant(1);
  Poly g = p;
  for (;;) {
    auto [quot, rem] = g.divmod(lin);
    if (!rem.is_zero()) break;
    f = f * lin;
    g = std::move(quot);
  }
  if (g.degree() < 0 || g.degree() == p.degree()) return std::nullopt;
  auto [u, v] = bezout(f, g);
  Vec e = eval_poly(a, u * f, z);
  if (vec_is_zero(e) || e == a.unit()) return std::nullopt;
  if (a.multiply(e, e) != e) throw std::logic_error("Bezout combination failed to be idempotent");
  return e;
}

// Candidate stream shared by the central and the full-algebra scans: basis
// vectors of the search space, pairwise sums, then seeded random
// small-integer combinations.
std::optional<Vec> scan_for_idempotent(const Algebra& a, const std::vector<Vec>& basis,
                                       std::uint64_t seed, int attempts) {
  const int c = int(basis.size());
  for (const Vec& z : basis)
    if (auto e = idempotent_from_candidate(a, z)) return e;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      Vec z(a.dim());
      add_scaled(z, Rational(1), basis[i]);
      add_scaled(z, Rational(1), basis[j]);
      if (auto e = idempotent_from_candidate(a, z)) return e;
    }
  SplitMix64 rng(seed);
  for (int t = 0; t < attempts; ++t) {
    // Sparse combinations first; they stay closer to the zero-divisor locus.
    const int terms = std::min(c, 2 + t % 3);
    Vec z(a.dim());
    for (int s = 0; s < terms; ++s) {
      const int pick = rng.in_range(0, c - 1);
      const int coeff = rng.in_range(-3, 3);
      if (coeff != 0) add_scaled(z, Rational(coeff), basis[pick]);
    }
    if (vec_is_zero(z)) continue;
    if (auto e = idempotent_from_candidate(a, z)) return e;
  }
  return std::nullopt;
}

std::vector<Vec> subspace_rows(const Subspace& s) {
  std::vector<Vec> rows(s.dim());
  for (int i = 0; i < s.dim(); ++i) rows[i] = s.basis_row(i);
  return rows;
}

std::optional<Vec> find_central_split(const Algebra& a, const Subspace& z,
                                      std::uint64_t seed, int attempts) {
  return scan_for_idempotent(a, subspace_rows(z), seed, attempts);
}

SplitStatus leaf_status(const Algebra& a, const Subspace& z) {
  if (z.dim() == 1) return SplitStatus::ProvenIndecomposable;
  // Center modulo its radical: one-dimensional quotient proves the block
  // cannot split over any extension either.
  Subalgebra zalg = span_subalgebra(a, subspace_rows(z), a.unit());
  const int semisimple_dim = zalg.algebra.dim() - radical(zalg.algebra).dim();
  return semisimple_dim == 1 ? SplitStatus::ProvenIndecomposable
                             : SplitStatus::NoSplitFoundUnderPolicy;
}

}  // namespace

std::vector<int> BlockDecomposition::dimension_multiset() const {
  std::vector<int> dims;
  dims.reserve(blocks.size());
  for (const auto& b : blocks) dims.push_back(b.dim());
  std::sort(dims.begin(), dims.end());
  return dims;
}

void BlockDecomposition::verify() const {
  const int n = parent.dim();
  const int m = block_count();
  if (int(idempotents.size()) != m || int(inclusions.size()) != m || int(statuses.size()) != m)
    throw VerifyFailure("block decomposition has inconsistent list lengths");
  Vec total(n);
  int dim_total = 0;
  for (int i = 0; i < m; ++i) {
    const Vec& e = idempotents[i].coeffs;
    add_scaled(total, Rational(1), e);
    dim_total += blocks[i].dim();
    if (parent.multiply(e, e) != e) throw VerifyFailure("idempotency fails for block " + std::to_string(i));
    for (int k = 0; k < n; ++k) {
      const Vec bk = parent.basis_vec(k);
      if (parent.multiply(e, bk) != parent.multiply(bk, e))
        throw VerifyFailure("centrality fails for block " + std::to_string(i));
    }
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (!vec_is_zero(parent.multiply(e, idempotents[j].coeffs)))
        throw VerifyFailure("orthogonality fails for blocks " + std::to_string(i) + "," + std::to_string(j));
    }
    // The inclusion embeds the block multiplicatively and sends its unit to e.
    const Algebra& b = blocks[i];
    if (inclusions[i].apply(b.unit()) != e)
      throw VerifyFailure("inclusion does not map the block unit to the idempotent");
    for (int p = 0; p < b.dim(); ++p)
      for (int q = 0; q < b.dim(); ++q) {
        const Vec lhs = parent.multiply(inclusions[i].col(p), inclusions[i].col(q));
        const Vec rhs = inclusions[i].apply(densify(b.product(p, q), b.dim()));
        if (lhs != rhs) throw VerifyFailure("inclusion is not multiplicative for block " + std::to_string(i));
      }
  }
  if (total != parent.unit()) throw VerifyFailure("idempotents do not sum to the unit");
  if (dim_total != n) throw VerifyFailure("block dimensions do not add up to the algebra dimension");
}

BlockDecomposition central_idempotents(const Algebra& a, const SearchOptions& opts) {
  struct Item {
    Algebra alg;
    Matrix inclusion;  // into the original algebra
  };
  std::deque<Item> pending;
  pending.push_back({a, Matrix::identity(a.dim())});

  BlockDecomposition out{a, {}, {}, {}, {}};
  std::uint64_t scan_counter = 0;
  while (!pending.empty()) {
    Item item = std::move(pending.front());
    pending.pop_front();
    const Subspace z = center(item.alg);
    std::optional<Vec> e;
    if (z.dim() > 1) e = find_central_split(item.alg, z, opts.seed + scan_counter, opts.attempts);
    ++scan_counter;
    if (e) {
      Subalgebra first = ideal_subalgebra(item.alg, *e);
      Subalgebra second = ideal_subalgebra(item.alg, subtract(item.alg.unit(), *e));
      pending.push_front({second.algebra, item.inclusion * second.inclusion});
      pending.push_front({first.algebra, item.inclusion * first.inclusion});
      continue;
    }
    out.idempotents.emplace_back(a, item.inclusion.apply(item.alg.unit()));
    out.blocks.push_back(item.alg);
    out.inclusions.push_back(item.inclusion);
    out.statuses.push_back(leaf_status(item.alg, z));
  }
  out.verify();
  return out;
}

std::optional<Vec> find_splitting_idempotent(const Algebra& a, const SearchOptions& opts) {
  std::vector<Vec> basis(a.dim());
  for (int i = 0; i < a.dim(); ++i) basis[i] = a.basis_vec(i);
  return scan_for_idempotent(a, basis, opts.seed, opts.attempts);
}

namespace {

// lambda with product == lambda * e, for a product known to lie in span{e}.
Rational scalar_in_span(const Vec& product, const Vec& e) {
  int k0 = -1;
  for (int k = 0; k < int(e.size()); ++k)
    if (!is_zero(e[k])) { k0 = k; break; }
  Rational lambda = product[k0] / e[k0];
  for (int k = 0; k < int(e.size()); ++k)
    if (product[k] != lambda * e[k])
      throw std::logic_error("pairing product escaped the idempotent line");
  return lambda;
}

}  // namespace

WedderburnResult wedderburn_split(const Algebra& block, const SearchOptions& opts) {
  if (radical(block).dim() != 0)
    throw InputError("wedderburn_split requires a semisimple block");
  const Subspace z = center(block);
  if (z.dim() > 1) {
    if (find_central_split(block, z, opts.seed, opts.attempts))
      throw InputError("wedderburn_split requires a single block, but a central splitting idempotent exists");
    std::ostringstream msg;
    msg << "center has dimension " << z.dim()
        << " over Q; the block only splits over an extension field";
    return NotSplitReport{msg.str(), z.dim(), 0};
  }

  // Corner descent: cut with any idempotent the scan finds, recurse into the
  // smaller corner until nothing splits.
  Matrix inclusion = Matrix::identity(block.dim());
  Algebra corner = block;
  std::uint64_t scan_counter = 1;
  const int corner_attempts = opts.attempts * 4;
  while (corner.dim() > 1) {
    auto e = find_splitting_idempotent(corner, {opts.seed + scan_counter++, corner_attempts});
    if (!e) break;
    Subalgebra c1 = corner_subalgebra(corner, *e);
    Subalgebra c2 = corner_subalgebra(corner, subtract(corner.unit(), *e));
    const Subalgebra& pick = (c1.algebra.dim() <= c2.algebra.dim()) ? c1 : c2;
    inclusion = inclusion * pick.inclusion;
    corner = pick.algebra;
  }
  if (corner.dim() > 1) {
    std::ostringstream msg;
    msg << "no splitting idempotent found under the policy; the smallest corner reached has dimension "
        << corner.dim() << " (division-algebra behaviour)";
    return NotSplitReport{msg.str(), 1, corner.dim()};
  }

  const Vec e = inclusion.apply(corner.unit());
  const int dim = block.dim();
  std::vector<Vec> xrows(dim), yrows(dim);
  for (int i = 0; i < dim; ++i) {
    xrows[i] = block.multiply(block.basis_vec(i), e);  // B e
    yrows[i] = block.multiply(e, block.basis_vec(i));  // e B
  }
  Matrix xgen(dim, dim), ygen(dim, dim);
  for (int i = 0; i < dim; ++i) { xgen.set_row(i, xrows[i]); ygen.set_row(i, yrows[i]); }
  const Subspace X(dim, xgen), Y(dim, ygen);
  const int n = X.dim();
  if (Y.dim() != n || n * n != dim)
    throw std::logic_error("column/row spaces of a rank-one idempotent have inconsistent dimensions");

  Matrix pairing(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pairing.at(i, j) = scalar_in_span(block.multiply(Y.basis_row(i), X.basis_row(j)), e);
  const Matrix pinv = inverse(pairing);
  std::vector<Vec> xb(n, Vec(dim));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) add_scaled(xb[j], pinv.at(k, j), X.basis_row(k));

  std::vector<Element> units;
  Matrix from(dim, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec unit_ij = block.multiply(xb[i], Y.basis_row(j));
      from.set_col(i * n + j, unit_ij);
      units.emplace_back(block, std::move(unit_ij));
    }

  // Exact sanity of the recovered presentation.
  Vec diag_sum(dim);
  for (int i = 0; i < n; ++i) add_scaled(diag_sum, Rational(1), units[i * n + i].coeffs);
  if (diag_sum != block.unit()) throw std::logic_error("matrix units do not sum to the unit");
  for (int i = 0; i < n * n; ++i)
    for (int j = 0; j < n * n; ++j) {
      const Vec prod = block.multiply(units[i].coeffs, units[j].coeffs);
      Vec expect(dim);
      if (i % n == j / n) expect = units[(i / n) * n + (j % n)].coeffs;
      if (prod != expect) throw std::logic_error("matrix unit relations fail");
    }
  return MatrixAlgebraIso{n, Element(block, e), std::move(units), inverse(from), std::move(from)};
}

}  // namespace blockfact
