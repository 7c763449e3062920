#include "blockfact/zoo.hpp"

#include <algorithm>
#include <string>

#include "blockfact/errors.hpp"
#include "blockfact/linalg.hpp"
#include "blockfact/prng.hpp"

namespace blockfact {
namespace zoo {

Algebra dual_numbers() {
  Algebra::Table t(2, std::vector<SparseVec>(2));
  t[0][0] = {{0, 1}};
  t[0][1] = {{1, 1}};
  t[1][0] = {{1, 1}};
  // eps * eps = 0
  return Algebra::create({"1", "eps"}, Vec{1, 0}, std::move(t));
}

Algebra matrix_algebra(int n) {
  if (n < 1) throw InputError("matrix_algebra requires n >= 1");
  const int dim = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };
  Algebra::Table t(dim, std::vector<SparseVec>(dim));
  std::vector<std::string> labels(dim);
  Vec unit(dim);
  for (int i = 0; i < n; ++i) {
    unit[idx(i, i)] = 1;
    for (int j = 0; j < n; ++j) {
      labels[idx(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) t[idx(i, j)][idx(k, l)] = {{idx(i, l), 1}};
    }
  }
  return Algebra::create(std::move(labels), std::move(unit), std::move(t));
}

namespace {

// Wedge of disjoint sorted index sets; sign counts the transpositions needed
// to interleave them.
int wedge_sign(unsigned a, unsigned b, int bits) {
  int inversions = 0;
  for (int i = 0; i < bits; ++i)
    if (b & (1u << i))
      for (int j = i + 1; j < bits; ++j)
        if (a & (1u << j)) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::string wedge_label(unsigned mask, int bits) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < bits; ++i)
    if (mask & (1u << i)) {
      if (!out.empty()) out += "^";
      out += "e" + std::to_string(i + 1);
    }
  return out;
}

}  // namespace

Algebra even_exterior(int two_d) {
  if (two_d < 2 || two_d % 2 != 0) throw InputError("even_exterior requires an even parameter >= 2");
  if (two_d > 10) throw InputError("even_exterior parameter capped at 10 (dimension 512)");
  std::vector<unsigned> basis;
  for (unsigned mask = 0; mask < (1u << two_d); ++mask)
    if (__builtin_popcount(mask) % 2 == 0) basis.push_back(mask);
  std::sort(basis.begin(), basis.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const int dim = int(basis.size());
  std::vector<int> index_of(1u << two_d, -1);
  for (int i = 0; i < dim; ++i) index_of[basis[i]] = i;
  Algebra::Table t(dim, std::vector<SparseVec>(dim));
  std::vector<std::string> labels(dim);
  for (int i = 0; i < dim; ++i) {
    labels[i] = wedge_label(basis[i], two_d);
    for (int j = 0; j < dim; ++j) {
      if (basis[i] & basis[j]) continue;  // repeated generator wedges to zero
      t[i][j] = {{index_of[basis[i] | basis[j]], wedge_sign(basis[i], basis[j], two_d)}};
    }
  }
  Vec unit(dim);
  unit[0] = 1;
  return Algebra::create(std::move(labels), std::move(unit), std::move(t));
}

Algebra upper_triangular(int n) {
  if (n < 1) throw InputError("upper_triangular requires n >= 1");
  std::vector<std::pair<int, int>> positions;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) positions.emplace_back(i, j);
  const int dim = int(positions.size());
  std::vector<std::vector<int>> index_of(n, std::vector<int>(n, -1));
  for (int k = 0; k < dim; ++k) index_of[positions[k].first][positions[k].second] = k;
  Algebra::Table t(dim, std::vector<SparseVec>(dim));
  std::vector<std::string> labels(dim);
  Vec unit(dim);
  for (int k = 0; k < dim; ++k) {
    auto [i, j] = positions[k];
    labels[k] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
    if (i == j) unit[k] = 1;
    for (int l = 0; l < dim; ++l) {
      auto [p, q] = positions[l];
      if (j == p) t[k][l] = {{index_of[i][q], 1}};
    }
  }
  return Algebra::create(std::move(labels), std::move(unit), std::move(t));
}

Algebra direct_product(const std::vector<Algebra>& factors) {
  if (factors.empty()) throw InputError("direct_product needs at least one factor");
  int dim = 0;
  for (const auto& f : factors) dim += f.dim();
  Algebra::Table t(dim, std::vector<SparseVec>(dim));
  std::vector<std::string> labels(dim);
  Vec unit(dim);
  int offset = 0;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const Algebra& f = factors[fi];
    for (int i = 0; i < f.dim(); ++i) {
      labels[offset + i] = std::to_string(fi) + "." + f.labels()[i];
      unit[offset + i] = f.unit()[i];
      for (int j = 0; j < f.dim(); ++j) {
        SparseVec entry;
        for (const auto& [k, v] : f.product(i, j)) entry.emplace_back(offset + k, v);
        t[offset + i][offset + j] = std::move(entry);
      }
    }
    offset += f.dim();
  }
  return Algebra::create(std::move(labels), std::move(unit), std::move(t));
}

Algebra triplet_zhu(int p) {
  if (p < 2) throw InputError("triplet_zhu requires p >= 2");
  std::vector<Algebra> factors;
  for (int i = 0; i < p - 1; ++i) factors.push_back(dual_numbers());
  factors.push_back(matrix_algebra(1));
  for (int i = 0; i < p; ++i) factors.push_back(matrix_algebra(2));
  return direct_product(factors);
}

Algebra sf_zhu(int d) {
  if (d < 1) throw InputError("sf_zhu requires d >= 1");
  return direct_product(
      {matrix_algebra(1), matrix_algebra(2 * d), matrix_algebra(2 * d), even_exterior(2 * d)});
}

namespace {

// One signed permutation + one lower and one upper shear pass, each row
// touched once. Inverses of such factors stay within {0, +-1} entries, so the
// scrambled table remains exact and small.
Matrix random_unimodular(int n, SplitMix64& rng) {
  Matrix m = Matrix::identity(n);
  auto permute = [&]() {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.in_range(0, i)]);
    Matrix pm(n, n);
    for (int i = 0; i < n; ++i) pm.at(perm[i], i) = rng.in_range(0, 1) == 0 ? 1 : -1;
    m = pm * m;
  };
  auto shear = [&](bool lower) {
    Matrix s = Matrix::identity(n);
    for (int i = 0; i < n; ++i) {
      int j;
      if (lower && i > 0) j = rng.in_range(0, i - 1);
      else if (!lower && i < n - 1) j = rng.in_range(i + 1, n - 1);
      else continue;
      s.at(i, j) = rng.in_range(0, 1) == 0 ? 1 : -1;
    }
    m = s * m;
  };
  permute();
  shear(true);
  shear(false);
  permute();
  shear(true);
  shear(false);
  return m;
}

}  // namespace

Algebra scramble(const Algebra& a, std::uint64_t seed) {
  const int n = a.dim();
  SplitMix64 rng(seed);
  const Matrix s = random_unimodular(n, rng);
  const Matrix sinv = inverse(s);
  Algebra::Table t(n, std::vector<SparseVec>(n));
  for (int p = 0; p < n; ++p) {
    const Vec fp = s.col(p);
    for (int q = 0; q < n; ++q)
      t[p][q] = sparsify(sinv.apply(a.multiply(fp, s.col(q))));
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  // A change of basis of a verified table stays associative and unital.
  return Algebra::create_unverified(std::move(labels), sinv.apply(a.unit()), std::move(t));
}

}  // namespace zoo
}  // namespace blockfact
