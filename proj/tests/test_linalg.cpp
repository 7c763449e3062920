#include <catch2/catch_amalgamated.hpp>

#include "blockfact/linalg.hpp"
#include "blockfact/prng.hpp"
#include "test_helpers.hpp"

using namespace blockfact;
using testing::mat;
using testing::vec;

TEST_CASE("rref matches hand elimination", "[linalg]") {
  SECTION("identity") {
    RrefResult r = rref(Matrix::identity(3));
    CHECK(r.mat == Matrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
  }
  SECTION("zero") {
    RrefResult r = rref(Matrix(2, 4));
    CHECK(r.mat == Matrix(2, 4));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
  }
  SECTION("dependent rows") {
    // Row-reduce by hand: r2 <- r2 - 2 r1 leaves [[1,2],[0,0]].
    RrefResult r = rref(mat({{"1", "2"}, {"2", "4"}}));
    CHECK(r.mat == mat({{"1", "2"}, {"0", "0"}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{0});
  }
}

TEST_CASE("kernel returns the canonical null space", "[linalg]") {
  CHECK(kernel(Matrix::identity(4)) == Subspace::zero(4));
  CHECK(kernel(Matrix(3, 4)) == Subspace::full(4));

  // Multiplication map of the dual-number tensor square, basis
  // (1x1, 1xeps, epsx1, epsxeps): rows are the 1- and eps-components.
  // Null space by hand: x0 = 0, x1 + x2 = 0, echelonized.
  const Matrix m = mat({{"1", "0", "0", "0"}, {"0", "1", "1", "0"}});
  const Subspace ker = kernel(m);
  CHECK(ker.dim() == 2);
  CHECK(ker.basis() == mat({{"0", "1", "-1", "0"}, {"0", "0", "0", "1"}}));
}

TEST_CASE("image returns the canonical column space", "[linalg]") {
  CHECK(image(Matrix::identity(3)) == Subspace::full(3));

  // Rank-one outer product of (1,2) with itself.
  const Subspace im = image(mat({{"1", "2"}, {"2", "4"}}));
  CHECK(im.dim() == 1);
  CHECK(im.basis() == mat({{"1", "2"}}));

  // The dual-number multiplication map is onto: delta_1(1x1) = 1,
  // delta_1(epsx1) = eps.
  CHECK(image(mat({{"1", "0", "0", "0"}, {"0", "1", "1", "0"}})) == Subspace::full(2));
}

TEST_CASE("cokernel presents the quotient by the image", "[linalg]") {
  SECTION("surjective map") {
    CHECK(cokernel(mat({{"1", "0", "0", "0"}, {"0", "1", "1", "0"}})).quotient_dim == 0);
  }
  SECTION("zero map") {
    Cokernel ck = cokernel(Matrix(3, 2));
    CHECK(ck.quotient_dim == 3);
    CHECK(ck.projection == Matrix::identity(3));
  }
  SECTION("periodic sum map has rank two") {
    // g on the tensor square: columns g(1x1)=1xeps+epsx1, g(1xeps)=g(epsx1)=epsxeps.
    const Matrix g = mat({{"0", "0", "0", "0"},
                          {"1", "0", "0", "0"},
                          {"1", "0", "0", "0"},
                          {"0", "1", "1", "0"}});
    Cokernel ck = cokernel(g);
    CHECK(ck.quotient_dim == 2);
    CHECK((ck.projection * g).is_zero());
  }
}

namespace {

Matrix random_matrix(SplitMix64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng.in_range(0, 2) == 0) m.at(r, c) = Rational(rng.in_range(-4, 4), 1 + rng.in_range(0, 3));
  return m;
}

}  // namespace

TEST_CASE("rank-nullity holds exactly", "[linalg]") {
  SplitMix64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + rng.in_range(0, 5), cols = 1 + rng.in_range(0, 5);
    const Matrix m = random_matrix(rng, rows, cols);
    CHECK(rank(m) + kernel(m).dim() == cols);
    CHECK(image(m).dim() == rank(m));
    Cokernel ck = cokernel(m);
    CHECK(ck.quotient_dim == rows - rank(m));
    CHECK((ck.projection * m).is_zero());
    for (int i = 0; i < kernel(m).dim(); ++i) {
      Vec prod = m.apply(kernel(m).basis_row(i));
      for (const auto& x : prod) CHECK(is_zero(x));
    }
  }
}

TEST_CASE("subspaces are canonical representatives", "[linalg]") {
  SplitMix64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const int rows = 2 + rng.in_range(0, 3), cols = 2 + rng.in_range(0, 4);
    const Matrix gen = random_matrix(rng, rows, cols);
    // Row-permuted and row-recombined generating sets span the same space.
    Matrix shuffled(rows, cols);
    for (int r = 0; r < rows; ++r) shuffled.set_row(r, gen.row(rows - 1 - r));
    Matrix mixed(rows + 1, cols);
    for (int r = 0; r < rows; ++r) mixed.set_row(r, gen.row(r));
    {
      Vec sum(cols);
      for (int r = 0; r < rows; ++r) add_scaled(sum, Rational(r + 1), gen.row(r));
      mixed.set_row(rows, sum);
    }
    const Subspace s1(cols, gen), s2(cols, shuffled), s3(cols, mixed);
    CHECK(s1 == s2);
    CHECK(s1 == s3);
    CHECK(s1.basis() == s2.basis());
  }
}

TEST_CASE("exact inverse", "[linalg]") {
  const Matrix m = mat({{"2", "1"}, {"7", "4"}});
  CHECK(inverse(m) == mat({{"4", "-1"}, {"-7", "2"}}));
  CHECK_FALSE(try_inverse(mat({{"1", "2"}, {"2", "4"}})).has_value());
}
