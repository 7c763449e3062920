#pragma once

#include <cstdint>
#include <vector>

#include "blockfact/algebra.hpp"

namespace blockfact {
namespace zoo {

/// Q[eps]/(eps^2), basis {1, eps}.
Algebra dual_numbers();

/// M_n(Q) in the matrix-unit basis E_{ij} E_{kl} = [j=k] E_{il}.
Algebra matrix_algebra(int n);

/// Even part of the exterior algebra on two_d generators, with the wedge
/// product; dimension 2^(two_d - 1). two_d must be even, >= 2, <= 10.
Algebra even_exterior(int two_d);

/// Upper-triangular n x n matrices, dimension n(n+1)/2.
Algebra upper_triangular(int n);

/// Block-diagonal product; labels keep a factor prefix.
Algebra direct_product(const std::vector<Algebra>& factors);

/// (p-1) dual-number blocks, one Q block, p copies of M_2(Q); dim 6p - 1.
/// Requires p >= 2.
Algebra triplet_zhu(int p);

/// Q x M_2d(Q) x M_2d(Q) x even_exterior(2d); dim 2^(2d-1) + 8d^2 + 1.
/// Requires d >= 1.
Algebra sf_zhu(int d);

/// The same algebra in a seeded pseudo-random invertible rational change of
/// basis (a product of signed permutation, shear and sign factors, so the
/// transform and its inverse stay exact and small). The two presentations
/// are isomorphic by construction, so the table is not re-verified; call
/// verify() to re-run the full check.
Algebra scramble(const Algebra& a, std::uint64_t seed);

}  // namespace zoo
}  // namespace blockfact
