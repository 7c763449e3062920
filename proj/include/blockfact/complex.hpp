#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blockfact/bimodule.hpp"

namespace blockfact {

/// A finite complex of bimodules stored augmentation-last:
///
///   terms[0] --d[0]--> terms[1] --> ... --> terms[L-1] --aug--> target --> 0
///
/// Construction verifies that every map is a bimodule morphism, that
/// consecutive differentials compose to zero, and that the augmentation
/// kills the last differential.
class ChainComplex {
 public:
  /// Empty handle; usable only as a target for assignment.
  ChainComplex() = default;
  ChainComplex(std::vector<Bimodule> terms, std::vector<Matrix> differentials, Bimodule target,
               Matrix augmentation, std::vector<std::string> notes = {});

  int term_count() const;
  const Bimodule& term(int i) const;
  /// differential(i) maps term(i) to term(i+1); there are term_count()-1.
  const BimoduleMorphism& differential(int i) const;
  const BimoduleMorphism& augmentation() const;
  const Bimodule& target() const;
  const std::vector<std::string>& notes() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// One record per checkable position, counted from the resolved target:
/// position 0 is the target itself (exact there = augmentation surjective),
/// position p >= 1 is the term at distance p from the target. The deepest
/// term of a truncation has no incoming map and gets no record.
struct PositionRecord {
  int position;
  int term_dim;
  int incoming_rank;        // rank of the map arriving at this position
  int outgoing_kernel_dim;  // kernel of the map leaving this position
  bool exact;               // kernel of outgoing == image of incoming, canonically
};

struct ExactnessCertificate {
  std::vector<PositionRecord> positions;
  std::vector<std::string> notes;
  bool all_exact() const;
};

/// Kernel/image comparison at every checkable position. Reports failures,
/// never throws on them.
ExactnessCertificate verify_exactness(const ChainComplex& c);

inline constexpr long long kDefaultSizeCap = 20000;

/// Truncated standard resolution: terms A^(x)(depth+1), ..., A^(x)2 with the
/// alternating-sum differentials and multiplication as augmentation; the
/// outer bimodule structure acts on the first and last tensor factors.
/// Throws InputError when dim(a)^(depth+1) exceeds the size cap.
ChainComplex bar_complex(const Algebra& a, int depth, long long size_cap = kDefaultSizeCap);

/// The 2-periodic resolution of the dual numbers acting on themselves:
/// ... --g--> P --f--> P --m--> A --> 0 with P the tensor square,
/// f(1(x)1) = eps(x)1 - 1(x)eps, g(1(x)1) = eps(x)1 + 1(x)eps, m = multiply.
/// f sits adjacent to m: that is the orientation under which every composite
/// vanishes exactly (the certificate carries a note to that effect).
ChainComplex dual_numbers_resolution(int length);

struct BlockResolutionSummary {
  enum class Kind { Wedderburn, Periodic, Bar };
  int block_index = 0;
  Kind kind = Kind::Bar;
  int block_dim = 0;
  /// 0 for a length-zero certificate (iso augmentation), otherwise the
  /// number of resolution terms of the truncation.
  int length = 0;
  int matrix_rank = 0;  // n for Wedderburn blocks
};

std::string to_string(BlockResolutionSummary::Kind k);

struct FactorizationResolution {
  ChainComplex complex;
  /// Aligned with the complex's terms; every term is certified as a direct
  /// sum of left-(x)-right tensor products.
  std::vector<FactorizationCertificate> term_certificates;
  std::vector<BlockResolutionSummary> blocks;
};

/// Blockwise resolution of the regular bimodule: matrix blocks get their
/// length-zero tensor certificate, dual-number blocks the periodic
/// resolution, everything else the truncated standard resolution.
FactorizationResolution factorization_resolution(const Algebra& a, const BlockDecomposition& dec,
                                                 int depth, long long size_cap = kDefaultSizeCap,
                                                 const SearchOptions& opts = {});

struct CokernelPresentation {
  int quotient_dim = 0;
  Matrix projection;  // realized degree-0 coordinates -> quotient coordinates
};

/// Realizes the final stretch of a resolution through per-term matrices
/// (term coordinates -> realized coordinates) and presents the realized
/// target as the cokernel of the realized last differential. The squares
/// over the two final differentials must commute (kernel containment),
/// otherwise InputError.
CokernelPresentation presentation_cokernel(const ChainComplex& res,
                                           const std::vector<Matrix>& functor_matrices);

}  // namespace blockfact
